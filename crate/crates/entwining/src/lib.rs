//! Exact finite-dimensional computations with entwining structures, entwined modules and
//! contramodules, measurings, Galois extensions, and the separability, Frobenius and Maschke
//! criteria attached to them.

pub mod algstruct;
pub mod comodcat;
pub mod contracat;
pub mod corpus;
pub mod criteria;
pub mod entwine;
pub mod error;
pub mod exactlin;
pub mod hom;
pub mod measuring_galois;
pub mod report;

pub use error::{Error, Result};
