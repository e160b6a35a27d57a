//! Exact dense linear and multilinear algebra over ℚ and 𝔽_p.

mod elim;
mod mat;
mod scalar;
mod tensor;

pub use elim::{
    cokernel, echelon, image_basis, kernel_basis, rank, solve_affine, solve_left, solve_matrix, AffineSolution,
    Echelon, QuotientPresentation, SubspaceBasis,
};
pub use mat::{kron, Mat};
pub use scalar::{Field, Scalar, MAX_MODULUS};
pub use tensor::{Leg, Tensor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("denominator is not invertible mod {p}")]
    NotInvertible { p: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("bad tensor shape: {0}")]
    Shape(String),
}

/// Kronecker product of a non-empty list of factors, first factor major.
pub fn tensor(factors: &[&Mat]) -> Mat {
    let (first, rest) = factors.split_first().expect("tensor of no factors");
    rest.iter().fold((*first).clone(), |acc, f| acc.kron(f))
}
