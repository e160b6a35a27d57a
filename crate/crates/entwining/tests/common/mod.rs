//! Morphism conditions written out directly, independent of the hom-space solver.
#![allow(dead_code)]

use entwining::algstruct::Comodule;
use entwining::comodcat::{hom_space, EntwinedModule};
use entwining::contracat::{contra_hom_space, EntwinedContraModule};
use entwining::entwine::Entwining;
use entwining::exactlin::{tensor, Mat};

/// Objects up to this many map entries are also checked through the hom-space solver.
pub const SOLVER_LIMIT: usize = 100;

pub fn comodule_map(e: &Entwining, x: &Comodule, y: &Comodule, g: &Mat) -> bool {
    tensor(&[g, &e.coalg().id()]) * &x.coaction == &y.coaction * g
}

pub fn module_map(e: &Entwining, x: &EntwinedModule, y: &EntwinedModule, g: &Mat) -> bool {
    g * &x.action == &y.action * tensor(&[g, &e.alg().id()])
        && tensor(&[g, &e.coalg().id()]) * &x.coaction == &y.coaction * g
}

pub fn contra_map(e: &Entwining, x: &EntwinedContraModule, y: &EntwinedContraModule, g: &Mat) -> bool {
    let ic = Mat::identity(e.field(), e.coalg_dim());
    g * &x.pi == &y.pi * tensor(&[g, &ic]) && g * &x.action == &y.action * tensor(&[&e.alg().id(), g])
}

/// `g` is a morphism of entwined modules, and small cases agree with the solver.
pub fn is_module_morphism(e: &Entwining, x: &EntwinedModule, y: &EntwinedModule, g: &Mat) -> bool {
    let direct = module_map(e, x, y, g);
    if x.dim * y.dim <= SOLVER_LIMIT {
        assert_eq!(hom_space(e, x, y).contains(g), direct);
    }
    direct
}

pub fn is_contra_morphism(e: &Entwining, x: &EntwinedContraModule, y: &EntwinedContraModule, g: &Mat) -> bool {
    let direct = contra_map(e, x, y, g);
    if x.dim * y.dim <= SOLVER_LIMIT {
        assert_eq!(contra_hom_space(e, x, y).contains(g), direct);
    }
    direct
}
