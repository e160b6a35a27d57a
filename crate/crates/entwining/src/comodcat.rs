//! Entwined modules: right `A`-modules and right `C`-comodules with a compatibility square.

use crate::algstruct::{check_comodule, check_right_module, Algebra, Coalgebra, Comodule, RightModule};
use crate::entwine::Entwining;
use crate::error::{expect_shape, Result};
use crate::exactlin::{tensor, Mat};
use crate::hom::{bijection_report, MapSpace};
use crate::report::Report;

/// A carrier with `action: M ⊗ A → M` (`m × m·a`) and `coaction: M → M ⊗ C` (`m·c × m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwinedModule {
    pub dim: usize,
    pub action: Mat,
    pub coaction: Mat,
}

impl EntwinedModule {
    pub fn new(e: &Entwining, action: Mat, coaction: Mat) -> Result<EntwinedModule> {
        let dim = action.rows();
        expect_shape("action", &action, dim, dim * e.alg_dim())?;
        expect_shape("coaction", &coaction, dim * e.coalg_dim(), dim)?;
        Ok(EntwinedModule { dim, action, coaction })
    }

    pub fn zero(e: &Entwining) -> EntwinedModule {
        let f = e.field();
        EntwinedModule {
            dim: 0,
            action: Mat::zeros(f, 0, 0),
            coaction: Mat::zeros(f, 0, 0),
        }
    }

    /// `A` itself with multiplication and a given coaction `A → A ⊗ C`.
    pub fn on_algebra(e: &Entwining, coaction: Mat) -> Result<EntwinedModule> {
        EntwinedModule::new(e, e.alg().mult().clone(), coaction)
    }

    pub fn right_module(&self) -> RightModule {
        RightModule {
            dim: self.dim,
            action: self.action.clone(),
        }
    }
}

pub fn check_entwined_module(e: &Entwining, x: &EntwinedModule) -> Result<Report> {
    expect_shape("action", &x.action, x.dim, x.dim * e.alg_dim())?;
    expect_shape("coaction", &x.coaction, x.dim * e.coalg_dim(), x.dim)?;
    let (m, a, c) = (x.dim, e.alg_dim(), e.coalg_dim());
    let idm = Mat::identity(e.field(), m);
    let mut r = Report::new("entwined module");
    r.absorb("module", check_right_module(e.alg(), &x.right_module()));
    r.absorb("comodule", check_comodule(e.coalg(), &forget_fc(x)));
    r.push_eq(
        "compatibility",
        &(&x.coaction * &x.action),
        &(tensor(&[&x.action, &e.coalg().id()]) * tensor(&[&idm, e.psi()]) * tensor(&[&x.coaction, &e.alg().id()])),
        &[m, a],
        &[m, c],
    );
    Ok(r)
}

/// The induction functor `N ↦ N ⊗ A` with `N ⊗ μ` and `(N ⊗ ψ)(Δ_N ⊗ A)`.
pub fn induce_tc(e: &Entwining, n: &Comodule) -> Result<EntwinedModule> {
    expect_shape("comodule coaction", &n.coaction, n.dim * e.coalg_dim(), n.dim)?;
    let idn = Mat::identity(e.field(), n.dim);
    let action = tensor(&[&idn, e.alg().mult()]);
    let coaction = tensor(&[&idn, e.psi()]) * tensor(&[&n.coaction, &e.alg().id()]);
    Ok(EntwinedModule {
        dim: n.dim * e.alg_dim(),
        action,
        coaction,
    })
}

/// The forgetful functor to comodules.
pub fn forget_fc(x: &EntwinedModule) -> Comodule {
    Comodule {
        dim: x.dim,
        coaction: x.coaction.clone(),
    }
}

/// All `f: X → Y` that are `A`-linear and `C`-colinear.
pub fn hom_space(e: &Entwining, x: &EntwinedModule, y: &EntwinedModule) -> MapSpace {
    let (ia, ic) = (e.alg().id(), e.coalg().id());
    MapSpace::solve(e.field(), y.dim, x.dim, |f| {
        vec![
            f * &x.action - &y.action * tensor(&[f, &ia]),
            &y.coaction * f - tensor(&[f, &ic]) * &x.coaction,
        ]
    })
}

pub fn comodule_hom_space(c: &Coalgebra, x: &Comodule, y: &Comodule) -> MapSpace {
    let ic = c.id();
    MapSpace::solve(c.field(), y.dim, x.dim, |f| {
        vec![&y.coaction * f - tensor(&[f, &ic]) * &x.coaction]
    })
}

pub fn right_module_hom_space(a: &Algebra, x: &RightModule, y: &RightModule) -> MapSpace {
    let ia = a.id();
    MapSpace::solve(a.field(), y.dim, x.dim, |f| {
        vec![f * &x.action - &y.action * tensor(&[f, &ia])]
    })
}

/// The bijection `Hom(N ⊗ A, X) ≅ Hom^C(N, X)`: `ζ ↦ ζ(N ⊗ η)`, `ξ ↦ μ_X(ξ ⊗ A)`.
pub fn adjunction_check_tc_fc(e: &Entwining, n: &Comodule, x: &EntwinedModule) -> Result<Report> {
    let induced = induce_tc(e, n)?;
    let entwined = hom_space(e, &induced, x);
    let plain = comodule_hom_space(e.coalg(), n, &forget_fc(x));
    let idn = Mat::identity(e.field(), n.dim);
    let unit_in = tensor(&[&idn, e.alg().unit()]);
    let ia = e.alg().id();
    Ok(bijection_report(
        "induction adjunction",
        &entwined,
        &plain,
        |zeta| zeta * &unit_in,
        |xi| &x.action * tensor(&[xi, &ia]),
    ))
}
