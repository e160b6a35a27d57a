//! Contramodules and entwined contramodules.
//!
//! A contraaction `π_M: (C, M) → M` is stored as an `m × m·c` matrix on the vectorized
//! `Hom(C, M) ≅ M ⊗ C*` (see [`crate::hom`]). Left actions are stored as `A ⊗ M → M`; the
//! adjoint form `μ_M: M → (A, M)` is available through [`EntwinedContraModule::mu`].

use crate::algstruct::{check_left_module, Algebra, Coalgebra, LeftModule};
use crate::entwine::Entwining;
use crate::error::{expect_shape, Result};
use crate::exactlin::{tensor, Field, Mat};
use crate::hom::{bijection_report, hom_map, left_action_to_mu, mu_to_left_action, pull, push, MapSpace};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContraModule {
    pub dim: usize,
    pub pi: Mat,
}

impl ContraModule {
    pub fn new(c: &Coalgebra, pi: Mat) -> Result<ContraModule> {
        let dim = pi.rows();
        expect_shape("contraaction", &pi, dim, dim * c.dim())?;
        Ok(ContraModule { dim, pi })
    }

    pub fn zero(f: Field) -> ContraModule {
        ContraModule {
            dim: 0,
            pi: Mat::zeros(f, 0, 0),
        }
    }
}

/// A carrier with contraaction `pi` and left action `action: A ⊗ M → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwinedContraModule {
    pub dim: usize,
    pub pi: Mat,
    pub action: Mat,
}

impl EntwinedContraModule {
    pub fn new(e: &Entwining, pi: Mat, action: Mat) -> Result<EntwinedContraModule> {
        let dim = pi.rows();
        expect_shape("contraaction", &pi, dim, dim * e.coalg_dim())?;
        expect_shape("action", &action, dim, e.alg_dim() * dim)?;
        Ok(EntwinedContraModule { dim, pi, action })
    }

    /// Builds from the adjoint action `μ_M: M → (A, M)`.
    pub fn from_mu(e: &Entwining, pi: Mat, mu: &Mat) -> Result<EntwinedContraModule> {
        EntwinedContraModule::new(e, pi, mu_to_left_action(mu, e.alg_dim()))
    }

    pub fn zero(e: &Entwining) -> EntwinedContraModule {
        let f = e.field();
        EntwinedContraModule {
            dim: 0,
            pi: Mat::zeros(f, 0, 0),
            action: Mat::zeros(f, 0, 0),
        }
    }

    /// `μ_M: M → (A, M)`.
    pub fn mu(&self, alg_dim: usize) -> Mat {
        left_action_to_mu(&self.action, alg_dim)
    }

    pub fn contramodule(&self) -> ContraModule {
        ContraModule {
            dim: self.dim,
            pi: self.pi.clone(),
        }
    }

    pub fn left_module(&self) -> LeftModule {
        LeftModule {
            dim: self.dim,
            action: self.action.clone(),
        }
    }
}

pub fn check_contramodule(c: &Coalgebra, x: &ContraModule) -> Result<Report> {
    expect_shape("contraaction", &x.pi, x.dim, x.dim * c.dim())?;
    let (m, n) = (x.dim, c.dim());
    let idm = Mat::identity(c.field(), m);
    let mut r = Report::new("contramodule");
    // both sides map (C, C, M) = Hom(C ⊗ C, M) to M
    r.push_eq(
        "contraassociativity",
        &(&x.pi * pull(c.comult(), m)),
        &(&x.pi * push(n, &x.pi)),
        &[m, n, n],
        &[m],
    );
    r.push_eq("counit", &(&x.pi * pull(c.counit(), m)), &idm, &[m], &[m]);
    Ok(r)
}

/// `(C, k^m0)` with contraaction `(Δ, k^m0)`.
pub fn free_contramodule(c: &Coalgebra, m0: usize) -> ContraModule {
    ContraModule {
        dim: m0 * c.dim(),
        pi: pull(c.comult(), m0),
    }
}

pub fn check_entwined_contramodule(e: &Entwining, x: &EntwinedContraModule) -> Result<Report> {
    expect_shape("contraaction", &x.pi, x.dim, x.dim * e.coalg_dim())?;
    expect_shape("action", &x.action, x.dim, e.alg_dim() * x.dim)?;
    let (m, a, c) = (x.dim, e.alg_dim(), e.coalg_dim());
    let mu = x.mu(a);
    let mut r = Report::new("entwined contramodule");
    r.absorb("module", check_left_module(e.alg(), &x.left_module()));
    r.absorb("contramodule", check_contramodule(e.coalg(), &x.contramodule())?);
    // μ_M π_M = (A, π_M)(ψ, M)(C, μ_M) as maps (C, M) → (A, M)
    r.push_eq(
        "compatibility",
        &(&mu * &x.pi),
        &(push(a, &x.pi) * pull(e.psi(), m) * push(c, &mu)),
        &[m, c],
        &[m, a],
    );
    Ok(r)
}

/// The functor `N ↦ (A, N)` with `μ = (μ, N)` and `π = (A, π_N)(ψ, N)`.
pub fn induce_contra_t(e: &Entwining, n: &ContraModule) -> Result<EntwinedContraModule> {
    expect_shape("contraaction", &n.pi, n.dim, n.dim * e.coalg_dim())?;
    let a = e.alg_dim();
    let mu = pull(e.alg().mult(), n.dim);
    let pi = push(a, &n.pi) * pull(e.psi(), n.dim);
    EntwinedContraModule::from_mu(e, pi, &mu)
}

/// The functor `N ↦ (C, N)` with `π = (Δ, N)` and `μ = (ψ, N)(C, μ_N)`.
pub fn induce_a_t(e: &Entwining, n: &LeftModule) -> Result<EntwinedContraModule> {
    expect_shape("left action", &n.action, n.dim, e.alg_dim() * n.dim)?;
    let (a, c) = (e.alg_dim(), e.coalg_dim());
    let mu_n = left_action_to_mu(&n.action, a);
    let pi = pull(e.coalg().comult(), n.dim);
    let mu = pull(e.psi(), n.dim) * push(c, &mu_n);
    EntwinedContraModule::from_mu(e, pi, &mu)
}

/// All `f: X → Y` commuting with both contraactions and both actions.
pub fn contra_hom_space(e: &Entwining, x: &EntwinedContraModule, y: &EntwinedContraModule) -> MapSpace {
    let c = e.coalg_dim();
    let ia = e.alg().id();
    MapSpace::solve(e.field(), y.dim, x.dim, |f| {
        vec![
            f * &x.pi - &y.pi * push(c, f),
            f * &x.action - &y.action * tensor(&[&ia, f]),
        ]
    })
}

pub fn contramodule_hom_space(c: &Coalgebra, x: &ContraModule, y: &ContraModule) -> MapSpace {
    let n = c.dim();
    MapSpace::solve(c.field(), y.dim, x.dim, |f| vec![f * &x.pi - &y.pi * push(n, f)])
}

pub fn left_module_hom_space(a: &Algebra, x: &LeftModule, y: &LeftModule) -> MapSpace {
    let ia = a.id();
    MapSpace::solve(a.field(), y.dim, x.dim, |f| {
        vec![f * &x.action - &y.action * tensor(&[&ia, f])]
    })
}

/// `Hom_contra(F X, N) ≅ Hom(X, (A, N))`: `ξ ↦ (η, N) ξ` with inverse `ζ ↦ (A, ζ) μ_X`.
pub fn adjunction_check_f_t(e: &Entwining, x: &EntwinedContraModule, n: &ContraModule) -> Result<Report> {
    let a = e.alg_dim();
    let induced = induce_contra_t(e, n)?;
    let entwined = contra_hom_space(e, x, &induced);
    let plain = contramodule_hom_space(e.coalg(), &x.contramodule(), n);
    let evaluate_unit = pull(e.alg().unit(), n.dim);
    let mu_x = x.mu(a);
    Ok(bijection_report(
        "coinduction adjunction",
        &entwined,
        &plain,
        |xi| &evaluate_unit * xi,
        |zeta| push(a, zeta) * &mu_x,
    ))
}

/// `Hom((C, M), N) ≅ Hom_A(M, F N)`: `ζ ↦ ζ (ε, M)` with inverse `ξ ↦ π_N (C, ξ)`.
pub fn adjunction_check_at_af(e: &Entwining, m: &LeftModule, n: &EntwinedContraModule) -> Result<Report> {
    let c = e.coalg_dim();
    let induced = induce_a_t(e, m)?;
    let entwined = contra_hom_space(e, &induced, n);
    let plain = left_module_hom_space(e.alg(), m, &n.left_module());
    let counit_in = pull(e.coalg().counit(), m.dim);
    Ok(bijection_report(
        "cofree adjunction",
        &entwined,
        &plain,
        |zeta| zeta * &counit_in,
        |xi| &n.pi * push(c, xi),
    ))
}

/// `(f₁, …, fₙ, M)` for an identity target of dimension `m`.
pub fn pre(slots: &[&Mat], m: usize) -> Mat {
    let f = slots.first().map(|s| s.field()).expect("at least one slot");
    hom_map(slots, &Mat::identity(f, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algstruct::group_algebra;
    use crate::entwine::doi_koppinen;

    fn kz2() -> Entwining {
        let h = group_algebra(2, Field::Rational);
        doi_koppinen(&h, &h.alg, h.coalg.comult()).unwrap()
    }

    #[test]
    fn free_contramodule_passes() {
        let e = kz2();
        for m0 in 0..3 {
            let x = free_contramodule(e.coalg(), m0);
            assert!(check_contramodule(e.coalg(), &x).unwrap().passed());
        }
    }

    #[test]
    fn induced_objects_pass() {
        let e = kz2();
        let t = induce_contra_t(&e, &free_contramodule(e.coalg(), 1)).unwrap();
        assert!(check_entwined_contramodule(&e, &t).unwrap().passed());
        let s = induce_a_t(&e, &LeftModule::regular(e.alg())).unwrap();
        assert!(check_entwined_contramodule(&e, &s).unwrap().passed());
    }

    #[test]
    fn adjunctions_on_regular_objects() {
        let e = kz2();
        let n = free_contramodule(e.coalg(), 1);
        let x = induce_contra_t(&e, &n).unwrap();
        assert!(adjunction_check_f_t(&e, &x, &n).unwrap().passed());
        let m = LeftModule::regular(e.alg());
        let y = induce_a_t(&e, &m).unwrap();
        assert!(adjunction_check_at_af(&e, &m, &y).unwrap().passed());
    }
}
