//! Entwining structures `(A, C, ψ)` with `ψ: C ⊗ A → A ⊗ C`.

use crate::algstruct::{
    check_comodule, trivial_algebra, trivial_coalgebra, Algebra, Bialgebra, Coalgebra, Comodule,
};
use crate::error::{expect_shape, Error, Result};
use crate::exactlin::{tensor, Field, Mat};
use crate::measuring_galois::{canonical_map, GaloisData};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entwining {
    alg: Algebra,
    coalg: Coalgebra,
    psi: Mat,
}

impl Entwining {
    pub fn new(alg: Algebra, coalg: Coalgebra, psi: Mat) -> Result<Entwining> {
        if alg.field() != coalg.field() || psi.field() != alg.field() {
            return Err(Error::FieldMismatch);
        }
        let size = alg.dim() * coalg.dim();
        expect_shape("psi", &psi, size, size)?;
        Ok(Entwining { alg, coalg, psi })
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn coalg(&self) -> &Coalgebra {
        &self.coalg
    }

    /// `ψ` as an `a·c × c·a` matrix.
    pub fn psi(&self) -> &Mat {
        &self.psi
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn alg_dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn coalg_dim(&self) -> usize {
        self.coalg.dim()
    }

    /// Same algebra and coalgebra, different `ψ`.
    pub fn with_psi(&self, psi: Mat) -> Result<Entwining> {
        Entwining::new(self.alg.clone(), self.coalg.clone(), psi)
    }
}

/// A pair `(f: A → A′, g: C → C′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwiningMorphism {
    pub f: Mat,
    pub g: Mat,
}

pub fn check_entwining(e: &Entwining) -> Report {
    let (a, c) = (e.alg_dim(), e.coalg_dim());
    let (mu, eta) = (e.alg.mult(), e.alg.unit());
    let (delta, eps) = (e.coalg.comult(), e.coalg.counit());
    let (ia, ic, psi) = (e.alg.id(), e.coalg.id(), &e.psi);
    let mut r = Report::new("entwining");
    r.push_eq(
        "psi-mult",
        &(psi * tensor(&[&ic, mu])),
        &(tensor(&[mu, &ic]) * tensor(&[&ia, psi]) * tensor(&[psi, &ia])),
        &[c, a, a],
        &[a, c],
    );
    r.push_eq(
        "psi-unit",
        &(psi * tensor(&[&ic, eta])),
        &tensor(&[eta, &ic]),
        &[c],
        &[a, c],
    );
    r.push_eq(
        "psi-comult",
        &(tensor(&[&ia, delta]) * psi),
        &(tensor(&[psi, &ic]) * tensor(&[&ic, psi]) * tensor(&[delta, &ia])),
        &[c, a],
        &[a, c, c],
    );
    r.push_eq(
        "psi-counit",
        &(tensor(&[&ia, eps]) * psi),
        &tensor(&[eps, &ia]),
        &[c, a],
        &[a],
    );
    r
}

pub fn check_entwining_morphism(src: &Entwining, dst: &Entwining, m: &EntwiningMorphism) -> Result<Report> {
    expect_shape("f", &m.f, dst.alg_dim(), src.alg_dim())?;
    expect_shape("g", &m.g, dst.coalg_dim(), src.coalg_dim())?;
    let (a, c) = (src.alg_dim(), src.coalg_dim());
    let (a2, c2) = (dst.alg_dim(), dst.coalg_dim());
    let (f, g) = (&m.f, &m.g);
    let mut r = Report::new("entwining morphism");
    r.push_eq(
        "f-mult",
        &(f * src.alg.mult()),
        &(dst.alg.mult() * tensor(&[f, f])),
        &[a, a],
        &[a2],
    );
    r.push_eq("f-unit", &(f * src.alg.unit()), dst.alg.unit(), &[], &[a2]);
    r.push_eq(
        "g-comult",
        &(dst.coalg.comult() * g),
        &(tensor(&[g, g]) * src.coalg.comult()),
        &[c],
        &[c2, c2],
    );
    r.push_eq("g-counit", &(dst.coalg.counit() * g), src.coalg.counit(), &[c], &[]);
    r.push_eq(
        "intertwining",
        &(tensor(&[f, g]) * &src.psi),
        &(&dst.psi * tensor(&[g, f])),
        &[c, a],
        &[a2, c2],
    );
    Ok(r)
}

/// `(A, k, id)`: entwined modules are plain right `A`-modules.
pub fn trivial_entwining(a: &Algebra) -> Entwining {
    Entwining::new(a.clone(), trivial_coalgebra(a.field()), a.id()).expect("trivial shapes")
}

/// `(k, C, id)`: entwined modules are plain right `C`-comodules.
pub fn trivial_entwining_coalg(c: &Coalgebra) -> Entwining {
    Entwining::new(trivial_algebra(c.field()), c.clone(), c.id()).expect("trivial shapes")
}

/// Checks that `rho: A → A ⊗ H` makes `A` a right `H`-comodule algebra.
pub fn check_comodule_algebra(h: &Bialgebra, a: &Algebra, rho: &Mat) -> Result<Report> {
    let (n, d) = (a.dim(), h.alg.dim());
    expect_shape("rho", rho, n * d, n)?;
    let f = a.field();
    let mut r = Report::new("comodule algebra");
    r.absorb(
        "coaction",
        check_comodule(
            &h.coalg,
            &Comodule {
                dim: n,
                coaction: rho.clone(),
            },
        ),
    );
    let middle_swap = tensor(&[&a.id(), &Mat::swap(f, d, n), &h.alg.id()]);
    r.push_eq(
        "multiplicative",
        &(rho * a.mult()),
        &(tensor(&[a.mult(), h.alg.mult()]) * middle_swap * tensor(&[rho, rho])),
        &[n, n],
        &[n, d],
    );
    r.push_eq("unital", &(rho * a.unit()), &tensor(&[a.unit(), h.alg.unit()]), &[], &[n, d]);
    Ok(r)
}

/// The Doi-Koppinen entwining `ψ(h ⊗ a) = a₀ ⊗ h·a₁` of a right `H`-comodule algebra.
pub fn doi_koppinen(h: &Bialgebra, a: &Algebra, rho: &Mat) -> Result<Entwining> {
    if h.alg.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    let report = check_comodule_algebra(h, a, rho)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "coaction does not make the algebra a comodule algebra (failed: {})",
            report.failed_ids().join(", ")
        )));
    }
    let f = a.field();
    let (n, d) = (a.dim(), h.alg.dim());
    let psi = tensor(&[&a.id(), h.alg.mult()]) * tensor(&[&Mat::swap(f, d, n), &h.alg.id()]) * tensor(&[&h.alg.id(), rho]);
    Entwining::new(a.clone(), h.coalg.clone(), psi)
}

/// The entwining canonically attached to a `C`-Galois extension:
/// `ψ(c ⊗ a) = can(can⁻¹(1 ⊗ c)·a)`.
pub fn galois_entwining(g: &GaloisData) -> Result<Entwining> {
    let can = canonical_map(g);
    let inverse = can
        .inverse()
        .ok_or_else(|| Error::Precondition("canonical map is not bijective".into()))?;
    let (alg, coalg) = (&g.alg, &g.coalg);
    let lifted = &can.domain.section * inverse * tensor(&[alg.unit(), &coalg.id()]);
    let psi = &can.unreduced * tensor(&[&alg.id(), alg.mult()]) * tensor(&[&lifted, &alg.id()]);
    Entwining::new(alg.clone(), coalg.clone(), psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algstruct::{check_algebra, group_algebra, matrix_algebra};

    #[test]
    fn builders_pass() {
        for f in [Field::Rational, Field::prime(5).unwrap()] {
            for n in 1..=3 {
                let h = group_algebra(n, f);
                let e = doi_koppinen(&h, &h.alg, h.coalg.comult()).unwrap();
                assert!(check_entwining(&e).passed(), "n={n}");
            }
            assert!(check_entwining(&trivial_entwining(&matrix_algebra(2, f))).passed());
            assert!(check_entwining(&trivial_entwining_coalg(&group_algebra(2, f).coalg)).passed());
        }
    }

    #[test]
    fn perturbed_psi_fails() {
        let f = Field::Rational;
        let h = group_algebra(2, f);
        let e = doi_koppinen(&h, &h.alg, h.coalg.comult()).unwrap();
        let mut psi = e.psi().clone();
        psi.set(0, 0, f.from_i64(2));
        let broken = e.with_psi(psi).unwrap();
        assert!(!check_entwining(&broken).passed());
    }

    #[test]
    fn group_quotient_is_a_morphism() {
        let f = Field::Rational;
        let (h4, h2) = (group_algebra(4, f), group_algebra(2, f));
        let src = doi_koppinen(&h4, &h4.alg, h4.coalg.comult()).unwrap();
        let dst = doi_koppinen(&h2, &h2.alg, h2.coalg.comult()).unwrap();
        let quotient = Mat::from_fn(f, 2, 4, |i, j| if j % 2 == i { f.one() } else { f.zero() });
        let m = EntwiningMorphism {
            f: quotient.clone(),
            g: quotient,
        };
        assert!(check_entwining_morphism(&src, &dst, &m).unwrap().passed());
        let zero = EntwiningMorphism {
            f: Mat::zeros(f, 2, 4),
            g: Mat::zeros(f, 2, 4),
        };
        let report = check_entwining_morphism(&src, &dst, &zero).unwrap();
        assert!(report.failed_ids().contains(&"f-unit"));
        assert!(report.failed_ids().contains(&"g-counit"));
    }

    #[test]
    fn rejects_non_comodule_algebra() {
        let f = Field::Rational;
        let h = group_algebra(2, f);
        assert!(doi_koppinen(&h, &h.alg, &Mat::zeros(f, 4, 2)).is_err());
        assert!(check_algebra(&h.alg).passed());
    }
}
