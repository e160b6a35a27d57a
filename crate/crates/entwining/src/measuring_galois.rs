//! Measurings between entwining structures, the functors they induce on entwined
//! (contra)modules, and `C`-Galois extensions.

use serde::Serialize;

use crate::algstruct::{check_comodule, trivial_coalgebra, Algebra, Coalgebra, Comodule, LeftModule, RightModule};
use crate::comodcat::{hom_space, induce_tc, EntwinedModule};
use crate::contracat::{contra_hom_space, induce_a_t, induce_contra_t, free_contramodule, ContraModule, EntwinedContraModule};
use crate::entwine::{galois_entwining, trivial_entwining, Entwining};
use crate::error::{expect_shape, Error, Result};
use crate::exactlin::{cokernel, kernel_basis, rank, solve_left, solve_matrix, tensor, Field, Mat, QuotientPresentation, SubspaceBasis};
use crate::hom::{bijection_report, hom_map, left_action_to_mu, pull, push, LinearSystem};
use crate::report::Report;

fn id(f: Field, n: usize) -> Mat {
    Mat::identity(f, n)
}

/// A measuring `(α, γ)` from `src = (A′, C′, ψ′)` to `dst = (A, C, ψ)`.
///
/// `alpha: C′ ⊗ A′ → A` is `a × c′·a′`; `gamma: C′ → A ⊗ C` is `a·c × c′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measuring {
    pub src: Entwining,
    pub dst: Entwining,
    pub alpha: Mat,
    pub gamma: Mat,
}

impl Measuring {
    pub fn new(src: Entwining, dst: Entwining, alpha: Mat, gamma: Mat) -> Result<Measuring> {
        if src.field() != dst.field() {
            return Err(Error::FieldMismatch);
        }
        expect_shape("alpha", &alpha, dst.alg_dim(), src.coalg_dim() * src.alg_dim())?;
        expect_shape("gamma", &gamma, dst.alg_dim() * dst.coalg_dim(), src.coalg_dim())?;
        Ok(Measuring { src, dst, alpha, gamma })
    }

    /// The measuring `(ε ⊗ A, η ⊗ C)` from an entwining to itself.
    pub fn identity(e: &Entwining) -> Measuring {
        let alpha = tensor(&[e.coalg().counit(), &e.alg().id()]);
        let gamma = tensor(&[e.alg().unit(), &e.coalg().id()]);
        Measuring {
            src: e.clone(),
            dst: e.clone(),
            alpha,
            gamma,
        }
    }

    fn field(&self) -> Field {
        self.dst.field()
    }
}

pub fn check_measuring(m: &Measuring) -> Result<Report> {
    let (src, dst) = (&m.src, &m.dst);
    let (a1, c1) = (src.alg_dim(), src.coalg_dim());
    let (a, c) = (dst.alg_dim(), dst.coalg_dim());
    let (alpha, gamma) = (&m.alpha, &m.gamma);
    let (ia, ic) = (dst.alg().id(), dst.coalg().id());
    let (ia1, ic1) = (src.alg().id(), src.coalg().id());
    let (mu, eta, delta, eps) = (dst.alg().mult(), dst.alg().unit(), dst.coalg().comult(), dst.coalg().counit());
    let (mu1, eta1, delta1, eps1) = (src.alg().mult(), src.alg().unit(), src.coalg().comult(), src.coalg().counit());
    let mut r = Report::new("measuring");
    r.push_eq(
        "alpha-mult",
        &(alpha * tensor(&[&ic1, mu1])),
        &(mu * tensor(&[alpha, alpha]) * tensor(&[&ic1, src.psi(), &ia1]) * tensor(&[delta1, &ia1, &ia1])),
        &[c1, a1, a1],
        &[a],
    );
    r.push_eq(
        "alpha-unit",
        &(alpha * tensor(&[&ic1, eta1])),
        &(eta * eps1),
        &[c1],
        &[a],
    );
    r.push_eq(
        "gamma-comult",
        &(tensor(&[&ia, delta]) * gamma),
        &(tensor(&[mu, &ic, &ic]) * tensor(&[&ia, dst.psi(), &ic]) * tensor(&[gamma, gamma]) * delta1),
        &[c1],
        &[a, c, c],
    );
    r.push_eq(
        "gamma-counit",
        &(tensor(&[&ia, eps]) * gamma),
        &(eta * eps1),
        &[c1],
        &[a],
    );
    r.push_eq(
        "compatibility",
        &(tensor(&[mu, &ic]) * tensor(&[alpha, gamma]) * tensor(&[&ic1, src.psi()]) * tensor(&[delta1, &ia1])),
        &(tensor(&[mu, &ic]) * tensor(&[&ia, dst.psi()]) * tensor(&[gamma, alpha]) * tensor(&[delta1, &ia1])),
        &[c1, a1],
        &[a, c],
    );
    Ok(r)
}

// ---------------------------------------------------------------------------------------
// Galois data

/// An algebra `A` with a right `C`-coaction `Δ_A: A → A ⊗ C` (`a·c × a`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisData {
    pub alg: Algebra,
    pub coalg: Coalgebra,
    pub coaction: Mat,
}

impl GaloisData {
    pub fn new(alg: Algebra, coalg: Coalgebra, coaction: Mat) -> Result<GaloisData> {
        if alg.field() != coalg.field() {
            return Err(Error::FieldMismatch);
        }
        expect_shape("galois coaction", &coaction, alg.dim() * coalg.dim(), alg.dim())?;
        Ok(GaloisData { alg, coalg, coaction })
    }

    pub fn check(&self) -> Report {
        check_comodule(
            &self.coalg,
            &Comodule {
                dim: self.alg.dim(),
                coaction: self.coaction.clone(),
            },
        )
    }
}

/// The coinvariant subalgebra `B ⊆ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coinvariants {
    pub basis: SubspaceBasis,
    pub algebra: Algebra,
    /// `ι_B: B → A`, the basis vectors as columns.
    pub inclusion: Mat,
}

/// `B = {b : Δ_A(b·a) = b·Δ_A(a) for all a}`.
pub fn coinvariants(g: &GaloisData) -> Coinvariants {
    let f = g.alg.field();
    let (n, c) = (g.alg.dim(), g.coalg.dim());
    let mu = g.alg.mult();
    let mu_c = tensor(&[mu, &id(f, c)]);
    let system = LinearSystem::assemble(f, n, |b| {
        (0..n)
            .map(|k| {
                let a = Mat::basis_vector(f, n, k);
                &g.coaction * mu * b.kron(&a) - &mu_c * b.kron(&(&g.coaction * &a))
            })
            .collect()
    });
    let basis = system.solutions();
    let inclusion = basis.basis.clone();
    let b = basis.dim();
    let products = mu * inclusion.kron(&inclusion);
    let mult = solve_matrix(&inclusion, &products)
        .expect("shapes")
        .expect("coinvariants are closed under multiplication");
    let unit = solve_matrix(&inclusion, g.alg.unit())
        .expect("shapes")
        .expect("the unit is coinvariant");
    let algebra = Algebra::new(mult, unit).expect("subalgebra shapes");
    debug_assert_eq!(algebra.dim(), b);
    Coinvariants {
        basis,
        algebra,
        inclusion,
    }
}

/// The canonical map `can: A ⊗_B A → A ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalMap {
    /// `A ⊗_B A` as a quotient of `A ⊗ A`.
    pub domain: QuotientPresentation,
    /// `(μ ⊗ C)(A ⊗ Δ_A)` on `A ⊗ A`.
    pub unreduced: Mat,
    /// `can` in quotient coordinates.
    pub can: Mat,
}

impl CanonicalMap {
    pub fn rank(&self) -> usize {
        rank(&self.can)
    }

    pub fn is_bijective(&self) -> bool {
        self.can.rows() == self.can.cols() && self.rank() == self.can.rows()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_bijective() {
            return None;
        }
        solve_matrix(&self.can, &id(self.can.field(), self.can.rows())).expect("square")
    }
}

pub fn canonical_map(g: &GaloisData) -> CanonicalMap {
    let f = g.alg.field();
    let (n, c) = (g.alg.dim(), g.coalg.dim());
    let b = coinvariants(g);
    let ia = id(f, n);
    let mu = g.alg.mult();
    let insert_b = tensor(&[&ia, &b.inclusion, &ia]);
    let relations = tensor(&[mu, &ia]) * &insert_b - tensor(&[&ia, mu]) * &insert_b;
    let domain = cokernel(&relations);
    let unreduced = tensor(&[mu, &id(f, c)]) * tensor(&[&ia, &g.coaction]);
    assert!(
        (&unreduced * &relations).is_zero(),
        "canonical map is balanced over the coinvariants"
    );
    let can = &unreduced * &domain.section;
    CanonicalMap { domain, unreduced, can }
}

pub fn is_galois(g: &GaloisData) -> bool {
    canonical_map(g).is_bijective()
}

/// Summary of the Galois analysis of `(A, C, Δ_A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisSummary {
    pub coinvariant_basis: Vec<Vec<crate::exactlin::Scalar>>,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub can_rank: usize,
    pub can: Vec<Vec<crate::exactlin::Scalar>>,
    pub galois: bool,
}

pub fn galois_summary(g: &GaloisData) -> GaloisSummary {
    let b = coinvariants(g);
    let can = canonical_map(g);
    let columns = |m: &Mat| (0..m.cols()).map(|j| m.column(j).into_entries()).collect();
    let rows = |m: &Mat| (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    GaloisSummary {
        coinvariant_basis: columns(&b.inclusion),
        domain_dim: can.domain.dim(),
        codomain_dim: can.can.rows(),
        can_rank: can.rank(),
        galois: can.is_bijective(),
        can: rows(&can.can),
    }
}

/// `(ι_B, Δ_A ∘ η)` from `(B, k, id)` to the given entwining (which must make `Δ_A` an
/// entwined-module coaction on `A`).
pub fn galois_measuring_with(g: &GaloisData, dst: &Entwining) -> Result<Measuring> {
    let b = coinvariants(g);
    let src = trivial_entwining(&b.algebra);
    let gamma = &g.coaction * g.alg.unit();
    Measuring::new(src, dst.clone(), b.inclusion, gamma)
}

/// The Galois measuring into the canonical entwining of a `C`-Galois extension.
pub fn galois_measuring(g: &GaloisData) -> Result<Measuring> {
    let dst = galois_entwining(g)?;
    galois_measuring_with(g, &dst)
}

/// `A₀ = {a : Δ_A(a) = a·Δ_A(1)}`.
pub fn galois_a0(g: &GaloisData) -> SubspaceBasis {
    let f = g.alg.field();
    let c = g.coalg.dim();
    let defining = &g.coaction
        - tensor(&[g.alg.mult(), &id(f, c)]) * tensor(&[&g.alg.id(), &g.coaction]) * tensor(&[&g.alg.id(), g.alg.unit()]);
    kernel_basis(&defining)
}

/// `(A ⊗ C)₀`, the kernel of `A ⊗ Δ − ((μ ⊗ C)(A ⊗ ψ) ⊗ C)(A ⊗ C ⊗ Δ_A)(A ⊗ C ⊗ η)` for the
/// canonically associated entwining.
pub fn galois_ac0(g: &GaloisData) -> Result<SubspaceBasis> {
    let e = galois_entwining(g)?;
    let (ia, ic) = (g.alg.id(), g.coalg.id());
    let twisted = tensor(&[&(tensor(&[g.alg.mult(), &ic]) * tensor(&[&ia, e.psi()])), &ic])
        * tensor(&[&ia, &ic, &g.coaction])
        * tensor(&[&ia, &ic, g.alg.unit()]);
    let defining = tensor(&[&ia, g.coalg.comult()]) - twisted;
    Ok(kernel_basis(&defining))
}

// ---------------------------------------------------------------------------------------
// Comodule side

/// `M ⊗ C′` over the source, for a right `A`-module `M`: coaction `M ⊗ Δ′` and action
/// `(μ_M ⊗ C′)(M ⊗ α ⊗ C′)(M ⊗ C′ ⊗ ψ′)(M ⊗ Δ′ ⊗ A′)`.
pub fn induce_from_module(m: &Measuring, x: &RightModule) -> Result<EntwinedModule> {
    expect_shape("right action", &x.action, x.dim, x.dim * m.dst.alg_dim())?;
    let f = m.field();
    let idm = id(f, x.dim);
    let (ic1, ia1) = (m.src.coalg().id(), m.src.alg().id());
    let delta1 = m.src.coalg().comult();
    let coaction = tensor(&[&idm, delta1]);
    let action = tensor(&[&x.action, &ic1])
        * tensor(&[&idm, &m.alpha, &ic1])
        * tensor(&[&idm, &ic1, m.src.psi()])
        * tensor(&[&idm, delta1, &ia1]);
    Ok(EntwinedModule {
        dim: x.dim * m.src.coalg_dim(),
        action,
        coaction,
    })
}

/// `M′ ⊗ A` over the target, for a right `C′`-comodule `M′`: action `M′ ⊗ μ` and coaction
/// `(M′ ⊗ μ ⊗ C)(M′ ⊗ A ⊗ ψ)(M′ ⊗ γ ⊗ A)(Δ_{M′} ⊗ A)`.
pub fn induce_from_comodule(m: &Measuring, y: &Comodule) -> Result<EntwinedModule> {
    expect_shape("comodule coaction", &y.coaction, y.dim * m.src.coalg_dim(), y.dim)?;
    let f = m.field();
    let idm = id(f, y.dim);
    let (ia, ic) = (m.dst.alg().id(), m.dst.coalg().id());
    let mu = m.dst.alg().mult();
    let action = tensor(&[&idm, mu]);
    let coaction = tensor(&[&idm, mu, &ic])
        * tensor(&[&idm, &ia, m.dst.psi()])
        * tensor(&[&idm, &m.gamma, &ia])
        * tensor(&[&y.coaction, &ia]);
    Ok(EntwinedModule {
        dim: y.dim * m.dst.alg_dim(),
        action,
        coaction,
    })
}

/// `t^M = Δ_M ⊗ C′ − (μ_M ⊗ C ⊗ C′)(M ⊗ γ ⊗ C′)(M ⊗ Δ′)`, a map `M ⊗ C′ → M ⊗ C ⊗ C′`.
pub fn t_upper(m: &Measuring, x: &EntwinedModule) -> Mat {
    let f = m.field();
    let idm = id(f, x.dim);
    let ic1 = m.src.coalg().id();
    tensor(&[&x.coaction, &ic1])
        - tensor(&[&x.action, &m.dst.coalg().id(), &ic1])
            * tensor(&[&idm, &m.gamma, &ic1])
            * tensor(&[&idm, m.src.coalg().comult()])
}

/// `t_{M′} = μ_{M′} ⊗ A − (M′ ⊗ μ)(M′ ⊗ α ⊗ A)(Δ_{M′} ⊗ A′ ⊗ A)`, a map `M′ ⊗ A′ ⊗ A → M′ ⊗ A`.
pub fn t_lower(m: &Measuring, y: &EntwinedModule) -> Mat {
    let f = m.field();
    let idm = id(f, y.dim);
    let ia = m.dst.alg().id();
    tensor(&[&y.action, &ia])
        - tensor(&[&idm, m.dst.alg().mult()])
            * tensor(&[&idm, &m.alpha, &ia])
            * tensor(&[&y.coaction, &m.src.alg().id(), &ia])
}

/// A subobject given by a kernel: the object and its inclusion into the ambient carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelObject<T> {
    pub object: T,
    pub inclusion: Mat,
}

/// A quotient object given by a cokernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientObject<T> {
    pub object: T,
    pub quotient: QuotientPresentation,
}

fn restrict(inclusion: &Mat, image: &Mat, what: &str) -> Mat {
    solve_matrix(inclusion, image)
        .expect("restriction shapes")
        .unwrap_or_else(|| panic!("{what} does not restrict to the kernel"))
}

/// `M □̂_C C′ = ker t^M`, an entwined module over the source.
pub fn cotensor(m: &Measuring, x: &EntwinedModule) -> Result<KernelObject<EntwinedModule>> {
    let ambient = induce_from_module(m, &x.right_module())?;
    let kernel = kernel_basis(&t_upper(m, x)).basis;
    let k = kernel.cols();
    let f = m.field();
    let action = restrict(
        &kernel,
        &(&ambient.action * tensor(&[&kernel, &m.src.alg().id()])),
        "cotensor action",
    );
    let coaction = restrict(
        &tensor(&[&kernel, &m.src.coalg().id()]),
        &(&ambient.coaction * &kernel),
        "cotensor coaction",
    );
    debug_assert_eq!(action.field(), f);
    Ok(KernelObject {
        object: EntwinedModule {
            dim: k,
            action,
            coaction,
        },
        inclusion: kernel,
    })
}

/// `M′ ⊗̂_{A′} A = coker t_{M′}`, an entwined module over the target.
pub fn hat_tensor(m: &Measuring, y: &EntwinedModule) -> Result<QuotientObject<EntwinedModule>> {
    let ambient = induce_from_comodule(m, &Comodule {
        dim: y.dim,
        coaction: y.coaction.clone(),
    })?;
    let relations = t_lower(m, y);
    let quotient = cokernel(&relations);
    let (p, s) = (&quotient.projection, &quotient.section);
    let (ia, ic) = (m.dst.alg().id(), m.dst.coalg().id());
    assert!(
        (p * &ambient.action * tensor(&[&relations, &ia])).is_zero(),
        "hat tensor action does not descend"
    );
    assert!(
        (tensor(&[p, &ic]) * &ambient.coaction * &relations).is_zero(),
        "hat tensor coaction does not descend"
    );
    let action = p * &ambient.action * tensor(&[s, &ia]);
    let coaction = tensor(&[p, &ic]) * &ambient.coaction * s;
    Ok(QuotientObject {
        object: EntwinedModule {
            dim: quotient.dim(),
            action,
            coaction,
        },
        quotient,
    })
}

/// `(p ⊗ C′)(M′ ⊗ η ⊗ C′)Δ_{M′}: M′ → (M′ ⊗̂ A) ⊗ C′`, before restricting to the cotensor.
fn omega_raw(m: &Measuring, y: &EntwinedModule, hat: &QuotientObject<EntwinedModule>) -> Mat {
    let f = m.field();
    let ic1 = m.src.coalg().id();
    tensor(&[&hat.quotient.projection, &ic1]) * tensor(&[&id(f, y.dim), m.dst.alg().unit(), &ic1]) * &y.coaction
}

/// The unit `Ω_{M′}: M′ → (M′ ⊗̂_{A′} A) □̂_C C′`.
pub fn unit_omega(m: &Measuring, y: &EntwinedModule) -> Result<Mat> {
    let hat = hat_tensor(m, y)?;
    let cot = cotensor(m, &hat.object)?;
    Ok(restrict(&cot.inclusion, &omega_raw(m, y, &hat), "unit"))
}

/// `μ_M(M ⊗ ε′ ⊗ A)`: `M ⊗ C′ ⊗ A → M`.
fn evaluate_counit(m: &Measuring, x: &EntwinedModule) -> Mat {
    let f = m.field();
    &x.action * tensor(&[&id(f, x.dim), m.src.coalg().counit(), &m.dst.alg().id()])
}

/// The counit `Υ_M: (M □̂_C C′) ⊗̂_{A′} A → M`.
pub fn counit_upsilon(m: &Measuring, x: &EntwinedModule) -> Result<Mat> {
    let cot = cotensor(m, x)?;
    let hat = hat_tensor(m, &cot.object)?;
    let raw = evaluate_counit(m, x) * tensor(&[&cot.inclusion, &m.dst.alg().id()]);
    assert!(
        (&raw * t_lower(m, &cot.object)).is_zero(),
        "counit does not descend to the hat tensor"
    );
    Ok(raw * &hat.quotient.section)
}

/// `Hom(M′ ⊗̂ A, M) ≅ Hom(M′, M □̂ C′)` on bases.
pub fn adjunction_check_comodule_side(m: &Measuring, x: &EntwinedModule, y: &EntwinedModule) -> Result<Report> {
    let hat = hat_tensor(m, y)?;
    let cot = cotensor(m, x)?;
    let left = hom_space(&m.dst, &hat.object, x);
    let right = hom_space(&m.src, y, &cot.object);
    let omega = omega_raw(m, y, &hat);
    let ic1 = m.src.coalg().id();
    let ia = m.dst.alg().id();
    let counit = evaluate_counit(m, x);
    let section = hat.quotient.section.clone();
    Ok(bijection_report(
        "measuring adjunction (comodules)",
        &left,
        &right,
        |zeta| restrict(&cot.inclusion, &(tensor(&[zeta, &ic1]) * &omega), "adjunct"),
        |xi| &counit * tensor(&[&(&cot.inclusion * xi), &ia]) * &section,
    ))
}

/// Bijectivity data of the unit and counit at the representing objects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisVerdict {
    pub unit_shape: (usize, usize),
    pub unit_rank: usize,
    pub counit_shape: (usize, usize),
    pub counit_rank: usize,
    pub galois: bool,
}

impl GaloisVerdict {
    fn from_maps(unit: &Mat, counit: &Mat) -> GaloisVerdict {
        let bijective = |x: &Mat| x.rows() == x.cols() && rank(x) == x.rows();
        GaloisVerdict {
            unit_shape: unit.shape(),
            unit_rank: rank(unit),
            counit_shape: counit.shape(),
            counit_rank: rank(counit),
            galois: bijective(unit) && bijective(counit),
        }
    }
}

/// `M ⊗ C′ ⊗ A′` over the source for `M = k^d`.
pub fn free_source_module(m: &Measuring, d: usize) -> Result<EntwinedModule> {
    let f = m.field();
    let coaction = tensor(&[&id(f, d), m.src.coalg().comult()]);
    induce_tc(&m.src, &Comodule {
        dim: d * m.src.coalg_dim(),
        coaction,
    })
}

/// `M ⊗ A ⊗ C` over the target for `M = k^d`, with action `(M ⊗ μ ⊗ C)(M ⊗ A ⊗ ψ)` and
/// coaction `M ⊗ A ⊗ Δ`.
pub fn free_target_module(m: &Measuring, d: usize) -> EntwinedModule {
    let f = m.field();
    let e = &m.dst;
    let idm = id(f, d);
    let (ia, ic) = (e.alg().id(), e.coalg().id());
    EntwinedModule {
        dim: d * e.alg_dim() * e.coalg_dim(),
        action: tensor(&[&idm, e.alg().mult(), &ic]) * tensor(&[&idm, &ia, e.psi()]),
        coaction: tensor(&[&idm, &ia, e.coalg().comult()]),
    }
}

/// Evaluates `Ω` and `Υ` at the representing objects built on `M = k^d`.
pub fn co_galois_at(m: &Measuring, d: usize) -> Result<GaloisVerdict> {
    let unit = unit_omega(m, &free_source_module(m, d)?)?;
    let counit = counit_upsilon(m, &free_target_module(m, d))?;
    Ok(GaloisVerdict::from_maps(&unit, &counit))
}

pub fn is_co_galois(m: &Measuring) -> Result<GaloisVerdict> {
    co_galois_at(m, 1)
}

// ---------------------------------------------------------------------------------------
// Contramodule side

/// `(C′, M)` over the source for a left `A`-module `M`: `π = (Δ′, M)` and
/// `μ = (A′, Δ′, M)(ψ′, C′, M)(C′, α, M)(C′, μ_M)`.
pub fn contra_induce_from_module(m: &Measuring, x: &LeftModule) -> Result<EntwinedContraModule> {
    expect_shape("left action", &x.action, x.dim, m.dst.alg_dim() * x.dim)?;
    let f = m.field();
    let (md, c1) = (x.dim, m.src.coalg_dim());
    let idm = id(f, md);
    let (ia1, ic1) = (m.src.alg().id(), m.src.coalg().id());
    let delta1 = m.src.coalg().comult();
    let mu_m = left_action_to_mu(&x.action, m.dst.alg_dim());
    let pi = pull(delta1, md);
    let mu = hom_map(&[&ia1, delta1], &idm)
        * hom_map(&[m.src.psi(), &ic1], &idm)
        * hom_map(&[&ic1, &m.alpha], &idm)
        * push(c1, &mu_m);
    EntwinedContraModule::from_mu(&m.src, pi, &mu)
}

/// `(A, M′)` over the target for a `C′`-contramodule `M′`: `μ = (μ, M′)` and
/// `π = (A, π_{M′})(A, γ, M′)(ψ, A, M′)(C, μ, M′)`.
pub fn contra_induce_from_contramodule(m: &Measuring, y: &ContraModule) -> Result<EntwinedContraModule> {
    expect_shape("contraaction", &y.pi, y.dim, y.dim * m.src.coalg_dim())?;
    let f = m.field();
    let (md, a) = (y.dim, m.dst.alg_dim());
    let idm = id(f, md);
    let (ia, ic) = (m.dst.alg().id(), m.dst.coalg().id());
    let mu_a = m.dst.alg().mult();
    let mu = pull(mu_a, md);
    let pi = push(a, &y.pi)
        * hom_map(&[&ia, &m.gamma], &idm)
        * hom_map(&[m.dst.psi(), &ia], &idm)
        * hom_map(&[&ic, mu_a], &idm);
    EntwinedContraModule::from_mu(&m.dst, pi, &mu)
}

/// `s^M = (C′, π_M) − (Δ′, M)(C′, γ, M)(C′, C, μ_M)`, a map `(C′, C, M) → (C′, M)`.
pub fn s_upper(m: &Measuring, x: &EntwinedContraModule) -> Mat {
    let f = m.field();
    let (md, c, c1) = (x.dim, m.dst.coalg_dim(), m.src.coalg_dim());
    let idm = id(f, md);
    let mu_m = x.mu(m.dst.alg_dim());
    push(c1, &x.pi)
        - pull(m.src.coalg().comult(), md) * hom_map(&[&m.src.coalg().id(), &m.gamma], &idm) * push(c * c1, &mu_m)
}

/// `s_{M′} = (A, μ_{M′}) − (A, A′, π_{M′})(A, α, M′)(μ, M′)`, a map `(A, M′) → (A, A′, M′)`.
pub fn s_lower(m: &Measuring, y: &EntwinedContraModule) -> Mat {
    let f = m.field();
    let (md, a, a1) = (y.dim, m.dst.alg_dim(), m.src.alg_dim());
    let idm = id(f, md);
    let mu_y = y.mu(a1);
    push(a, &mu_y)
        - push(a * a1, &y.pi) * hom_map(&[&m.dst.alg().id(), &m.alpha], &idm) * pull(m.dst.alg().mult(), md)
}

/// `C̃ohom_C(C′, M) = coker s^M`, an entwined contramodule over the source.
pub fn cohom(m: &Measuring, x: &EntwinedContraModule) -> Result<QuotientObject<EntwinedContraModule>> {
    let ambient = contra_induce_from_module(m, &x.left_module())?;
    let relations = s_upper(m, x);
    let quotient = cokernel(&relations);
    let (p, s) = (&quotient.projection, &quotient.section);
    let (a1, c1) = (m.src.alg_dim(), m.src.coalg_dim());
    let mu = ambient.mu(a1);
    assert!(
        (p * &ambient.pi * push(c1, &relations)).is_zero(),
        "cohom contraaction does not descend"
    );
    assert!(
        (push(a1, p) * &mu * &relations).is_zero(),
        "cohom action does not descend"
    );
    let pi = p * &ambient.pi * push(c1, s);
    let mu_q = push(a1, p) * &mu * s;
    Ok(QuotientObject {
        object: EntwinedContraModule::from_mu(&m.src, pi, &mu_q)?,
        quotient,
    })
}

/// `H̃om_{A′}(A, M′) = ker s_{M′}`, an entwined contramodule over the target.
pub fn hom_tilde(m: &Measuring, y: &EntwinedContraModule) -> Result<KernelObject<EntwinedContraModule>> {
    let ambient = contra_induce_from_contramodule(m, &y.contramodule())?;
    let kernel = kernel_basis(&s_lower(m, y)).basis;
    let (a, c) = (m.dst.alg_dim(), m.dst.coalg_dim());
    let mu = restrict(&push(a, &kernel), &(ambient.mu(a) * &kernel), "hom-tilde action");
    let pi = restrict(&kernel, &(&ambient.pi * push(c, &kernel)), "hom-tilde contraaction");
    Ok(KernelObject {
        object: EntwinedContraModule::from_mu(&m.dst, pi, &mu)?,
        inclusion: kernel,
    })
}

/// `(A, p)(A, ε′, M)μ_M: M → (A, C̃ohom M)`, before restricting to `H̃om`.
fn psi_raw(m: &Measuring, x: &EntwinedContraModule, q: &QuotientObject<EntwinedContraModule>) -> Mat {
    let f = m.field();
    let a = m.dst.alg_dim();
    push(a, &q.quotient.projection)
        * hom_map(&[&m.dst.alg().id(), m.src.coalg().counit()], &id(f, x.dim))
        * x.mu(a)
}

/// The unit `Ψ_M: M → H̃om_{A′}(A, C̃ohom_C(C′, M))`.
pub fn unit_psi(m: &Measuring, x: &EntwinedContraModule) -> Result<Mat> {
    let q = cohom(m, x)?;
    let k = hom_tilde(m, &q.object)?;
    Ok(restrict(&k.inclusion, &psi_raw(m, x, &q), "contra unit"))
}

/// `π_{M′}(C′, η, M′)`: `(C′, A, M′) → M′`.
fn evaluate_unit(m: &Measuring, y: &EntwinedContraModule) -> Mat {
    let f = m.field();
    &y.pi * hom_map(&[&m.src.coalg().id(), m.dst.alg().unit()], &id(f, y.dim))
}

/// The counit `Φ_{M′}: C̃ohom_C(C′, H̃om_{A′}(A, M′)) → M′`.
pub fn counit_phi(m: &Measuring, y: &EntwinedContraModule) -> Result<Mat> {
    let k = hom_tilde(m, y)?;
    let q = cohom(m, &k.object)?;
    let c1 = m.src.coalg_dim();
    let raw = evaluate_unit(m, y) * push(c1, &k.inclusion);
    assert!(
        (&raw * s_upper(m, &k.object)).is_zero(),
        "contra counit does not descend to the cohom"
    );
    Ok(raw * &q.quotient.section)
}

/// `Hom(C̃ohom M, M′) ≅ Hom(M, H̃om M′)` on bases.
pub fn adjunction_check_contra_side(
    m: &Measuring,
    x: &EntwinedContraModule,
    y: &EntwinedContraModule,
) -> Result<Report> {
    let q = cohom(m, x)?;
    let k = hom_tilde(m, y)?;
    let left = contra_hom_space(&m.src, &q.object, y);
    let right = contra_hom_space(&m.dst, x, &k.object);
    let a = m.dst.alg_dim();
    let c1 = m.src.coalg_dim();
    let into_hom = push(a, &q.quotient.projection)
        * hom_map(&[&m.dst.alg().id(), m.src.coalg().counit()], &id(m.field(), x.dim))
        * x.mu(a);
    let evaluate = evaluate_unit(m, y);
    let section = q.quotient.section.clone();
    Ok(bijection_report(
        "measuring adjunction (contramodules)",
        &left,
        &right,
        |zeta| restrict(&k.inclusion, &(push(a, zeta) * &into_hom), "adjunct"),
        |xi| &evaluate * push(c1, &(&k.inclusion * xi)) * &section,
    ))
}

/// `(C, A, M)` over the target for `M = k^d`: the cofree object on the free left module `(A, M)`.
pub fn free_target_contramodule(m: &Measuring, d: usize) -> Result<EntwinedContraModule> {
    let e = &m.dst;
    let mu = pull(e.alg().mult(), d);
    let free = LeftModule {
        dim: d * e.alg_dim(),
        action: crate::hom::mu_to_left_action(&mu, e.alg_dim()),
    };
    induce_a_t(e, &free)
}

/// `(A′, C′, M)` over the source for `M = k^d`: the induced object on the free contramodule.
pub fn free_source_contramodule(m: &Measuring, d: usize) -> Result<EntwinedContraModule> {
    induce_contra_t(&m.src, &free_contramodule(m.src.coalg(), d))
}

pub fn contra_galois_at(m: &Measuring, d: usize) -> Result<GaloisVerdict> {
    let unit = unit_psi(m, &free_target_contramodule(m, d)?)?;
    let counit = counit_phi(m, &free_source_contramodule(m, d)?)?;
    Ok(GaloisVerdict::from_maps(&unit, &counit))
}

pub fn is_contra_galois(m: &Measuring) -> Result<GaloisVerdict> {
    contra_galois_at(m, 1)
}

/// Factors `b` through `a` on the left (`x ∘ a = b`), used to express maps on quotients.
pub fn factor_through(a: &Mat, b: &Mat) -> Option<Mat> {
    solve_left(a, b).expect("factor shapes")
}

/// The trivial coalgebra over the field of a measuring's algebras; convenience for `(B, k, id)`.
pub fn ground_coalgebra(f: Field) -> Coalgebra {
    trivial_coalgebra(f)
}
