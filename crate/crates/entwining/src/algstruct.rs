//! Finite-dimensional algebras, coalgebras, bialgebras and their (co)modules as
//! structure-constant matrices.

use crate::error::{expect_shape, Error, Result};
use crate::exactlin::{tensor, Field, Mat};
use crate::report::Report;

/// An associative unital algebra; `mult` is `n × n²`, `unit` is `n × 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    mult: Mat,
    unit: Mat,
}

impl Algebra {
    pub fn new(mult: Mat, unit: Mat) -> Result<Algebra> {
        let dim = unit.rows();
        if mult.field() != unit.field() {
            return Err(Error::FieldMismatch);
        }
        expect_shape("unit", &unit, dim, 1)?;
        expect_shape("mult", &mult, dim, dim * dim)?;
        Ok(Algebra { dim, mult, unit })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn id(&self) -> Mat {
        Mat::identity(self.field(), self.dim)
    }

    /// Product of two elements given as columns.
    pub fn multiply(&self, x: &Mat, y: &Mat) -> Mat {
        &self.mult * x.kron(y)
    }
}

/// A coassociative counital coalgebra; `comult` is `c² × c`, `counit` is `1 × c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    dim: usize,
    comult: Mat,
    counit: Mat,
}

impl Coalgebra {
    pub fn new(comult: Mat, counit: Mat) -> Result<Coalgebra> {
        let dim = counit.cols();
        if comult.field() != counit.field() {
            return Err(Error::FieldMismatch);
        }
        expect_shape("counit", &counit, 1, dim)?;
        expect_shape("comult", &comult, dim * dim, dim)?;
        Ok(Coalgebra { dim, comult, counit })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &Mat {
        &self.comult
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    pub fn id(&self) -> Mat {
        Mat::identity(self.field(), self.dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub alg: Algebra,
    pub coalg: Coalgebra,
}

impl Bialgebra {
    pub fn new(alg: Algebra, coalg: Coalgebra) -> Result<Bialgebra> {
        if alg.field() != coalg.field() {
            return Err(Error::FieldMismatch);
        }
        if alg.dim() != coalg.dim() {
            return Err(Error::Precondition(format!(
                "bialgebra carriers differ: algebra dim {}, coalgebra dim {}",
                alg.dim(),
                coalg.dim()
            )));
        }
        Ok(Bialgebra { alg, coalg })
    }
}

/// A right comodule `M → M ⊗ C` (coaction is `m·c × m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub dim: usize,
    pub coaction: Mat,
}

impl Comodule {
    pub fn new(coalg: &Coalgebra, coaction: Mat) -> Result<Comodule> {
        let dim = coaction.cols();
        expect_shape("comodule coaction", &coaction, dim * coalg.dim(), dim)?;
        Ok(Comodule { dim, coaction })
    }

    /// `C` as a comodule over itself.
    pub fn regular(coalg: &Coalgebra) -> Comodule {
        Comodule {
            dim: coalg.dim(),
            coaction: coalg.comult().clone(),
        }
    }
}

/// A right module `M ⊗ A → M` (action is `m × m·a`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub dim: usize,
    pub action: Mat,
}

impl RightModule {
    pub fn new(alg: &Algebra, action: Mat) -> Result<RightModule> {
        let dim = action.rows();
        expect_shape("right action", &action, dim, dim * alg.dim())?;
        Ok(RightModule { dim, action })
    }

    pub fn regular(alg: &Algebra) -> RightModule {
        RightModule {
            dim: alg.dim(),
            action: alg.mult().clone(),
        }
    }
}

/// A left module `A ⊗ M → M` (action is `m × a·m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub dim: usize,
    pub action: Mat,
}

impl LeftModule {
    pub fn new(alg: &Algebra, action: Mat) -> Result<LeftModule> {
        let dim = action.rows();
        expect_shape("left action", &action, dim, alg.dim() * dim)?;
        Ok(LeftModule { dim, action })
    }

    pub fn regular(alg: &Algebra) -> LeftModule {
        LeftModule {
            dim: alg.dim(),
            action: alg.mult().clone(),
        }
    }
}

pub fn check_algebra(a: &Algebra) -> Report {
    let n = a.dim();
    let (mu, eta, id) = (a.mult(), a.unit(), a.id());
    let mut r = Report::new("algebra");
    r.push_eq(
        "associativity",
        &(mu * tensor(&[mu, &id])),
        &(mu * tensor(&[&id, mu])),
        &[n, n, n],
        &[n],
    );
    r.push_eq("left-unit", &(mu * tensor(&[eta, &id])), &id, &[n], &[n]);
    r.push_eq("right-unit", &(mu * tensor(&[&id, eta])), &id, &[n], &[n]);
    r
}

pub fn check_coalgebra(c: &Coalgebra) -> Report {
    let n = c.dim();
    let (delta, eps, id) = (c.comult(), c.counit(), c.id());
    let mut r = Report::new("coalgebra");
    r.push_eq(
        "coassociativity",
        &(tensor(&[delta, &id]) * delta),
        &(tensor(&[&id, delta]) * delta),
        &[n],
        &[n, n, n],
    );
    r.push_eq("left-counit", &(tensor(&[eps, &id]) * delta), &id, &[n], &[n]);
    r.push_eq("right-counit", &(tensor(&[&id, eps]) * delta), &id, &[n], &[n]);
    r
}

pub fn check_bialgebra(h: &Bialgebra) -> Report {
    let f = h.alg.field();
    let n = h.alg.dim();
    let (mu, eta) = (h.alg.mult(), h.alg.unit());
    let (delta, eps) = (h.coalg.comult(), h.coalg.counit());
    let id = h.alg.id();
    let mut r = Report::new("bialgebra");
    r.absorb("algebra", check_algebra(&h.alg));
    r.absorb("coalgebra", check_coalgebra(&h.coalg));
    let middle_swap = tensor(&[&id, &Mat::swap(f, n, n), &id]);
    r.push_eq(
        "comult-multiplicative",
        &(delta * mu),
        &(tensor(&[mu, mu]) * middle_swap * tensor(&[delta, delta])),
        &[n, n],
        &[n, n],
    );
    r.push_eq("counit-multiplicative", &(eps * mu), &tensor(&[eps, eps]), &[n, n], &[]);
    r.push_eq("comult-unit", &(delta * eta), &tensor(&[eta, eta]), &[], &[n, n]);
    r.push_eq("counit-unit", &(eps * eta), &Mat::identity(f, 1), &[], &[]);
    r
}

pub fn check_comodule(c: &Coalgebra, x: &Comodule) -> Report {
    let (m, n) = (x.dim, c.dim());
    let idm = Mat::identity(c.field(), m);
    let rho = &x.coaction;
    let mut r = Report::new("comodule");
    r.push_eq(
        "coassociativity",
        &(tensor(&[rho, &c.id()]) * rho),
        &(tensor(&[&idm, c.comult()]) * rho),
        &[m],
        &[m, n, n],
    );
    r.push_eq("counit", &(tensor(&[&idm, c.counit()]) * rho), &idm, &[m], &[m]);
    r
}

pub fn check_right_module(a: &Algebra, x: &RightModule) -> Report {
    let (m, n) = (x.dim, a.dim());
    let idm = Mat::identity(a.field(), m);
    let act = &x.action;
    let mut r = Report::new("right module");
    r.push_eq(
        "associativity",
        &(act * tensor(&[act, &a.id()])),
        &(act * tensor(&[&idm, a.mult()])),
        &[m, n, n],
        &[m],
    );
    r.push_eq("unit", &(act * tensor(&[&idm, a.unit()])), &idm, &[m], &[m]);
    r
}

pub fn check_left_module(a: &Algebra, x: &LeftModule) -> Report {
    let (m, n) = (x.dim, a.dim());
    let idm = Mat::identity(a.field(), m);
    let act = &x.action;
    let mut r = Report::new("left module");
    r.push_eq(
        "associativity",
        &(act * tensor(&[a.mult(), &idm])),
        &(act * tensor(&[&a.id(), act])),
        &[n, n, m],
        &[m],
    );
    r.push_eq("unit", &(act * tensor(&[a.unit(), &idm])), &idm, &[m], &[m]);
    r
}

/// The convolution algebra `C*`.
pub fn dual_algebra(c: &Coalgebra) -> Algebra {
    Algebra::new(c.comult().transpose(), c.counit().transpose()).expect("dual shapes")
}

/// The coalgebra `A*` of a finite-dimensional algebra.
pub fn dual_coalgebra(a: &Algebra) -> Coalgebra {
    Coalgebra::new(a.mult().transpose(), a.unit().transpose()).expect("dual shapes")
}

/// The ground field as an algebra.
pub fn trivial_algebra(f: Field) -> Algebra {
    Algebra::new(Mat::identity(f, 1), Mat::identity(f, 1)).expect("1x1")
}

/// The ground field as a coalgebra.
pub fn trivial_coalgebra(f: Field) -> Coalgebra {
    Coalgebra::new(Mat::identity(f, 1), Mat::identity(f, 1)).expect("1x1")
}

/// The group bialgebra of the cyclic group of order `n`, basis `g⁰ … gⁿ⁻¹`.
pub fn group_algebra(n: usize, f: Field) -> Bialgebra {
    assert!(n >= 1, "cyclic group order must be positive");
    let mut mult = Mat::zeros(f, n, n * n);
    let mut comult = Mat::zeros(f, n * n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set((i + j) % n, i * n + j, f.one());
        }
        comult.set(i * n + i, i, f.one());
    }
    let alg = Algebra::new(mult, Mat::basis_vector(f, n, 0)).expect("group algebra shapes");
    let coalg = Coalgebra::new(comult, Mat::from_fn(f, 1, n, |_, _| f.one())).expect("group coalgebra shapes");
    Bialgebra { alg, coalg }
}

/// `n × n` matrices with basis `e_ij` at index `i·n + j`.
pub fn matrix_algebra(n: usize, f: Field) -> Algebra {
    assert!(n >= 1, "matrix size must be positive");
    let d = n * n;
    let mut mult = Mat::zeros(f, d, d * d);
    let mut unit = Mat::zeros(f, d, 1);
    for i in 0..n {
        unit.set(i * n + i, 0, f.one());
        for j in 0..n {
            for l in 0..n {
                mult.set(i * n + l, (i * n + j) * d + (j * n + l), f.one());
            }
        }
    }
    Algebra::new(mult, unit).expect("matrix algebra shapes")
}

/// `k[x]/(x²)` with basis `1, x`.
pub fn dual_numbers(f: Field) -> Algebra {
    let mut mult = Mat::zeros(f, 2, 4);
    mult.set(0, 0, f.one());
    mult.set(1, 1, f.one());
    mult.set(1, 2, f.one());
    Algebra::new(mult, Mat::basis_vector(f, 2, 0)).expect("dual number shapes")
}

/// Upper-triangular `n × n` matrices, basis `e_ij` (`i ≤ j`) in row-major order.
pub fn upper_triangular(n: usize, f: Field) -> Algebra {
    let units: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let d = units.len();
    let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).expect("upper index");
    let mut mult = Mat::zeros(f, d, d * d);
    let mut unit = Mat::zeros(f, d, 1);
    for (x, &(i, j)) in units.iter().enumerate() {
        if i == j {
            unit.set(x, 0, f.one());
        }
        for (y, &(k, l)) in units.iter().enumerate() {
            if j == k {
                mult.set(index(i, l), x * d + y, f.one());
            }
        }
    }
    Algebra::new(mult, unit).expect("triangular shapes")
}
