//! Substitution re-verifier for criteria witnesses.
//!
//! Components are evaluated on basis elements with explicit index loops over
//! multi-dimensional coefficient arrays, without the Kronecker or hom-functor helpers the
//! deciders use to assemble their systems. An element of `(V₁, …, Vₙ, M)` is an array with
//! axes `[M, Vₙ, …, V₁]`; precomposition on a run of slots is a transposed block map.

use crate::entwine::Entwining;
use crate::exactlin::{Field, Mat, Scalar};
use crate::report::Report;

/// A coefficient array with first-axis-major layout.
#[derive(Clone, Debug)]
struct Arr {
    field: Field,
    dims: Vec<usize>,
    data: Vec<Scalar>,
}

impl Arr {
    fn basis(field: Field, dims: &[usize], index: usize) -> Arr {
        let size: usize = dims.iter().product();
        let mut data = vec![field.zero(); size];
        data[index] = field.one();
        Arr {
            field,
            dims: dims.to_vec(),
            data,
        }
    }

    /// Applies `map` to the axes `start..start + len`, which become `out_dims`.
    fn apply(&self, start: usize, len: usize, out_dims: &[usize], map: &Mat) -> Arr {
        let prefix: usize = self.dims[..start].iter().product();
        let block: usize = self.dims[start..start + len].iter().product();
        let suffix: usize = self.dims[start + len..].iter().product();
        let out_block: usize = out_dims.iter().product();
        assert_eq!(map.shape(), (out_block, block), "block map shape at axis {start}");
        let mut data = vec![self.field.zero(); prefix * out_block * suffix];
        for p in 0..prefix {
            for b in 0..block {
                for s in 0..suffix {
                    let x = &self.data[(p * block + b) * suffix + s];
                    if x.is_zero() {
                        continue;
                    }
                    for o in 0..out_block {
                        let coefficient = map.get(o, b);
                        if !coefficient.is_zero() {
                            let slot = &mut data[(p * out_block + o) * suffix + s];
                            *slot = &*slot + &(coefficient * x);
                        }
                    }
                }
            }
        }
        let mut dims = self.dims[..start].to_vec();
        dims.extend_from_slice(out_dims);
        dims.extend_from_slice(&self.dims[start + len..]);
        Arr {
            field: self.field,
            dims,
            data,
        }
    }

    /// Precomposes with `f: V → W` on the slot axes `start..start + len` (which hold `W`).
    fn pre(&self, start: usize, len: usize, new_dims: &[usize], f: &Mat) -> Arr {
        self.apply(start, len, new_dims, &f.transpose())
    }

    /// Tensors with a fixed vector on new trailing axes.
    fn append(&self, dims: &[usize], vector: &[Scalar]) -> Arr {
        let mut data = Vec::with_capacity(self.data.len() * vector.len());
        for x in &self.data {
            for v in vector {
                data.push(x * v);
            }
        }
        let mut all = self.dims.clone();
        all.extend_from_slice(dims);
        Arr {
            field: self.field,
            dims: all,
            data,
        }
    }
}

/// The matrix of `op` on the basis of the array space with axes `dims`.
fn evaluate(field: Field, dims: &[usize], op: impl Fn(Arr) -> Arr) -> Mat {
    let size: usize = dims.iter().product();
    let columns: Vec<Arr> = (0..size).map(|k| op(Arr::basis(field, dims, k))).collect();
    let rows = columns.first().map_or(0, |c| c.data.len());
    Mat::from_fn(field, rows, size, |i, j| columns[j].data[i].clone())
}

struct Parts<'a> {
    field: Field,
    a: usize,
    c: usize,
    mu: &'a Mat,
    eta: &'a Mat,
    delta: &'a Mat,
    eps: &'a Mat,
    psi: &'a Mat,
}

impl<'a> Parts<'a> {
    fn of(ent: &'a Entwining) -> Parts<'a> {
        Parts {
            field: ent.field(),
            a: ent.alg_dim(),
            c: ent.coalg_dim(),
            mu: ent.alg().mult(),
            eta: ent.alg().unit(),
            delta: ent.coalg().comult(),
            eps: ent.coalg().counit(),
            psi: ent.psi(),
        }
    }

    /// `σ_M: M → (A, C, M)`, `x ↦ x ⊗ e`, built entry by entry.
    fn sigma_contra(&self, e: &Mat, m: usize) -> Mat {
        let ca = self.c * self.a;
        Mat::from_fn(self.field, m * ca, m, |row, col| {
            if row / ca == col {
                e.get(0, row % ca).clone()
            } else {
                self.field.zero()
            }
        })
    }

    fn eta_eps(&self) -> Mat {
        self.eta * self.eps
    }
}

fn equation(r: &mut Report, id: &str, lhs: Mat, rhs: Mat, dims: &[usize]) {
    r.push_eq(id, &lhs, &rhs, dims, &[lhs.rows()]);
}

/// Contramodule-side separability functional at `M = k^m`.
pub fn verify_sep_contra_t(ent: &Entwining, e: &Mat, m: usize) -> Report {
    let p = Parts::of(ent);
    let (a, c, f) = (p.a, p.c, p.field);
    let sigma = p.sigma_contra(e, m);
    let mut r = Report::new(&format!("separability functional (contramodules, M = k^{m})"));
    let lhs = evaluate(f, &[m, c], |x| {
        x.apply(0, 1, &[m, c, a], &sigma)
            .pre(2, 2, &[c, a], p.psi)
            .pre(1, 2, &[c], p.delta)
    });
    let rhs = evaluate(f, &[m, c], |x| x.append(&[c, a], e.row(0)).pre(1, 2, &[c], p.delta));
    equation(&mut r, "naturality", lhs, rhs, &[m, c]);
    let lhs = evaluate(f, &[m], |x| x.apply(0, 1, &[m, c, a], &sigma).pre(2, 1, &[], p.eta));
    let rhs = evaluate(f, &[m], |x| x.pre(1, 0, &[c], p.eps));
    equation(&mut r, "normalization", lhs, rhs, &[m]);
    r
}

/// Comodule-side separability functional at `M = k^m`.
pub fn verify_sep_co_t(ent: &Entwining, e: &Mat, m: usize) -> Report {
    let p = Parts::of(ent);
    let (a, c, f) = (p.a, p.c, p.field);
    let mut r = Report::new(&format!("separability functional (comodules, M = k^{m})"));
    let lhs = evaluate(f, &[m, c, a], |x| {
        x.apply(1, 1, &[c, c], p.delta)
            .apply(2, 2, &[a, c], p.psi)
            .apply(1, 2, &[], e)
    });
    let rhs = evaluate(f, &[m, c, a], |x| x.apply(1, 1, &[c, c], p.delta).apply(2, 2, &[], e));
    equation(&mut r, "naturality", lhs, rhs, &[m, c, a]);
    let lhs = evaluate(f, &[m, c], |x| x.apply(2, 0, &[a], p.eta).apply(1, 2, &[], e));
    let rhs = evaluate(f, &[m, c], |x| x.apply(1, 1, &[], p.eps));
    equation(&mut r, "normalization", lhs, rhs, &[m, c]);
    r
}

/// Contramodule-side Casimir map at `M = k^m`.
pub fn verify_sep_contra_f(ent: &Entwining, theta: &Mat, m: usize) -> Report {
    let p = Parts::of(ent);
    let (a, c, f) = (p.a, p.c, p.field);
    let mut r = Report::new(&format!("Casimir map (contramodules, M = k^{m})"));
    let lhs = evaluate(f, &[m, a, a], |x| {
        x.pre(1, 1, &[a, a], p.mu)
            .pre(2, 2, &[c], theta)
            .pre(1, 2, &[c, a], p.psi)
    });
    let rhs = evaluate(f, &[m, a, a], |x| x.pre(2, 1, &[a, a], p.mu).pre(1, 2, &[c], theta));
    equation(&mut r, "algebra-naturality", lhs, rhs, &[m, a, a]);
    let lhs = evaluate(f, &[m, a, a, c], |x| {
        x.pre(2, 2, &[c, a], p.psi)
            .pre(1, 2, &[c, a], p.psi)
            .pre(2, 2, &[c], theta)
            .pre(1, 2, &[c], p.delta)
    });
    let rhs = evaluate(f, &[m, a, a, c], |x| x.pre(1, 2, &[c], theta).pre(1, 2, &[c], p.delta));
    equation(&mut r, "coalgebra-naturality", lhs, rhs, &[m, a, a, c]);
    r.absorb("", casimir_normalization_contra(&p, theta, m));
    r
}

fn casimir_normalization_contra(p: &Parts, theta: &Mat, m: usize) -> Report {
    let (a, c, f) = (p.a, p.c, p.field);
    let mut r = Report::new("normalization");
    let lhs = evaluate(f, &[m, a], |x| x.pre(1, 1, &[a, a], p.mu).pre(1, 2, &[c], theta));
    let rhs = evaluate(f, &[m, a], |x| x.pre(1, 1, &[], p.eta).pre(1, 0, &[c], p.eps));
    equation(&mut r, "normalization", lhs, rhs, &[m, a]);
    r
}

/// Comodule-side Casimir map at `M = k^m`.
pub fn verify_sep_co_f(ent: &Entwining, theta: &Mat, m: usize) -> Report {
    let p = Parts::of(ent);
    let (a, c, f) = (p.a, p.c, p.field);
    let mut r = Report::new(&format!("Casimir map (comodules, M = k^{m})"));
    let lhs = evaluate(f, &[m, c], |x| {
        x.apply(1, 1, &[c, c], p.delta)
            .apply(2, 1, &[a, a], theta)
            .apply(1, 2, &[a, c], p.psi)
            .apply(2, 2, &[a, c], p.psi)
    });
    let rhs = evaluate(f, &[m, c], |x| x.apply(1, 1, &[c, c], p.delta).apply(1, 1, &[a, a], theta));
    equation(&mut r, "coalgebra-naturality", lhs, rhs, &[m, c]);
    let lhs = evaluate(f, &[m, c, a], |x| x.apply(1, 1, &[a, a], theta).apply(2, 2, &[a], p.mu));
    let rhs = evaluate(f, &[m, c, a], |x| {
        x.apply(1, 2, &[a, c], p.psi)
            .apply(2, 1, &[a, a], theta)
            .apply(1, 2, &[a], p.mu)
    });
    equation(&mut r, "algebra-naturality", lhs, rhs, &[m, c, a]);
    r.absorb("", casimir_normalization_co(&p, theta, m));
    r
}

fn casimir_normalization_co(p: &Parts, theta: &Mat, m: usize) -> Report {
    let (a, c, f) = (p.a, p.c, p.field);
    let mut r = Report::new("normalization");
    let lhs = evaluate(f, &[m, c], |x| x.apply(1, 1, &[a, a], theta).apply(1, 2, &[a], p.mu));
    let rhs = evaluate(f, &[m, c], |x| x.apply(1, 1, &[], p.eps).apply(1, 0, &[a], p.eta));
    equation(&mut r, "normalization", lhs, rhs, &[m, c]);
    r
}

/// The membership conditions of a functional alone (no normalization).
fn functional_naturality(ent: &Entwining, e: &Mat, m: usize, contra: bool) -> Report {
    let full = if contra {
        verify_sep_contra_t(ent, e, m)
    } else {
        verify_sep_co_t(ent, e, m)
    };
    keep(full, &["naturality"])
}

fn casimir_naturality(ent: &Entwining, theta: &Mat, m: usize, contra: bool) -> Report {
    let full = if contra {
        verify_sep_contra_f(ent, theta, m)
    } else {
        verify_sep_co_f(ent, theta, m)
    };
    keep(full, &["algebra-naturality", "coalgebra-naturality"])
}

fn keep(report: Report, ids: &[&str]) -> Report {
    let mut r = Report::new(&report.subject);
    r.checks = report.checks.into_iter().filter(|c| ids.contains(&c.id.as_str())).collect();
    r
}

/// The Frobenius pair conditions for contramodules at `M = k^m`.
pub fn verify_frobenius_contra(ent: &Entwining, e: &Mat, theta: &Mat, m: usize) -> Report {
    let p = Parts::of(ent);
    let (a, c, f) = (p.a, p.c, p.field);
    let sigma = p.sigma_contra(e, m);
    let ee = p.eta_eps();
    let mut r = Report::new(&format!("Frobenius pair (contramodules, M = k^{m})"));
    r.absorb("functional", functional_naturality(ent, e, m, true));
    r.absorb("casimir", casimir_naturality(ent, theta, m, true));
    let target = evaluate(f, &[m, a], |x| x.pre(1, 1, &[c], &ee));
    let first = evaluate(f, &[m, a], |x| {
        x.append(&[c, a], e.row(0))
            .pre(1, 2, &[c, a], p.psi)
            .pre(2, 2, &[c], theta)
            .pre(1, 2, &[c], p.delta)
    });
    equation(&mut r, "twisted", first, target.clone(), &[m, a]);
    let second = evaluate(f, &[m, a], |x| {
        x.apply(0, 1, &[m, c, a], &sigma)
            .pre(2, 2, &[c], theta)
            .pre(1, 2, &[c], p.delta)
    });
    equation(&mut r, "direct", second, target, &[m, a]);
    r
}

/// The Frobenius pair conditions for comodules at `M = k^m`.
pub fn verify_frobenius_co(ent: &Entwining, e: &Mat, theta: &Mat, m: usize) -> Report {
    let p = Parts::of(ent);
    let (a, c, f) = (p.a, p.c, p.field);
    let mut r = Report::new(&format!("Frobenius pair (comodules, M = k^{m})"));
    r.absorb("functional", functional_naturality(ent, e, m, false));
    r.absorb("casimir", casimir_naturality(ent, theta, m, false));
    let target = evaluate(f, &[m, c], |x| x.apply(1, 1, &[], p.eps).apply(1, 0, &[a], p.eta));
    let first = evaluate(f, &[m, c], |x| {
        x.apply(1, 1, &[c, c], p.delta)
            .apply(2, 1, &[a, a], theta)
            .apply(1, 2, &[a, c], p.psi)
            .apply(2, 2, &[], e)
    });
    equation(&mut r, "twisted", first, target.clone(), &[m, c]);
    let second = evaluate(f, &[m, c], |x| {
        x.apply(1, 1, &[c, c], p.delta)
            .apply(2, 1, &[a, a], theta)
            .apply(1, 2, &[], e)
    });
    equation(&mut r, "direct", second, target, &[m, c]);
    r
}

/// The three cointegral identities, with the coevaluation built from the dual basis.
pub fn verify_cointegral(ent: &Entwining, phi: &Mat) -> Report {
    let p = Parts::of(ent);
    let (a, c, f) = (p.a, p.c, p.field);
    let coev = Mat::from_fn(f, a * a, 1, |row, _| if row / a == row % a { f.one() } else { f.zero() });
    let mut r = Report::new("normalized cointegral");
    let lhs = evaluate(f, &[c], |x| {
        x.apply(0, 1, &[c, c], p.delta)
            .apply(1, 0, &[a, a], &coev)
            .apply(0, 2, &[a, c], p.psi)
            .apply(2, 2, &[a], phi)
            .apply(1, 2, &[a, c], p.psi)
    });
    let rhs = evaluate(f, &[c], |x| {
        x.apply(0, 1, &[c, c], p.delta)
            .apply(0, 0, &[a, a], &coev)
            .apply(1, 2, &[a], phi)
    });
    equation(&mut r, "colinear", lhs, rhs, &[c]);
    let lhs = evaluate(f, &[c, a], |x| {
        x.apply(0, 0, &[a, a], &coev)
            .apply(1, 2, &[a], phi)
            .apply(1, 2, &[a], p.mu)
    });
    let rhs = evaluate(f, &[c, a], |x| {
        x.apply(0, 2, &[a, c], p.psi)
            .apply(1, 0, &[a, a], &coev)
            .apply(2, 2, &[a], phi)
            .apply(0, 2, &[a], p.mu)
    });
    equation(&mut r, "linear", lhs, rhs, &[c, a]);
    let lhs = evaluate(f, &[c], |x| {
        x.apply(0, 0, &[a, a], &coev)
            .apply(1, 2, &[a], phi)
            .apply(0, 2, &[a], p.mu)
    });
    let rhs = evaluate(f, &[c], |x| x.apply(0, 1, &[], p.eps).apply(0, 0, &[a], p.eta));
    equation(&mut r, "normalized", lhs, rhs, &[c]);
    r
}
