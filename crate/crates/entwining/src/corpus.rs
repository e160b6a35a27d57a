//! Named instances used by the test suites and the CLI, and a seeded generator of random
//! adjunction instances.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algstruct::{
    dual_coalgebra, dual_numbers, group_algebra, upper_triangular, Algebra, Coalgebra, Comodule, LeftModule,
};
use crate::comodcat::{induce_tc, EntwinedModule};
use crate::contracat::{free_contramodule, induce_a_t, induce_contra_t, ContraModule, EntwinedContraModule};
use crate::criteria::{direct_sum_contramodules, direct_sum_modules};
use crate::entwine::{doi_koppinen, galois_entwining, trivial_entwining, trivial_entwining_coalg, Entwining};
use crate::exactlin::{rank, solve_matrix, tensor, Field, Mat};
use crate::hom::push;
use crate::measuring_galois::{galois_measuring, GaloisData, Measuring};

/// `kℤₙ` over itself with the regular coaction `Δ`.
pub fn group_regular(n: usize, f: Field) -> Entwining {
    let h = group_algebra(n, f);
    doi_koppinen(&h, &h.alg, h.coalg.comult()).expect("regular coaction")
}

/// `kℤₙ` over itself with the trivial coaction `a ↦ a ⊗ 1`.
pub fn group_trivial_coaction(n: usize, f: Field) -> Entwining {
    let h = group_algebra(n, f);
    let rho = tensor(&[&h.alg.id(), h.alg.unit()]);
    doi_koppinen(&h, &h.alg, &rho).expect("trivial coaction")
}

/// `kℤₙ` as a Galois extension of `k` through its comultiplication.
pub fn group_galois(n: usize, f: Field) -> GaloisData {
    let h = group_algebra(n, f);
    GaloisData::new(h.alg, h.coalg.clone(), h.coalg.comult().clone()).expect("regular coaction")
}

/// Basis indices `j` with `Δ(c_j) = c_j ⊗ c_j` and `ε(c_j) = 1`.
pub fn grouplike_indices(c: &Coalgebra) -> Vec<usize> {
    let f = c.field();
    (0..c.dim())
        .filter(|&j| {
            let basis = Mat::basis_vector(f, c.dim(), j);
            (c.comult() * &basis) == tensor(&[&basis, &basis]) && c.counit().get(0, j).is_one()
        })
        .collect()
}

/// A comodule with basis vectors of the given grouplike degrees.
pub fn graded_comodule(c: &Coalgebra, degrees: &[usize]) -> Comodule {
    let f = c.field();
    let n = degrees.len();
    let coaction = Mat::from_fn(f, n * c.dim(), n, |row, col| {
        if row == col * c.dim() + degrees[col] {
            f.one()
        } else {
            f.zero()
        }
    });
    Comodule { dim: n, coaction }
}

fn inverse(p: &Mat) -> Mat {
    solve_matrix(p, &Mat::identity(p.field(), p.rows()))
        .expect("square")
        .expect("invertible")
}

/// Structure transported along an invertible change of basis `P: M → M′`.
pub trait Transport {
    fn transport(&self, e: &Entwining, p: &Mat) -> Self;
}

impl Transport for Comodule {
    fn transport(&self, e: &Entwining, p: &Mat) -> Self {
        Comodule {
            dim: self.dim,
            coaction: tensor(&[p, &e.coalg().id()]) * &self.coaction * inverse(p),
        }
    }
}

impl Transport for LeftModule {
    fn transport(&self, e: &Entwining, p: &Mat) -> Self {
        LeftModule {
            dim: self.dim,
            action: p * &self.action * tensor(&[&e.alg().id(), &inverse(p)]),
        }
    }
}

impl Transport for ContraModule {
    fn transport(&self, e: &Entwining, p: &Mat) -> Self {
        ContraModule {
            dim: self.dim,
            pi: p * &self.pi * push(e.coalg_dim(), &inverse(p)),
        }
    }
}

impl Transport for EntwinedModule {
    fn transport(&self, e: &Entwining, p: &Mat) -> Self {
        let q = inverse(p);
        EntwinedModule {
            dim: self.dim,
            action: p * &self.action * tensor(&[&q, &e.alg().id()]),
            coaction: tensor(&[p, &e.coalg().id()]) * &self.coaction * &q,
        }
    }
}

impl Transport for EntwinedContraModule {
    fn transport(&self, e: &Entwining, p: &Mat) -> Self {
        let q = inverse(p);
        EntwinedContraModule {
            dim: self.dim,
            pi: p * &self.pi * push(e.coalg_dim(), &q),
            action: p * &self.action * tensor(&[&e.alg().id(), &q]),
        }
    }
}

/// An invertible matrix with small integer entries.
pub fn random_invertible(rng: &mut impl Rng, f: Field, n: usize) -> Mat {
    loop {
        let p = Mat::from_fn(f, n, n, |_, _| f.from_i64(rng.random_range(-2..=2)));
        if rank(&p) == n {
            return p;
        }
    }
}

/// Entwinings with algebra and coalgebra of dimension at most 3.
pub fn small_entwinings(f: Field) -> Vec<(String, Entwining)> {
    let mut out: Vec<(String, Entwining)> = vec![
        ("kZ2 regular".into(), group_regular(2, f)),
        ("kZ3 regular".into(), group_regular(3, f)),
        ("kZ2 trivial coaction".into(), group_trivial_coaction(2, f)),
        ("kZ3 trivial coaction".into(), group_trivial_coaction(3, f)),
        ("kZ2 Galois".into(), galois_entwining(&group_galois(2, f)).expect("Galois")),
    ];
    let algebras: [(&str, Algebra); 3] = [
        ("dual numbers", dual_numbers(f)),
        ("upper triangular", upper_triangular(2, f)),
        ("kZ3", group_algebra(3, f).alg),
    ];
    for (name, a) in algebras {
        out.push((format!("{name} over k"), trivial_entwining(&a)));
        out.push((format!("k over dual of {name}"), trivial_entwining_coalg(&dual_coalgebra(&a))));
    }
    out
}

/// One randomized instance for the four adjunction checks.
#[derive(Clone, Debug)]
pub struct AdjunctionInstance {
    pub label: String,
    pub entwining: Entwining,
    pub comodule: Comodule,
    pub module: EntwinedModule,
    pub contramodule: ContraModule,
    pub contra: EntwinedContraModule,
    pub left: LeftModule,
    pub measuring: Measuring,
    /// Entwined module over the measuring's target.
    pub target_module: EntwinedModule,
    /// Entwined module over the measuring's source.
    pub source_module: EntwinedModule,
    pub target_contra: EntwinedContraModule,
    pub source_contra: EntwinedContraModule,
}

fn random_comodule(rng: &mut impl Rng, e: &Entwining) -> Comodule {
    let grouplikes = grouplike_indices(e.coalg());
    let base = if !grouplikes.is_empty() && rng.random_bool(0.5) {
        let n = rng.random_range(1..=2);
        let degrees: Vec<usize> = (0..n).map(|_| *grouplikes.choose(rng).expect("nonempty")).collect();
        graded_comodule(e.coalg(), &degrees)
    } else {
        Comodule::regular(e.coalg())
    };
    base.transport(e, &random_invertible(rng, e.field(), base.dim))
}

fn random_module(rng: &mut impl Rng, e: &Entwining) -> EntwinedModule {
    let x = induce_tc(e, &random_comodule(rng, e)).expect("induced");
    let x = if rng.random_bool(0.3) {
        direct_sum_modules(e, &x, &EntwinedModule::zero(e))
    } else {
        x
    };
    x.transport(e, &random_invertible(rng, e.field(), x.dim))
}

fn random_contramodule(rng: &mut impl Rng, e: &Entwining) -> ContraModule {
    let n = free_contramodule(e.coalg(), 1);
    n.transport(e, &random_invertible(rng, e.field(), n.dim))
}

fn random_left(rng: &mut impl Rng, e: &Entwining) -> LeftModule {
    let m = LeftModule::regular(e.alg());
    m.transport(e, &random_invertible(rng, e.field(), m.dim))
}

fn random_contra(rng: &mut impl Rng, e: &Entwining) -> EntwinedContraModule {
    let x = if rng.random_bool(0.5) {
        induce_contra_t(e, &random_contramodule(rng, e))
    } else {
        induce_a_t(e, &random_left(rng, e))
    }
    .expect("induced");
    let x = if rng.random_bool(0.3) {
        direct_sum_contramodules(e, &x, &EntwinedContraModule::zero(e))
    } else {
        x
    };
    x.transport(e, &random_invertible(rng, e.field(), x.dim))
}

/// Random objects over a fixed entwining for the seeded probes.
#[derive(Clone, Debug)]
pub struct ProbeObjects {
    pub comodule: Comodule,
    pub module: EntwinedModule,
    pub contramodule: ContraModule,
    pub contra: EntwinedContraModule,
    pub left: LeftModule,
}

pub fn random_probe_objects(e: &Entwining, seed: u64) -> ProbeObjects {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ProbeObjects {
        comodule: random_comodule(&mut rng, e),
        module: random_module(&mut rng, e),
        contramodule: random_contramodule(&mut rng, e),
        contra: random_contra(&mut rng, e),
        left: random_left(&mut rng, e),
    }
}

/// A reproducible random instance: the entwining is drawn from [`small_entwinings`] and
/// every object is an induced or free object transported along a random basis change.
pub fn random_adjunction_instance(seed: u64, f: Field) -> AdjunctionInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut choices = small_entwinings(f);
    let (name, e) = choices.swap_remove(rng.random_range(0..choices.len()));
    let measuring = if rng.random_bool(0.5) {
        galois_measuring(&group_galois(2, f)).expect("Galois measuring")
    } else {
        Measuring::identity(&e)
    };
    let (src, dst) = (measuring.src.clone(), measuring.dst.clone());
    AdjunctionInstance {
        label: format!("seed {seed}: {name}"),
        comodule: random_comodule(&mut rng, &e),
        module: random_module(&mut rng, &e),
        contramodule: random_contramodule(&mut rng, &e),
        contra: random_contra(&mut rng, &e),
        left: random_left(&mut rng, &e),
        target_module: random_module(&mut rng, &dst),
        source_module: random_module(&mut rng, &src),
        target_contra: random_contra(&mut rng, &dst),
        source_contra: random_contra(&mut rng, &src),
        measuring,
        entwining: e,
    }
}
