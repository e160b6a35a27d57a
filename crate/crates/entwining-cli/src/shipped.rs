//! Builders for the example workspaces shipped in `corpus/`.

use indexmap::IndexMap;

use entwining::algstruct::{dual_numbers, group_algebra, matrix_algebra, trivial_coalgebra, upper_triangular, Algebra};
use entwining::corpus::{group_galois, group_regular, group_trivial_coaction};
use entwining::entwine::{galois_entwining, trivial_entwining};
use entwining::exactlin::Field;
use entwining::measuring_galois::{
    coinvariants, free_source_contramodule, free_source_module, free_target_contramodule, free_target_module,
    galois_measuring,
};

use crate::workspace::{Bound, ContraObject, ModuleObject, Workspace};

fn bound<T>(over: &[&str], value: T) -> Bound<T> {
    Bound {
        over: over.iter().map(|s| s.to_string()).collect(),
        value,
    }
}

fn empty(field: Field) -> Workspace {
    Workspace {
        field,
        algebras: IndexMap::new(),
        coalgebras: IndexMap::new(),
        bialgebras: IndexMap::new(),
        entwinings: IndexMap::new(),
        comodules: IndexMap::new(),
        modules: IndexMap::new(),
        contramodules: IndexMap::new(),
        measurings: IndexMap::new(),
        galois: IndexMap::new(),
    }
}

/// `kℤ₂` over ℚ: the regular and trivial-coaction Doi-Koppinen entwinings, the Galois
/// datum, its measuring from the coinvariants, and the free objects that measuring moves.
pub fn kz2() -> Workspace {
    let f = Field::Rational;
    let h = group_algebra(2, f);
    let g = group_galois(2, f);
    let m = galois_measuring(&g).expect("kZ2 is Galois");
    let mut ws = empty(f);
    ws.algebras.insert("kZ2".into(), h.alg.clone());
    ws.algebras.insert("B".into(), coinvariants(&g).algebra);
    ws.coalgebras.insert("kZ2".into(), h.coalg.clone());
    ws.coalgebras.insert("k".into(), trivial_coalgebra(f));
    ws.bialgebras.insert("kZ2".into(), bound(&["kZ2", "kZ2"], h));
    ws.entwinings.insert("regular".into(), bound(&["kZ2", "kZ2"], group_regular(2, f)));
    ws.entwinings
        .insert("trivial".into(), bound(&["kZ2", "kZ2"], group_trivial_coaction(2, f)));
    ws.entwinings.insert(
        "galois".into(),
        bound(&["kZ2", "kZ2"], galois_entwining(&g).expect("kZ2 is Galois")),
    );
    ws.entwinings.insert("coinvariants".into(), bound(&["B", "k"], m.src.clone()));
    ws.galois.insert("kZ2".into(), bound(&["kZ2", "kZ2"], g));
    let target_module = free_target_module(&m, 1);
    let source_module = free_source_module(&m, 1).expect("free module");
    let target_contra = free_target_contramodule(&m, 1).expect("free contramodule");
    let source_contra = free_source_contramodule(&m, 1).expect("free contramodule");
    ws.modules
        .insert("free_target".into(), bound(&["galois"], ModuleObject::Entwined(target_module)));
    ws.modules
        .insert("free_source".into(), bound(&["coinvariants"], ModuleObject::Entwined(source_module)));
    ws.contramodules
        .insert("free_target".into(), bound(&["galois"], ContraObject::Entwined(target_contra)));
    ws.contramodules.insert(
        "free_source".into(),
        bound(&["coinvariants"], ContraObject::Entwined(source_contra)),
    );
    ws.measurings.insert("galois".into(), bound(&["coinvariants", "galois"], m));
    ws
}

fn trivial_workspace(name: &str, a: Algebra) -> Workspace {
    let mut ws = empty(a.field());
    ws.coalgebras.insert("k".into(), trivial_coalgebra(a.field()));
    ws.entwinings
        .insert("trivial".into(), bound(&[name, "k"], trivial_entwining(&a)));
    ws.algebras.insert(name.into(), a);
    ws
}

/// `M₂(ℚ)` entwined with the ground coalgebra.
pub fn m2() -> Workspace {
    trivial_workspace("M2", matrix_algebra(2, Field::Rational))
}

/// `ℚ[x]/(x²)` entwined with the ground coalgebra.
pub fn dual_numbers_q() -> Workspace {
    trivial_workspace("D", dual_numbers(Field::Rational))
}

/// Upper-triangular 2×2 matrices over 𝔽₂ entwined with the ground coalgebra.
pub fn upper_triangular_f2() -> Workspace {
    trivial_workspace("T2", upper_triangular(2, Field::prime(2).expect("2 is prime")))
}

/// File names and builders of every shipped workspace.
pub fn all() -> Vec<(&'static str, Workspace)> {
    vec![
        ("kZ2.json", kz2()),
        ("M2.json", m2()),
        ("dual_numbers.json", dual_numbers_q()),
        ("upper_triangular_f2.json", upper_triangular_f2()),
    ]
}
