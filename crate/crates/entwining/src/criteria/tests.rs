use super::reverify::*;
use super::*;
use crate::algstruct::{dual_coalgebra, dual_numbers, group_algebra, matrix_algebra, upper_triangular};
use crate::entwine::{doi_koppinen, trivial_entwining, trivial_entwining_coalg};

fn q() -> Field {
    Field::Rational
}

fn f2() -> Field {
    Field::prime(2).unwrap()
}

/// `kℤ₂` over itself with the trivial coaction `a ↦ a ⊗ 1`.
fn dk_z2(f: Field) -> Entwining {
    let h = group_algebra(2, f);
    doi_koppinen(&h, &h.alg, &tensor(&[&h.alg.id(), h.alg.unit()])).unwrap()
}

/// `kℤ₂` over itself with the regular coaction `Δ`.
fn dk_z2_regular(f: Field) -> Entwining {
    let h = group_algebra(2, f);
    doi_koppinen(&h, &h.alg, h.coalg.comult()).unwrap()
}

/// Every vector of `𝔽₂^n`, in lexicographic order.
fn all_f2(n: usize) -> impl Iterator<Item = Mat> {
    let f = f2();
    (0..1u64 << n).map(move |bits| Mat::from_fn(f, n, 1, |i, _| f.from_i64(((bits >> (n - 1 - i)) & 1) as i64)))
}

fn reverified(report: Report) -> bool {
    if !report.passed() {
        eprintln!("{:?}", report.failed_ids());
    }
    report.passed()
}

#[test]
fn trivial_coalgebra_imposes_no_v1_conditions() {
    let e = trivial_entwining(&matrix_algebra(2, q()));
    assert!(v1_conditions(&e).is_zero());
    assert!(v1p_conditions(&e).is_zero());
    assert_eq!(v1_space(&e).dim(), 4);
}

#[test]
fn v1_rank_matches_two_instantiations() {
    // stacking the conditions at M = k and M = k² must not add anything
    let e = dk_z2(q());
    let s = Structure::of(&e);
    let both = LinearSystem::assemble(s.f, s.c * s.a, |x| {
        let x = s.functional(x);
        [s.v1(&x, 1), s.v1(&x, 2)].concat()
    });
    assert_eq!(crate::exactlin::rank(&both.matrix), crate::exactlin::rank(&v1_conditions(&e)));
    let both = LinearSystem::assemble(s.f, s.c * s.a, |x| {
        let x = s.functional(x);
        [s.v1p(&x, 1), s.v1p(&x, 2)].concat()
    });
    assert_eq!(crate::exactlin::rank(&both.matrix), crate::exactlin::rank(&v1p_conditions(&e)));
}

#[test]
fn counit_casimir_for_trivial_algebra() {
    let coalg = group_algebra(2, q()).coalg;
    let e = trivial_entwining_coalg(&coalg);
    let theta = coalg.counit().clone();
    assert!(w1_space(&e).coordinates(&theta.reshape(2, 1)).is_some());
    assert!(reverified(verify_sep_contra_f(&e, &theta, 2)));
}

#[test]
fn matrix_algebra_is_separable() {
    let e = trivial_entwining(&matrix_algebra(2, q()));
    for m in 1..=3 {
        let theta = decide_sep_contra_f(&e).witness().unwrap().theta.clone();
        assert!(reverified(verify_sep_contra_f(&e, &theta, m)));
        let theta = decide_sep_co_f(&e).witness().unwrap().theta.clone();
        assert!(reverified(verify_sep_co_f(&e, &theta, m)));
    }
    // Σᵢ e_{i0} ⊗ e_{0i} is a separability element
    let f = q();
    let mut theta = Mat::zeros(f, 16, 1);
    theta.set(0, 0, f.one());
    theta.set(2 * 4 + 1, 0, f.one());
    assert!(reverified(verify_sep_contra_f(&e, &theta, 1)));
}

#[test]
fn dual_numbers_are_not_separable() {
    let e = trivial_entwining(&dual_numbers(q()));
    for verdict in [decide_sep_contra_f(&e), decide_sep_co_f(&e)] {
        let Verdict::None {
            certificate: Certificate::LinearInfeasibility { multiplier },
            ..
        } = verdict
        else {
            panic!("expected an infeasibility certificate");
        };
        assert!(!multiplier.is_empty());
    }
    // no element x ⊗ y sums to a separability element over 𝔽₂ either
    let e = trivial_entwining(&dual_numbers(f2()));
    assert!(decide_sep_co_f(&e).is_none());
    assert!(all_f2(4).all(|t| !verify_sep_co_f(&e, &t, 1).passed()));
}

#[test]
fn certificate_annihilates_system() {
    let e = trivial_entwining(&dual_numbers(q()));
    let s = Structure::of(&e);
    let system = casimir_system(&e, |s, x| [s.w1p(x, 1), s.w1p_normalization(x, 1)].concat());
    let y = infeasibility_certificate(&system).unwrap();
    let y = Mat::from_vec(s.f, 1, y.len(), y);
    assert!((&y * &system.matrix).is_zero());
    assert!((&y * &system.rhs).get(0, 0).is_one());
}

#[test]
fn group_algebra_separability_depends_on_characteristic() {
    let e = trivial_entwining(&group_algebra(2, q()).alg);
    let theta = decide_sep_co_f(&e).witness().unwrap().theta.clone();
    assert!(reverified(verify_sep_co_f(&e, &theta, 3)));
    let e = trivial_entwining(&group_algebra(2, f2()).alg);
    assert!(decide_sep_co_f(&e).is_none());
    assert!(all_f2(4).all(|t| !verify_sep_co_f(&e, &t, 1).passed()));
}

#[test]
fn doi_koppinen_separability_matches_exhaustive_search() {
    let e = dk_z2(q());
    assert!(decide_sep_co_f(&e).is_found());
    let e = dk_z2(f2());
    let verdict = decide_sep_co_f(&e);
    let hits = all_f2(8).filter(|t| verify_sep_co_f(&e, &t.reshape(4, 2), 1).passed()).count();
    assert_eq!(verdict.is_found(), hits > 0);
    assert!(verdict.is_none());
}

#[test]
fn separability_functional_sides() {
    let e = trivial_entwining(&matrix_algebra(2, q()));
    let sigma = decide_sep_contra_t(&e).witness().unwrap().e.clone();
    assert!(reverified(verify_sep_contra_t(&e, &sigma, 2)));
    let coalg = group_algebra(2, q()).coalg;
    let e = trivial_entwining_coalg(&coalg);
    let sigma = decide_sep_co_t(&e).witness().unwrap().e.clone();
    assert!(reverified(verify_sep_co_t(&e, &sigma, 3)));
    let sigma = decide_sep_contra_t(&e).witness().unwrap().e.clone();
    assert!(reverified(verify_sep_contra_t(&e, &sigma, 3)));
    // over 𝔽₂ the deciders agree with a scan of all four functionals
    let e = trivial_entwining_coalg(&group_algebra(2, f2()).coalg);
    let hits = all_f2(2).filter(|x| verify_sep_contra_t(&e, &x.transpose(), 1).passed()).count();
    assert_eq!(decide_sep_contra_t(&e).is_found(), hits > 0);
}

#[test]
fn separability_on_a_non_cocommutative_coalgebra() {
    let coalg = dual_coalgebra(&matrix_algebra(2, q()));
    let e = trivial_entwining_coalg(&coalg);
    for verdict in [decide_sep_contra_f(&e), decide_sep_co_f(&e)] {
        if let Some(w) = verdict.witness() {
            assert!(reverified(verify_sep_contra_f(&e, &w.theta, 2)) || reverified(verify_sep_co_f(&e, &w.theta, 2)));
        }
    }
    if let Some(w) = decide_sep_contra_t(&e).witness() {
        assert!(reverified(verify_sep_contra_t(&e, &w.e, 2)));
    }
    if let Some(w) = decide_sep_co_t(&e).witness() {
        assert!(reverified(verify_sep_co_t(&e, &w.e, 2)));
    }
}

#[test]
fn matrix_algebra_is_frobenius() {
    let e = trivial_entwining(&matrix_algebra(2, q()));
    for side in [Side::Contra, Side::Co] {
        let verdict = decide_frobenius(&e, side, DEFAULT_BUDGET);
        let pair = verdict.witness().expect("matrix algebras are Frobenius");
        for m in 1..=3 {
            let report = match side {
                Side::Contra => verify_frobenius_contra(&e, &pair.sigma.e, &pair.rho.theta, m),
                Side::Co => verify_frobenius_co(&e, &pair.sigma.e, &pair.rho.theta, m),
            };
            assert!(reverified(report));
        }
    }
}

#[test]
fn unit_entwining_is_frobenius() {
    let e = trivial_entwining(&crate::algstruct::trivial_algebra(q()));
    let pair = decide_frobenius_co(&e, DEFAULT_BUDGET).witness().cloned().unwrap();
    assert!(pair.sigma.e.get(0, 0).is_one());
    assert!(pair.rho.theta.get(0, 0).is_one());
}

#[test]
fn upper_triangular_is_not_frobenius() {
    let e = trivial_entwining(&upper_triangular(2, f2()));
    for side in [Side::Contra, Side::Co] {
        let verdict = decide_frobenius(&e, side, DEFAULT_BUDGET);
        assert!(
            matches!(verdict, Verdict::None { certificate: Certificate::Exhaustive { .. }, .. }),
            "{verdict:?}"
        );
    }
    // brute force over every (e, θ) ∈ 𝔽₂³ × 𝔽₂⁹
    let found = all_f2(3).any(|x| {
        let sigma = x.transpose();
        all_f2(9).any(|t| {
            verify_frobenius_contra(&e, &sigma, &t, 1).passed() || verify_frobenius_co(&e, &sigma, &t, 1).passed()
        })
    });
    assert!(!found);
}

#[test]
fn zero_budget_leaves_bilinear_instances_open() {
    let e = trivial_entwining(&upper_triangular(2, f2()));
    assert!(matches!(decide_frobenius_contra(&e, 0), Verdict::Unknown { .. }));
}

#[test]
fn frobenius_search_is_deterministic() {
    let e = trivial_entwining(&group_algebra(3, Field::prime(5).unwrap()).alg);
    assert_eq!(decide_frobenius_co(&e, DEFAULT_BUDGET), decide_frobenius_co(&e, DEFAULT_BUDGET));
}

#[test]
fn doi_koppinen_cointegral() {
    let e = dk_z2(q());
    let phi = find_cointegral(&e).witness().cloned().expect("cointegral over ℚ");
    assert!(reverified(verify_cointegral(&e, &phi.phi)));
    assert!(check_cointegral(&e, &phi.phi).unwrap().passed());
    let e = dk_z2(f2());
    assert!(find_cointegral(&e).is_none());
    assert!(all_f2(8).all(|x| !verify_cointegral(&e, &x.reshape(2, 4)).passed()));
}

#[test]
fn regular_coaction_has_a_cointegral_in_every_characteristic() {
    // relative Hopf modules: H → H is a total integral, so char 2 is no obstruction
    let e = dk_z2_regular(f2());
    let hits = all_f2(8).filter(|x| verify_cointegral(&e, &x.reshape(2, 4)).passed()).count();
    assert!(hits > 0);
    assert!(find_cointegral(&e).is_found());
    let hits = all_f2(8).filter(|t| verify_sep_co_f(&e, &t.reshape(4, 2), 1).passed()).count();
    assert!(hits > 0);
    assert!(decide_sep_co_f(&e).is_found());
}

#[test]
fn unit_cointegral_is_the_pairing() {
    let e = trivial_entwining(&crate::algstruct::trivial_algebra(q()));
    let phi = find_cointegral(&e).witness().cloned().unwrap();
    assert!(phi.phi.get(0, 0).is_one());
}

#[test]
fn maschke_fixes_entwined_maps_and_kills_zero() {
    let e = dk_z2(q());
    let phi = find_cointegral(&e).witness().cloned().unwrap();
    for (_, x) in module_corpus(&e).unwrap() {
        let ix = Mat::identity(e.field(), x.dim);
        assert_eq!(maschke_split_co(&e, &phi, &x, &x, &ix).unwrap(), ix);
        let zero = Mat::zeros(e.field(), x.dim, x.dim);
        assert!(maschke_split_co(&e, &phi, &x, &x, &zero).unwrap().is_zero());
    }
    for (_, x) in contramodule_corpus(&e).unwrap() {
        let ix = Mat::identity(e.field(), x.dim);
        assert_eq!(maschke_split_contra(&e, &phi, &x, &x, &ix).unwrap(), ix);
    }
}

#[test]
fn maschke_rejects_non_morphisms() {
    let e = dk_z2(q());
    let phi = find_cointegral(&e).witness().cloned().unwrap();
    let modules = module_corpus(&e).unwrap();
    let x = &modules[0].1;
    let colinear = comodule_hom_space(e.coalg(), &forget_fc(x), &forget_fc(x));
    let bad = (0..x.dim * x.dim)
        .map(|k| Mat::unit(e.field(), x.dim, x.dim, k / x.dim, k % x.dim))
        .find(|m| !colinear.contains(m))
        .unwrap();
    assert!(matches!(maschke_split_co(&e, &phi, x, x, &bad), Err(Error::Precondition(_))));
}

#[test]
fn probe_splits_the_corpus() {
    let e = dk_z2(q());
    let phi = find_cointegral(&e).witness().cloned().unwrap();
    let report = semisimplicity_probe(&e, &phi).unwrap();
    assert!(report.passed(), "{:?}", report.failed_ids());
    assert_eq!(report.checks.len(), 30);
}

#[test]
fn probe_is_not_applicable_without_a_cointegral() {
    let e = dk_z2(f2());
    let fake = Cointegral {
        phi: Mat::zeros(e.field(), 2, 4),
        coev: coevaluation(e.field(), 2),
    };
    let report = semisimplicity_probe(&e, &fake).unwrap();
    assert_eq!(report.failed_ids(), vec!["applicable"]);
}

#[test]
fn round_trips_return_the_witness() {
    for e in [dk_z2(q()), dk_z2_regular(q()), trivial_entwining(&matrix_algebra(2, q()))] {
        let v1 = v1_space(&e);
        for k in 0..v1.dim() {
            let sigma = v1.basis.column(k).transpose();
            assert_eq!(v1_round_trip(&e, &sigma), sigma);
        }
        let v1p = v1p_space(&e);
        for k in 0..v1p.dim() {
            let sigma = v1p.basis.column(k).transpose();
            assert_eq!(v1p_round_trip(&e, &sigma), sigma);
        }
        let s = Structure::of(&e);
        for k in 0..w1_space(&e).dim() {
            let theta = s.casimir(&w1_space(&e).basis.column(k));
            assert_eq!(w1_round_trip(&e, &theta), theta);
        }
        for k in 0..w1p_space(&e).dim() {
            let theta = s.casimir(&w1p_space(&e).basis.column(k));
            assert_eq!(w1p_round_trip(&e, &theta), theta);
        }
    }
}

