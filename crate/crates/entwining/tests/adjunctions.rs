use entwining::comodcat::{adjunction_check_tc_fc, comodule_hom_space, forget_fc, hom_space, induce_tc};
use entwining::contracat::{
    adjunction_check_at_af, adjunction_check_f_t, contra_hom_space, contramodule_hom_space, induce_a_t,
    induce_contra_t, left_module_hom_space,
};
use entwining::corpus::{random_adjunction_instance, AdjunctionInstance};
use entwining::exactlin::{Field, Mat};
use entwining::measuring_galois::{adjunction_check_comodule_side, adjunction_check_contra_side};
use entwining::report::Report;

mod common;
use common::{comodule_map, contra_map, module_map};

fn fields() -> [Field; 2] {
    [Field::Rational, Field::prime(5).unwrap()]
}

fn assert_bijection(label: &str, report: Report) {
    assert!(report.passed(), "{label}: {} failed {:?}", report.subject, report.failed_ids());
    for id in ["dimensions", "forward-lands", "backward-lands", "backward-after-forward", "forward-after-backward"] {
        assert!(report.checks.iter().any(|c| c.id == id), "{label}: {} lacks {id}", report.subject);
    }
}

fn four_adjunctions(inst: &AdjunctionInstance) -> Vec<Report> {
    let e = &inst.entwining;
    let m = &inst.measuring;
    vec![
        adjunction_check_tc_fc(e, &inst.comodule, &inst.module).unwrap(),
        adjunction_check_f_t(e, &inst.contra, &inst.contramodule).unwrap(),
        adjunction_check_at_af(e, &inst.left, &inst.contra).unwrap(),
        adjunction_check_comodule_side(m, &inst.target_module, &inst.source_module).unwrap(),
        adjunction_check_contra_side(m, &inst.target_contra, &inst.source_contra).unwrap(),
    ]
}

#[test]
fn adjunctions_hold_on_random_instances() {
    let mut count = 0;
    for seed in 0..12 {
        for f in fields() {
            let inst = random_adjunction_instance(seed, f);
            for report in four_adjunctions(&inst) {
                assert_bijection(&inst.label, report);
            }
            count += 1;
        }
    }
    assert!(count >= 20);
}

// Exhaustive counting over 𝔽₅: each morphism condition is written out directly.

fn all_maps(f: Field, rows: usize, cols: usize) -> impl Iterator<Item = Mat> {
    let n = rows * cols;
    (0..5u64.pow(n as u32)).map(move |mut code| {
        Mat::from_fn(f, rows, cols, |_, _| {
            let digit = code % 5;
            code /= 5;
            f.from_i64(digit as i64)
        })
    })
}

fn count(f: Field, rows: usize, cols: usize, is_morphism: impl Fn(&Mat) -> bool) -> usize {
    all_maps(f, rows, cols).filter(|g| is_morphism(g)).count()
}

fn power(dim: usize) -> usize {
    5usize.pow(dim as u32)
}

#[test]
fn hom_dimensions_match_exhaustive_enumeration_over_f5() {
    let f = Field::prime(5).unwrap();
    let mut compared = 0;
    for seed in 0..12 {
        let inst = random_adjunction_instance(seed, f);
        let e = &inst.entwining;
        let comodules = [inst.comodule.clone(), forget_fc(&inst.module)];
        let modules = [inst.module.clone(), induce_tc(e, &inst.comodule).unwrap()];
        let contras = [
            inst.contra.clone(),
            induce_contra_t(e, &inst.contramodule).unwrap(),
            induce_a_t(e, &inst.left).unwrap(),
        ];
        for x in &comodules {
            for y in &comodules {
                if x.dim <= 2 && y.dim <= 2 {
                    let dim = comodule_hom_space(e.coalg(), x, y).dim();
                    assert_eq!(power(dim), count(f, y.dim, x.dim, |g| comodule_map(e, x, y, g)), "{}", inst.label);
                    compared += 1;
                }
            }
        }
        for x in &modules {
            for y in &modules {
                if x.dim <= 2 && y.dim <= 2 {
                    let dim = hom_space(e, x, y).dim();
                    assert_eq!(power(dim), count(f, y.dim, x.dim, |g| module_map(e, x, y, g)), "{}", inst.label);
                    compared += 1;
                }
            }
        }
        for x in &contras {
            for y in &contras {
                if x.dim <= 2 && y.dim <= 2 {
                    let dim = contra_hom_space(e, x, y).dim();
                    assert_eq!(power(dim), count(f, y.dim, x.dim, |g| contra_map(e, x, y, g)), "{}", inst.label);
                    // the underlying contramodule and left-module hom spaces contain the entwined one
                    let plain = contramodule_hom_space(e.coalg(), &x.contramodule(), &y.contramodule()).dim();
                    let left = left_module_hom_space(e.alg(), &x.left_module(), &y.left_module()).dim();
                    assert!(dim <= plain && dim <= left);
                    compared += 1;
                }
            }
        }
    }
    assert!(compared >= 20, "only {compared} small hom spaces compared");
}
