use proptest::prelude::*;

use superhc::hciso;
use superhc::hwmod::{character_bruteforce, character_formula, HighestWeight};
use superhc::possys::{
    build_hermitian_pair, enumerate_admissible, enumeration_budget, flip_noncompact, is_abstract_positive,
    is_admissible, PositiveSystem, RealForm,
};
use superhc::rational::{int, q};
use superhc::{build_root_system, Family, Rational, Weight};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (0usize..=3, 0usize..=3).prop_filter("m ≠ n", |(m, n)| m != n).prop_map(|(m, n)| Family::A { m, n }),
        (0usize..=3, 1usize..=3).prop_map(|(m, n)| Family::B { m, n }),
        (2usize..=4).prop_map(|n| Family::C { n }),
        (2usize..=3, 1usize..=3).prop_map(|(m, n)| Family::D { m, n }),
        (-6i64..=6, 1i64..=5)
            .prop_filter("α ∉ {0, −1}", |(a, b)| *a != 0 && *a != -*b)
            .prop_map(|(a, b)| Family::D21 { alpha: q(a, b) }),
        Just(Family::F4),
        Just(Family::G3),
    ]
}

fn functional(dim: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec((-40i64..=40, 1i64..=7), dim).prop_map(|v| Weight(v.into_iter().map(|(a, b)| q(a, b)).collect()))
}

fn coords(dim: usize, bound: i64) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-bound..=bound).prop_map(int), dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_is_symmetric_and_roots_close_under_negation(f in family()) {
        let sys = build_root_system(&f).unwrap();
        for a in &sys.roots {
            prop_assert!(sys.contains(&-&a.weight));
            for b in &sys.roots {
                prop_assert_eq!(sys.form(&a.weight, &b.weight), sys.form(&b.weight, &a.weight));
            }
        }
    }

    #[test]
    fn regular_functionals_give_positive_systems(
        (f, l) in family().prop_flat_map(|f| {
            let dim = build_root_system(&f).unwrap().dim();
            (Just(f), functional(dim))
        })
    ) {
        let sys = build_root_system(&f).unwrap();
        if let Ok(p) = PositiveSystem::from_functional(&sys, &l) {
            prop_assert_eq!(p.weights().len() * 2, sys.roots.len());
            prop_assert!(is_abstract_positive(&sys, &p.weights()).unwrap());
            let again = PositiveSystem::from_simple(&sys, &p.simple_roots()).unwrap();
            prop_assert_eq!(again.weights(), p.weights());
        }
    }

    #[test]
    fn flipping_noncompact_roots_keeps_admissibility(f in family()) {
        for tag in RealForm::tags_for(&f) {
            let split = (*tag == "su").then(|| {
                let (a, b) = f.split();
                [a / 2 + 1, a - a / 2 - 1, b / 2, b - b / 2]
            });
            let Ok(pair) = build_hermitian_pair(&f, tag, split) else { continue };
            let p = pair.constructed_system().unwrap();
            prop_assert!(is_admissible(&pair, &p));
            let flipped = flip_noncompact(&pair, &p).unwrap();
            prop_assert!(is_admissible(&pair, &flipped));
            let d = pair.decompose(&p);
            let e = pair.decompose(&flipped);
            prop_assert_eq!(d.p_k, e.p_k);
            prop_assert_eq!(d.p_n0.len() + d.p_n1.len(), e.p_n0.len() + e.p_n1.len());
        }
    }

    #[test]
    fn linked_weights_share_the_casimir_value(
        lam in coords(3, 4),
        pick in 0usize..64,
    ) {
        let sys = build_root_system(&Family::A { m: 1, n: 0 }).unwrap();
        let p = superhc::possys::standard_positive_system(&sys).unwrap();
        let w = hciso::even_weyl_group(&sys, &p);
        let rho = superhc::hwmod::rho(&sys, &p).rho;
        let lam = Weight(lam);
        prop_assume!(hciso::is_typical(&sys, &rho, &lam));
        let orbit: Vec<Weight> = hciso::weyl_orbit(&w, &(&lam + &rho)).into_iter().collect();
        let mu = &orbit[pick % orbit.len()] - &rho;
        prop_assert_eq!(hciso::linkage(&sys, &w, &rho, &lam, &mu).unwrap(), true);
        let casimir = hciso::quadratic_form(&sys);
        prop_assert_eq!(
            hciso::infinitesimal_character(&casimir, &rho, &lam),
            hciso::infinitesimal_character(&casimir, &rho, &mu)
        );
    }

    #[test]
    fn character_paths_agree_on_osp_1_4(a in -4i64..=1, b in -4i64..=1, depth in 0usize..=5) {
        let pair = build_hermitian_pair(&Family::B { m: 0, n: 2 }, "sp", None).unwrap();
        let all = enumerate_admissible(&pair, enumeration_budget()).unwrap();
        for p in &all {
            if let Ok(hw) = HighestWeight::new(&pair, p, Weight::from_ints(&[a, b])) {
                prop_assert_eq!(character_formula(&hw, depth).unwrap(), character_bruteforce(&hw, depth).unwrap());
                let top = character_formula(&hw, 0).unwrap();
                prop_assert_eq!(top.mult(&hw.lambda), 1);
                prop_assert_eq!(top.terms.len(), 1);
            }
        }
    }
}
