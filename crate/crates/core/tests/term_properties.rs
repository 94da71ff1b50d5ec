use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use reslat_core::catalog::builtins as b;
use reslat_core::kalman::box_k;
use reslat_core::terms::random::{random_cd, random_rl, var_name, TermShape};
use reslat_core::terms::{eval_cd, eval_rl, parse_cd, parse_rl, Assignment};
use reslat_core::translation::{split_name, tau_star, translate_equation};
use reslat_core::{build_k, Equation, QuantifierPair, TermCD, TermRL};

fn cd_term(seed: u64) -> TermCD {
    random_cd(&mut ChaCha8Rng::seed_from_u64(seed), &TermShape::default())
}

fn rl_term(seed: u64) -> TermRL {
    random_rl(&mut ChaCha8Rng::seed_from_u64(seed), &TermShape::default())
}

fn l3_pair() -> QuantifierPair {
    QuantifierPair::new(vec![0, 0, 2], vec![0, 2, 2])
}

fn assignment(values: &[usize], size: usize) -> Assignment {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| (var_name(i + 1), v % size))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cd_print_parse_round_trip(seed in any::<u64>()) {
        let t = cd_term(seed);
        prop_assert_eq!(parse_cd(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn rl_print_parse_round_trip(seed in any::<u64>()) {
        let t = rl_term(seed);
        prop_assert_eq!(parse_rl(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn cd_evaluation_respects_substitution(
        seed in any::<u64>(),
        sub in any::<u64>(),
        values in prop::collection::vec(0usize..64, 3),
    ) {
        let l = b::lukasiewicz(3);
        let k = build_k(&l).unwrap();
        let view = k.view().with_center_box(box_k(&k, &l3_pair()).unwrap());
        let (t, s) = (cd_term(seed), cd_term(sub));
        let asg = assignment(&values, view.size());
        let mut updated = asg.clone();
        updated.insert("x1".into(), eval_cd(&view, &s, &asg).unwrap());
        prop_assert_eq!(
            eval_cd(&view, &t.substitute("x1", &s), &asg).unwrap(),
            eval_cd(&view, &t, &updated).unwrap()
        );
    }

    #[test]
    fn rl_evaluation_respects_substitution(
        seed in any::<u64>(),
        sub in any::<u64>(),
        values in prop::collection::vec(0usize..64, 3),
    ) {
        let l = b::lukasiewicz(3);
        let q = l3_pair();
        let (t, s) = (rl_term(seed), rl_term(sub));
        let asg = assignment(&values, 3);
        let mut updated = asg.clone();
        updated.insert("x2".into(), eval_rl(&l, &q, &s, &asg).unwrap());
        prop_assert_eq!(
            eval_rl(&l, &q, &t.substitute("x2", &s), &asg).unwrap(),
            eval_rl(&l, &q, &t, &updated).unwrap()
        );
    }

    #[test]
    fn ground_terms_ignore_the_assignment(
        seed in any::<u64>(),
        a in prop::collection::vec(0usize..64, 3),
        c in prop::collection::vec(0usize..64, 3),
    ) {
        let l = b::godel(3);
        let k = build_k(&l).unwrap();
        let view = k.view().with_center_box(box_k(&k, &l3_pair()).unwrap());
        let ground = cd_term(seed).map_vars(&mut |_| TermCD::Center);
        prop_assert!(ground.variables().is_empty());
        prop_assert_eq!(
            eval_cd(&view, &ground, &assignment(&a, view.size())).unwrap(),
            eval_cd(&view, &ground, &assignment(&c, view.size())).unwrap()
        );
    }

    #[test]
    fn translation_uses_exactly_the_split_variables(seed in any::<u64>()) {
        let t = cd_term(seed);
        let expected: std::collections::BTreeSet<String> = t
            .variables()
            .iter()
            .flat_map(|v| [split_name(v, 1), split_name(v, 2)])
            .collect();
        prop_assert_eq!(tau_star(&t).variables(), expected);
    }

    #[test]
    fn equation_translation_is_injective_without_involution(
        s1 in any::<u64>(),
        s2 in any::<u64>(),
        s3 in any::<u64>(),
    ) {
        let t = |s| drop_involution(&cd_term(s));
        let e1 = Equation::new(t(s1), t(s2));
        let e2 = Equation::new(t(s1), t(s3));
        if e1 != e2 {
            prop_assert_ne!(translate_equation(&e1), translate_equation(&e2));
        }
        let renamed = Equation::new(
            e1.lhs.map_vars(&mut |v| TermCD::var(format!("{v}r"))),
            e1.rhs.map_vars(&mut |v| TermCD::var(format!("{v}r"))),
        );
        if !e1.variables().is_empty() {
            prop_assert_ne!(translate_equation(&e1), translate_equation(&renamed));
        }
    }
}

/// The same term with every `~` removed.
fn drop_involution(t: &TermCD) -> TermCD {
    use TermCD::*;
    let bin = |f: fn(TermCD, TermCD) -> TermCD, x: &TermCD, y: &TermCD| {
        f(drop_involution(x), drop_involution(y))
    };
    match t {
        Var(_) | Zero | Center | One => t.clone(),
        Cap(x, y) => bin(TermCD::cap, x, y),
        Cup(x, y) => bin(TermCD::cup, x, y),
        Tensor(x, y) => bin(TermCD::tensor, x, y),
        Wand(x, y) => bin(TermCD::wand, x, y),
        Inv(x) => drop_involution(x),
        CBox(x) => TermCD::cbox(drop_involution(x)),
    }
}

#[test]
fn involution_laws_collide_under_translation() {
    let same = |a: &str, b: &str| {
        let ea = reslat_core::terms::parse_cd_equation(a).unwrap();
        let eb = reslat_core::terms::parse_cd_equation(b).unwrap();
        assert_ne!(ea, eb);
        assert_eq!(
            translate_equation(&ea),
            translate_equation(&eb),
            "{a} vs {b}"
        );
    };
    same("~~x1 == x2", "x1 == x2");
    same("~0 == x1", "1 == x1");
    same("~(x1 cap x2) == x1", "~x1 cup ~x2 == x1");
}

#[test]
fn printing_is_stable_on_samples() {
    for seed in 0..200 {
        let t = cd_term(seed);
        let once = t.to_string();
        assert_eq!(parse_cd(&once).unwrap().to_string(), once);
    }
}
