mod common;

use proptest::prelude::*;

use reslat_core::catalog::builtins as b;
use reslat_core::kalman::{
    box_k, build_c, check_ck, check_mv_bullet, enumerate_center_quantifiers, kappa_search, phi,
    validate_cdiff, PsiMap,
};
use reslat_core::monadic::{
    check_mirl, check_monadic_consequences, check_monadic_fle, check_umv, derived_pair,
};
use reslat_core::{build_k, CDiffView, Elem, FiniteAlgebra};

use common::*;

#[test]
fn catalog_algebras_are_residuated() {
    for e in catalog_up_to(6) {
        let a = &e.algebra;
        assert!(a.validate().is_pass(), "{}", e.name);
        for x in a.elements() {
            for y in a.elements() {
                for z in a.elements() {
                    assert_eq!(a.leq(a.times(x, y), z), a.leq(x, a.imp(y, z)), "{}", e.name);
                }
            }
        }
        let f = e.flags;
        assert_eq!(
            f.is_mv,
            f.is_involutive && f.is_divisible && f.is_prelinear,
            "{}",
            e.name
        );
        assert!(f.is_integral && f.is_zero_bounded);
    }
}

#[test]
fn builtin_flags() {
    let flags = |a: FiniteAlgebra| a.classify();
    assert!(flags(b::lukasiewicz(3)).is_mv);
    assert!(!flags(b::godel(4)).is_involutive);
    let t = flags(b::trivial());
    assert!(t.is_mv && t.is_rdl && t.is_involutive && t.is_divisible);
}

#[test]
fn monadic_pairs_satisfy_the_consequences_except_p16() {
    for e in catalog_up_to(6) {
        let a = &e.algebra;
        for q in &e.quantifiers {
            assert!(check_monadic_fle(a, q).unwrap().is_pass(), "{}", e.name);
            let r = check_monadic_consequences(a, q);
            let others: Vec<_> = r.violations.iter().filter(|v| v.axiom != "P16").collect();
            assert!(others.is_empty(), "{}: {:?}", e.name, others);
            // the reverse of P16 always holds
            for x in a.elements() {
                for y in a.elements() {
                    let (dx, dy) = (q.dia(x), q.dia(y));
                    assert!(a.leq(a.imp(dx, dy), q.dia(a.imp(x, dy))), "{}", e.name);
                }
            }
        }
    }
}

#[test]
fn p16_fails_on_the_simple_monadic_boolean_square() {
    // B4 carrier: 0, a, b, 1
    let a = b::boolean4();
    let q = reslat_core::QuantifierPair::new(vec![0, 0, 0, 3], vec![0, 3, 3, 3]);
    assert!(check_monadic_fle(&a, &q).unwrap().is_pass());
    let r = check_monadic_consequences(&a, &q);
    assert_eq!(r.violations.len(), 1);
    assert_eq!(r.witness("P16"), Some(&[1, 0][..]));
    // ◇(a → ◇0) = ◇b = 1 while ◇a → ◇0 = 1 → 0 = 0
    assert_eq!(q.dia(a.imp(1, q.dia(0))), 3);
    assert_eq!(a.imp(q.dia(1), q.dia(0)), 0);
}

#[test]
fn mirl_and_umv_agree_on_mv_algebras() {
    let mut checked = 0;
    for e in catalog_up_to(8).into_iter().filter(|e| e.flags.is_mv) {
        let a = &e.algebra;
        for q in &e.quantifiers {
            let mirl = check_mirl(a, &q.universal).unwrap();
            let umv = check_umv(a, &q.universal).unwrap();
            assert!(mirl.is_pass() && umv.is_pass(), "{}", e.name);
            assert_eq!(&derived_pair(a, &q.universal), q);
            checked += 1;
        }
        // boxes that are not quantifiers are rejected by both
        for bx in all_maps(a.size()).into_iter().take(2000) {
            let mirl = check_mirl(a, &bx).unwrap().is_pass();
            let umv = check_umv(a, &bx).unwrap().is_pass();
            assert_eq!(mirl, umv, "{} {:?}", e.name, bx);
        }
    }
    assert!(checked > 0);
}

/// `K(L)` operations computed from the pair formulas on `L`.
fn kalman_oracle(l: &FiniteAlgebra, x: (Elem, Elem), y: (Elem, Elem)) -> [(Elem, Elem); 4] {
    let ((a, b), (c, d)) = (x, y);
    [
        (l.meet(a, c), l.join(b, d)),
        (l.join(a, c), l.meet(b, d)),
        (l.times(a, c), l.meet(l.imp(a, d), l.imp(c, b))),
        (l.meet(l.imp(a, c), l.imp(d, b)), l.times(d, a)),
    ]
}

#[test]
fn kalman_tables_match_pair_formulas() {
    for e in catalog_up_to(5) {
        let l = &e.algebra;
        let k = build_k(l).unwrap();
        let v = k.view();
        assert_eq!(k.pairs(), kalman_pairs(l).as_slice());
        for p in 0..k.size() {
            let (a, b) = k.pair(p);
            assert_eq!(k.pair(v.inv(p)), (b, a));
            for r in 0..k.size() {
                let got =
                    [v.cap(p, r), v.cup(p, r), v.tensor(p, r), v.wand(p, r)].map(|x| k.pair(x));
                assert_eq!(got, kalman_oracle(l, k.pair(p), k.pair(r)), "{}", e.name);
            }
        }
        assert_eq!(k.pair(k.center()), (l.zero(), l.zero()));
        assert_eq!(k.pair(k.top()), (l.one(), l.zero()));
        assert_eq!(k.pair(k.bottom()), (l.zero(), l.one()));
    }
}

#[test]
fn center_of_kalman_is_the_base() {
    for e in catalog_up_to(5) {
        let m = phi(&e.algebra, None).unwrap();
        assert_eq!(m.center.size(), e.size());
        for q in &e.quantifiers {
            let m = phi(&e.algebra, Some(q)).unwrap();
            let cq = m.center_pair.unwrap();
            for x in e.algebra.elements() {
                assert_eq!(m.map[q.boxed(x)], cq.boxed(m.map[x]));
            }
        }
    }
}

#[test]
fn center_quantifiers_biject_with_pairs_on_involutive_bases() {
    for e in catalog_up_to(5)
        .into_iter()
        .filter(|e| e.flags.is_involutive)
    {
        let k = build_k(&e.algebra).unwrap();
        let mut images: Vec<Vec<Elem>> = e
            .quantifiers
            .iter()
            .map(|q| box_k(&k, q).unwrap())
            .collect();
        images.sort();
        assert_eq!(
            enumerate_center_quantifiers(&k.view()),
            images,
            "{}",
            e.name
        );
    }
}

#[test]
fn kappa_is_absent_on_kalman_algebras() {
    for l in [b::boolean2(), b::lukasiewicz(3), b::godel(3), b::godel(4)] {
        let k = build_k(&l).unwrap();
        let out = kappa_search(&k.view());
        assert!(out.kappa.is_none(), "{}", l.name());
        assert!(out.ck_holds);
        assert!(out.contradicts_ck);
    }
}

#[test]
fn mv_bullet_holds_on_small_kalman_algebras() {
    for l in [b::boolean2(), b::lukasiewicz(3), b::godel(3), b::godel(4)] {
        let k = build_k(&l).unwrap();
        assert!(check_mv_bullet(&k.view()).is_pass(), "{}", l.name());
    }
}

/// Every catalog algebra of size at most 8 read as a view: its negation as
/// involution and each fixed point as center, kept when c-differential.
fn involutive_views() -> Vec<CDiffView> {
    let mut out = Vec::new();
    for e in catalog_up_to(8)
        .into_iter()
        .filter(|e| e.flags.is_involutive)
    {
        let a = &e.algebra;
        let inv: Vec<Elem> = a.elements().map(|x| a.neg(x)).collect();
        for c in a.elements().filter(|&c| inv[c] == c) {
            let v = CDiffView::new(a.clone(), inv.clone(), c);
            if validate_cdiff(&v, e.flags.is_distributive).is_pass() {
                out.push(v);
            }
        }
    }
    out
}

#[test]
fn ck_agrees_with_psi_surjectivity() {
    let views: Vec<CDiffView> = catalog_up_to(4)
        .iter()
        .map(|e| build_k(&e.algebra).unwrap().view())
        .chain(involutive_views())
        .collect();
    let mut ck_fails = 0;
    for v in &views {
        build_c(v).unwrap();
        let psi = PsiMap::compute(v).unwrap();
        let ck = check_ck(v).is_pass();
        assert_eq!(ck, psi.surjective, "{}", v.algebra.name());
        ck_fails += usize::from(!ck);
    }
    assert!(ck_fails >= 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kalman_of_products_validates(i in 0usize..6, j in 0usize..6) {
        let small = [b::boolean2(), b::lukasiewicz(3), b::godel(3), b::lukasiewicz(4), b::godel(4), b::boolean4()];
        let l = small[i].product(&small[j % 3]);
        let k = build_k(&l).unwrap();
        prop_assert_eq!(k.size(), kalman_pairs(&l).len());
        prop_assert!(validate_cdiff(&k.view(), l.is_distributive()).is_pass());
        prop_assert!(check_ck(&k.view()).is_pass());
    }
}
