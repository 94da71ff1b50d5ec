//! Monadic expansions: quantifier pairs `(□, ◇)` on residuated lattices,
//! single-box quantifiers on involutive ones, and U-operators on MV-algebras.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::report::AxiomReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonadicError {
    #[error("quantifier map has length {found}, algebra has {expected} elements")]
    LengthMismatch { expected: usize, found: usize },
    #[error("quantifier map sends {x} to {value}, which is not an element")]
    OutOfRange { x: Elem, value: Elem },
    #[error("algebra is not a residuated lattice (needs integral and zero-bounded)")]
    NotResiduatedLattice,
    #[error("algebra is not involutive: --{x} = {back}")]
    NotInvolutive { x: Elem, back: Elem },
}

/// A universal quantifier `□` together with an existential `◇`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuantifierPair {
    #[serde(rename = "box")]
    pub universal: Vec<Elem>,
    #[serde(rename = "diamond")]
    pub existential: Vec<Elem>,
}

impl QuantifierPair {
    pub fn new(universal: Vec<Elem>, existential: Vec<Elem>) -> Self {
        QuantifierPair {
            universal,
            existential,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect(), (0..n).collect())
    }

    #[inline]
    pub fn boxed(&self, x: Elem) -> Elem {
        self.universal[x]
    }

    #[inline]
    pub fn dia(&self, x: Elem) -> Elem {
        self.existential[x]
    }

    fn check_shape(&self, a: &FiniteAlgebra) -> Result<(), MonadicError> {
        check_map(a, &self.universal)?;
        check_map(a, &self.existential)
    }
}

fn check_map(a: &FiniteAlgebra, map: &[Elem]) -> Result<(), MonadicError> {
    if map.len() != a.size() {
        return Err(MonadicError::LengthMismatch {
            expected: a.size(),
            found: map.len(),
        });
    }
    match map.iter().enumerate().find(|(_, &v)| v >= a.size()) {
        Some((x, &value)) => Err(MonadicError::OutOfRange { x, value }),
        None => Ok(()),
    }
}

fn require_rl(a: &FiniteAlgebra) -> Result<(), MonadicError> {
    if a.is_residuated_lattice_shape() {
        Ok(())
    } else {
        Err(MonadicError::NotResiduatedLattice)
    }
}

fn require_involutive(a: &FiniteAlgebra) -> Result<(), MonadicError> {
    match a.elements().find(|&x| a.neg(a.neg(x)) != x) {
        Some(x) => Err(MonadicError::NotInvolutive {
            x,
            back: a.neg(a.neg(x)),
        }),
        None => Ok(()),
    }
}

fn m1(r: &mut AxiomReport, a: &FiniteAlgebra, bx: &[Elem]) {
    r.forall1("M1", a.size(), |x| a.leq(bx[x], x));
}

fn m3(r: &mut AxiomReport, a: &FiniteAlgebra, bx: &[Elem]) {
    r.forall2("M3", a.size(), |x, y| {
        bx[a.meet(x, y)] == a.meet(bx[x], bx[y])
    });
}

fn m7(r: &mut AxiomReport, a: &FiniteAlgebra, bx: &[Elem]) {
    r.forall2("M7", a.size(), |x, y| {
        bx[a.imp(bx[x], y)] == a.imp(bx[x], bx[y])
    });
}

fn m2_m6(r: &mut AxiomReport, a: &FiniteAlgebra, q: &QuantifierPair) {
    let n = a.size();
    r.forall1("M2", n, |x| q.boxed(q.dia(x)) == q.dia(x));
    r.forall2("M6", n, |x, y| {
        q.boxed(a.imp(x, q.boxed(y))) == a.imp(q.dia(x), q.boxed(y))
    });
}

/// Check (M1)–(M7) on an FLe-algebra.
pub fn check_monadic_fle(
    a: &FiniteAlgebra,
    q: &QuantifierPair,
) -> Result<AxiomReport, MonadicError> {
    q.check_shape(a)?;
    let mut r = AxiomReport::new();
    m1(&mut r, a, &q.universal);
    r.forall1("M2", a.size(), |x| q.boxed(q.dia(x)) == q.dia(x));
    m3(&mut r, a, &q.universal);
    r.check("M4", q.boxed(a.zero()) == a.zero());
    r.check("M5", q.boxed(a.one()) == a.one());
    r.forall2("M6", a.size(), |x, y| {
        q.boxed(a.imp(x, q.boxed(y))) == a.imp(q.dia(x), q.boxed(y))
    });
    m7(&mut r, a, &q.universal);
    Ok(r)
}

/// Check (M1)–(M3), (M6), (M7) on a residuated lattice. When these pass,
/// (M4) and (M5) must follow; if they do not, the report carries an
/// internal-consistency violation.
pub fn check_monadic_rl(
    a: &FiniteAlgebra,
    q: &QuantifierPair,
) -> Result<AxiomReport, MonadicError> {
    q.check_shape(a)?;
    require_rl(a)?;
    Ok(monadic_rl_report(a, q))
}

fn monadic_rl_report(a: &FiniteAlgebra, q: &QuantifierPair) -> AxiomReport {
    let mut r = AxiomReport::new();
    m1(&mut r, a, &q.universal);
    m3(&mut r, a, &q.universal);
    m2_m6(&mut r, a, q);
    m7(&mut r, a, &q.universal);
    if r.is_pass() {
        if q.boxed(a.zero()) != a.zero() {
            r.push("internal: M4 not derived", vec![a.zero()]);
        }
        if q.boxed(a.one()) != a.one() {
            r.push("internal: M5 not derived", vec![a.one()]);
        }
    }
    r
}

/// Every consequence listed for monadic residuated lattices, items 1–25.
/// Item names are `P1` … `P25`.
///
/// `P16`, `◇(x → ◇y) ≤ ◇x → ◇y`, is not a consequence of the axioms: it
/// already fails on the simple monadic four-element Boolean algebra.
pub fn check_monadic_consequences(a: &FiniteAlgebra, q: &QuantifierPair) -> AxiomReport {
    let n = a.size();
    let b = |x: Elem| q.boxed(x);
    let d = |x: Elem| q.dia(x);
    let le = |x: Elem, y: Elem| a.leq(x, y);
    let imp = |x: Elem, y: Elem| a.imp(x, y);
    let t = |x: Elem, y: Elem| a.times(x, y);
    let mut r = AxiomReport::new();
    r.forall1("P1", n, |x| le(x, d(x)));
    r.forall2("P2", n, |x, y| !le(x, y) || le(b(x), b(y)));
    r.forall2("P3", n, |x, y| !le(x, y) || le(d(x), d(y)));
    r.forall1("P4", n, |x| b(x) == d(b(x)));
    r.forall2("P5", n, |x, y| b(imp(d(x), y)) == imp(d(x), b(y)));
    r.forall2("P6", n, |x, y| b(imp(x, d(y))) == imp(d(x), d(y)));
    r.forall1("P7", n, |x| b(b(x)) == b(x));
    r.forall1("P8", n, |x| d(d(x)) == d(x));
    r.check("P9", d(a.one()) == a.one());
    r.check("P10", d(a.zero()) == a.zero());
    r.forall2("P11", n, |x, y| d(t(d(x), d(y))) == t(d(x), d(y)));
    r.forall2("P12", n, |x, y| b(t(b(x), b(y))) == t(b(x), b(y)));
    r.forall2("P13", n, |x, y| d(t(x, d(y))) == t(d(x), d(y)));
    r.forall2("P14", n, |x, y| b(a.join(d(x), d(y))) == a.join(d(x), d(y)));
    r.forall2("P15", n, |x, y| d(a.join(x, y)) == a.join(d(x), d(y)));
    r.forall2("P16", n, |x, y| le(d(imp(x, d(y))), imp(d(x), d(y))));
    r.forall2("P17", n, |x, y| le(t(b(x), b(y)), b(t(x, y))));
    r.forall2("P18", n, |x, y| d(t(x, b(y))) == t(d(x), b(y)));
    r.forall2("P19", n, |x, y| le(t(d(x), b(y)), d(t(x, y))));
    r.forall2("P20", n, |x, y| b(imp(b(x), b(y))) == imp(b(x), b(y)));
    r.forall1("P21", n, |x| b(a.neg(b(x))) == a.neg(b(x)));
    r.forall1("P22", n, |x| b(a.neg(x)) == a.neg(d(x)));
    r.forall1("P23", n, |x| le(d(b(x)), x));
    r.forall1("P24", n, |x| le(x, b(d(x))));
    r.forall2("P25", n, |x, y| le(d(x), y) == le(x, b(y)));
    r
}

/// The least `y` with `x ≤ □y` for every `x`, if each exists.
pub fn left_adjoint(a: &FiniteAlgebra, universal: &[Elem]) -> Option<Vec<Elem>> {
    a.elements()
        .map(|x| {
            let ups: Vec<Elem> = a.elements().filter(|&y| a.leq(x, universal[y])).collect();
            ups.iter()
                .copied()
                .find(|&m| ups.iter().all(|&y| a.leq(m, y)))
        })
        .collect()
}

/// Interior operator with image `fixed`: `x ↦ max {s ∈ fixed : s ≤ x}`.
fn interior(a: &FiniteAlgebra, fixed: &[Elem]) -> Option<Vec<Elem>> {
    a.elements()
        .map(|x| {
            let below: Vec<Elem> = fixed.iter().copied().filter(|&s| a.leq(s, x)).collect();
            below
                .iter()
                .copied()
                .find(|&m| below.iter().all(|&s| a.leq(s, m)))
        })
        .collect()
}

/// All quantifier pairs on a residuated lattice, sorted by `(□, ◇)`.
///
/// A box satisfying (M1), idempotence and meet preservation is an interior
/// operator whose image is a meet-closed set containing `0` and `1`. Each
/// such set is tried; the diamond is the left adjoint of the box.
pub fn enumerate_monadic(a: &FiniteAlgebra) -> Vec<QuantifierPair> {
    if !a.is_residuated_lattice_shape() {
        return Vec::new();
    }
    let free: Vec<Elem> = a
        .elements()
        .filter(|&x| x != a.zero() && x != a.one())
        .collect();
    let subsets: u64 = 1 << free.len();
    let mut out: Vec<QuantifierPair> = (0..subsets)
        .into_par_iter()
        .filter_map(|mask| {
            let mut fixed = vec![a.zero(), a.one()];
            fixed.dedup();
            fixed.extend(
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x),
            );
            let closed = fixed
                .iter()
                .all(|&s| fixed.iter().all(|&t| fixed.contains(&a.meet(s, t))));
            if !closed {
                return None;
            }
            let universal = interior(a, &fixed)?;
            let existential = left_adjoint(a, &universal)?;
            let q = QuantifierPair::new(universal, existential);
            monadic_rl_report(a, &q).is_pass().then_some(q)
        })
        .collect();
    out.sort();
    out
}

/// Check (M1), (M3), (M7) for a single box on an involutive residuated
/// lattice, and that `◇ = −□−` completes it to a monadic pair.
pub fn check_mirl(a: &FiniteAlgebra, universal: &[Elem]) -> Result<AxiomReport, MonadicError> {
    check_map(a, universal)?;
    require_rl(a)?;
    require_involutive(a)?;
    let mut r = AxiomReport::new();
    m1(&mut r, a, universal);
    m3(&mut r, a, universal);
    m7(&mut r, a, universal);
    if r.is_pass() {
        let q = derived_pair(a, universal);
        r.extend_prefixed("derived pair: ", monadic_rl_report(a, &q));
    }
    Ok(r)
}

/// `(□, −□−)`
pub fn derived_pair(a: &FiniteAlgebra, universal: &[Elem]) -> QuantifierPair {
    let existential = a.elements().map(|x| a.neg(universal[a.neg(x)])).collect();
    QuantifierPair::new(universal.to_vec(), existential)
}

/// The MV flag, the Wajsberg identities (W1)–(W4) of the base, and
/// (U1), (U2) for the operator.
pub fn check_umv(a: &FiniteAlgebra, universal: &[Elem]) -> Result<AxiomReport, MonadicError> {
    check_map(a, universal)?;
    let n = a.size();
    let one = a.one();
    let imp = |x: Elem, y: Elem| a.imp(x, y);
    let mut r = AxiomReport::new();
    r.check("MV", a.classify().is_mv);
    r.forall1("W1", n, |x| imp(one, x) == x);
    r.forall3("W2", n, |x, y, z| {
        imp(imp(x, y), imp(imp(y, z), imp(x, z))) == one
    });
    r.forall2("W3", n, |x, y| imp(imp(x, y), y) == imp(imp(y, x), x));
    r.forall2("W4", n, |x, y| {
        imp(imp(a.neg(y), a.neg(x)), imp(x, y)) == one
    });
    r.forall1("U1", n, |x| imp(universal[x], x) == one);
    r.forall2("U2", n, |x, y| {
        universal[imp(universal[x], y)] == imp(universal[x], universal[y])
    });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtins as b;

    // L3 carrier: 0, 1 = 1/2, 2.
    fn l3_sub() -> QuantifierPair {
        QuantifierPair::new(vec![0, 0, 2], vec![0, 2, 2])
    }

    #[test]
    fn identity_pair_passes() {
        for a in [b::boolean2(), b::lukasiewicz(3), b::godel(4)] {
            let q = QuantifierPair::identity(a.size());
            assert!(check_monadic_fle(&a, &q).unwrap().is_pass());
            assert!(check_monadic_rl(&a, &q).unwrap().is_pass());
            assert!(check_monadic_consequences(&a, &q).is_pass());
        }
    }

    #[test]
    fn swapped_box_fails_m1_at_zero() {
        let b2 = b::boolean2();
        let q = QuantifierPair::new(vec![1, 0], vec![0, 1]);
        let r = check_monadic_fle(&b2, &q).unwrap();
        assert_eq!(r.witness("M1"), Some(&[0][..]));
    }

    #[test]
    fn lukasiewicz_subalgebra_pair() {
        let l3 = b::lukasiewicz(3);
        assert!(check_monadic_fle(&l3, &l3_sub()).unwrap().is_pass());
        assert!(check_monadic_rl(&l3, &l3_sub()).unwrap().is_pass());
        // item 22 at 1/2: box(-1/2) = -dia(1/2) = 0
        let q = l3_sub();
        assert_eq!(q.boxed(l3.neg(1)), 0);
        assert_eq!(l3.neg(q.dia(1)), 0);
    }

    #[test]
    fn godel_subalgebra_pair_outcome() {
        // In G3, -1/2 = 0, so box(1/2 -> box 0) = box(0) = 0 while
        // dia(1/2) -> box(0) = 1 -> 0 = 0; the checks settle the rest.
        let g3 = b::godel(3);
        let q = l3_sub();
        let r = check_monadic_rl(&g3, &q).unwrap();
        let all = enumerate_monadic(&g3);
        assert_eq!(r.is_pass(), all.contains(&q));
    }

    #[test]
    fn length_mismatch() {
        let l3 = b::lukasiewicz(3);
        let q = QuantifierPair::new(vec![0, 1], vec![0, 1, 2]);
        assert!(matches!(
            check_monadic_fle(&l3, &q),
            Err(MonadicError::LengthMismatch {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(
            enumerate_monadic(&b::boolean2()),
            vec![QuantifierPair::identity(2)]
        );
        assert_eq!(
            enumerate_monadic(&b::trivial()),
            vec![QuantifierPair::identity(1)]
        );
        let l3 = enumerate_monadic(&b::lukasiewicz(3));
        assert!(l3.contains(&QuantifierPair::identity(3)));
        assert!(l3.contains(&l3_sub()));
    }

    #[test]
    fn mirl_on_lukasiewicz() {
        let l3 = b::lukasiewicz(3);
        assert!(check_mirl(&l3, &[0, 1, 2]).unwrap().is_pass());
        assert_eq!(derived_pair(&l3, &[0, 1, 2]), QuantifierPair::identity(3));
        assert!(check_mirl(&l3, &[0, 0, 2]).unwrap().is_pass());
        assert_eq!(derived_pair(&l3, &[0, 0, 2]), l3_sub());
    }

    #[test]
    fn mirl_rejects_godel() {
        assert!(matches!(
            check_mirl(&b::godel(3), &[0, 1, 2]),
            Err(MonadicError::NotInvolutive { x: 1, back: 2 })
        ));
    }

    #[test]
    fn umv_examples() {
        let l3 = b::lukasiewicz(3);
        assert!(check_umv(&l3, &[0, 1, 2]).unwrap().is_pass());
        assert!(check_umv(&l3, &[0, 0, 2]).unwrap().is_pass());
        let r = check_umv(&b::godel(3), &[0, 1, 2]).unwrap();
        assert!(r.fails("MV"));
    }
}
