use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::monadic::{check_monadic_rl, QuantifierPair};
use crate::report::AxiomReport;

use super::{build_c, build_k, CDiffView, CenterAlgebra, KalmanAlgebra, KalmanError};

fn require_monadic(base: &FiniteAlgebra, q: &QuantifierPair) -> Result<(), KalmanError> {
    let report = check_monadic_rl(base, q).map_err(|e| KalmanError::QuantifierInvalid {
        report: {
            let mut r = AxiomReport::new();
            r.push(e.to_string(), Vec::new());
            r
        },
    })?;
    if report.is_pass() {
        Ok(())
    } else {
        Err(KalmanError::QuantifierInvalid { report })
    }
}

/// `□_K(x, y) = (□x, ◇y)` on the positions of `K(L)`.
pub fn box_k(k: &KalmanAlgebra, q: &QuantifierPair) -> Result<Vec<Elem>, KalmanError> {
    require_monadic(k.base(), q)?;
    k.pairs()
        .iter()
        .enumerate()
        .map(|(p, &(x, y))| {
            k.position(q.boxed(x), q.dia(y))
                .ok_or(KalmanError::VerificationFailed {
                    what: "box_K stays inside K(L)".into(),
                    witness: vec![p],
                })
        })
        .collect()
}

/// The sixteen laws of `□_K` on `K(L)`, named `BK1` … `BK16`.
///
/// `BK6` is the inequality `□(a ⇝ b) ≤ □a ⇝ □b`; `BK8` is
/// `□(□a ⇝ b) = □a ⇝ □b`; `BK12` reads `¬` as the involution.
pub fn check_box_k_laws(k: &KalmanAlgebra, q: &QuantifierPair, bk: &[Elem]) -> AxiomReport {
    let l = k.base();
    let a = k.algebra();
    let n = k.size();
    let inv = k.inv();
    let c = k.center();
    let b = |x: Elem| bk[x];
    let mut r = AxiomReport::new();
    r.forall1("BK1", n, |p| {
        let (x, y) = k.pair(p);
        l.times(q.boxed(x), q.dia(y)) == l.zero()
    });
    r.check("BK2", b(k.bottom()) == k.bottom());
    r.check("BK3", b(c) == c);
    r.check("BK4", b(k.top()) == k.top());
    r.forall1("BK5", n, |x| a.imp(b(x), x) == k.top());
    r.forall2("BK6", n, |x, y| a.leq(b(a.imp(x, y)), a.imp(b(x), b(y))));
    r.forall2("BK7", n, |x, y| b(a.meet(x, y)) == a.meet(b(x), b(y)));
    r.forall2("BK8", n, |x, y| b(a.imp(b(x), y)) == a.imp(b(x), b(y)));
    r.forall2("BK9", n, |x, y| {
        a.leq(a.times(b(x), b(y)), b(a.times(x, y)))
    });
    r.forall2("BK10", n, |x, y| !a.leq(x, y) || a.leq(b(x), b(y)));
    r.forall2("BK11", n, |x, y| b(a.imp(b(x), b(y))) == a.imp(b(x), b(y)));
    r.forall1("BK12", n, |x| b(inv[b(inv[x])]) == inv[b(inv[x])]);
    r.forall1("BK13", n, |x| b(b(x)) == b(x));
    r.forall1("BK14", n, |x| b(a.meet(x, c)) == a.meet(b(x), c));
    r.forall1("BK15", n, |x| b(a.join(x, c)) == a.join(b(x), c));
    r.forall1("BK16", n, |x| b(a.times(x, c)) == a.times(b(x), c));
    r
}

/// `(x, y) ↦ (x, −x)`
pub fn box_neg(k: &KalmanAlgebra) -> Vec<Elem> {
    let l = k.base();
    k.pairs()
        .iter()
        .map(|&(x, _)| k.position(x, l.neg(x)).expect("x ⊙ −x = 0"))
        .collect()
}

/// The quantifier pair induced on `C(A)` by a center quantifier:
/// `□x = □_c x ∪ c` and `◇x = ~□_c(~x) ∪ c`.
pub fn recover_quantifiers(
    view: &CDiffView,
    center_box: &[Elem],
) -> Result<(CenterAlgebra, QuantifierPair), KalmanError> {
    if center_box.len() != view.size() {
        return Err(KalmanError::LengthMismatch {
            expected: view.size(),
            found: center_box.len(),
        });
    }
    let ca = build_c(view)?;
    let c = view.center;
    let lift = |x: Elem, v: Elem| {
        ca.index_of(view.cup(v, c))
            .ok_or(KalmanError::VerificationFailed {
                what: "recovered quantifier lands in C(A)".into(),
                witness: vec![x],
            })
    };
    let universal = (0..ca.size())
        .map(|i| lift(i, center_box[ca.embed(i)]))
        .collect::<Result<Vec<_>, _>>()?;
    let existential = (0..ca.size())
        .map(|i| lift(i, view.inv(center_box[view.inv(ca.embed(i))])))
        .collect::<Result<Vec<_>, _>>()?;
    let q = QuantifierPair::new(universal, existential);
    let report =
        check_monadic_rl(ca.algebra(), &q).map_err(|e| KalmanError::VerificationFailed {
            what: format!("recovered pair: {e}"),
            witness: Vec::new(),
        })?;
    if let Some(v) = report.violations.first() {
        return Err(KalmanError::VerificationFailed {
            what: format!("recovered pair satisfies {}", v.axiom),
            witness: v.witness.clone(),
        });
    }
    Ok((ca, q))
}

/// On `K(L)` itself: `□x = π₁ □_c(x, 0)` and `◇y = π₂ □_c(0, y)`.
pub fn recover_on_base(k: &KalmanAlgebra, center_box: &[Elem]) -> QuantifierPair {
    let l = k.base();
    let z = l.zero();
    let universal = l
        .elements()
        .map(|x| k.pair(center_box[k.position(x, z).expect("(x,0)")]).0)
        .collect();
    let existential = l
        .elements()
        .map(|y| k.pair(center_box[k.position(z, y).expect("(0,y)")]).1)
        .collect();
    QuantifierPair::new(universal, existential)
}

/// `φ : L → C(K(L))`, `x ↦ (x, 0)`, verified bijective, a homomorphism,
/// and (given `q`) carrying `□, ◇` to the pair recovered from `□_K`.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub kalman: KalmanAlgebra,
    pub center: CenterAlgebra,
    pub map: Vec<Elem>,
    /// The pair induced on `C(K(L))` by `□_K`, when `q` was given.
    pub center_pair: Option<QuantifierPair>,
}

pub fn phi(base: &FiniteAlgebra, q: Option<&QuantifierPair>) -> Result<PhiMap, KalmanError> {
    let kalman = build_k(base)?;
    let view = kalman.view();
    let center = build_c(&view)?;
    let fail = |what: &str, witness: Vec<Elem>| KalmanError::VerificationFailed {
        what: what.to_string(),
        witness,
    };
    let map = base
        .elements()
        .map(|x| {
            kalman
                .position(x, base.zero())
                .and_then(|p| center.index_of(p))
                .ok_or_else(|| fail("phi lands in C(K(L))", vec![x]))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen = vec![false; center.size()];
    for &v in &map {
        seen[v] = true;
    }
    if map.len() != center.size() || seen.iter().any(|s| !s) {
        return Err(fail("phi is a bijection", Vec::new()));
    }
    if let Some(w) = hom_failure(base, center.algebra(), &map) {
        return Err(fail("phi is a homomorphism", w));
    }
    let mut center_pair = None;
    if let Some(q) = q {
        let bk = box_k(&kalman, q)?;
        let (_, cq) = recover_quantifiers(&view, &bk)?;
        for x in base.elements() {
            if map[q.boxed(x)] != cq.boxed(map[x]) {
                return Err(fail("phi preserves box", vec![x]));
            }
            if map[q.dia(x)] != cq.dia(map[x]) {
                return Err(fail("phi preserves diamond", vec![x]));
            }
        }
        center_pair = Some(cq);
    }
    Ok(PhiMap {
        kalman,
        center,
        map,
        center_pair,
    })
}

/// First `[x, y]` at which `f` fails to commute with an operation, or
/// `[x]` for a constant.
fn hom_failure(a: &FiniteAlgebra, b: &FiniteAlgebra, f: &[Elem]) -> Option<Vec<Elem>> {
    if f[a.zero()] != b.zero() {
        return Some(vec![a.zero()]);
    }
    if f[a.one()] != b.one() {
        return Some(vec![a.one()]);
    }
    for x in a.elements() {
        for y in a.elements() {
            if f[a.meet(x, y)] != b.meet(f[x], f[y])
                || f[a.join(x, y)] != b.join(f[x], f[y])
                || f[a.times(x, y)] != b.times(f[x], f[y])
                || f[a.imp(x, y)] != b.imp(f[x], f[y])
            {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// `ψ : A → K(C(A))`, `x ↦ (x ∪ c, ~x ∪ c)`, with its properties.
#[derive(Clone, Debug)]
pub struct PsiMap {
    pub center: CenterAlgebra,
    pub target: KalmanAlgebra,
    pub map: Vec<Elem>,
    pub injective: bool,
    pub surjective: bool,
    /// Failures of the homomorphism property (operations, `~`, constants).
    pub homomorphism: AxiomReport,
    /// Whether `ψ ∘ □_c = □_K ∘ ψ`, when the view carries a center box.
    pub preserves_center_box: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PsiSummary {
    pub injective: bool,
    pub surjective: bool,
    pub homomorphism: bool,
    pub preserves_center_box: Option<bool>,
    pub domain: usize,
    pub codomain: usize,
}

impl PsiMap {
    /// Compute ψ and record its properties without insisting on any.
    pub fn compute(view: &CDiffView) -> Result<PsiMap, KalmanError> {
        let center = build_c(view)?;
        let target = build_k(center.algebra())?;
        let c = view.center;
        let map = view
            .algebra
            .elements()
            .map(|x| {
                let a = center.index_of(view.cup(x, c));
                let b = center.index_of(view.cup(view.inv(x), c));
                a.zip(b).and_then(|(a, b)| target.position(a, b)).ok_or(
                    KalmanError::VerificationFailed {
                        what: "psi lands in K(C(A))".into(),
                        witness: vec![x],
                    },
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut hits = vec![0usize; target.size()];
        for &v in &map {
            hits[v] += 1;
        }
        let injective = hits.iter().all(|&h| h <= 1);
        let surjective = hits.iter().all(|&h| h >= 1);
        let mut homomorphism = AxiomReport::new();
        if let Some(w) = hom_failure(&view.algebra, target.algebra(), &map) {
            homomorphism.push("operations", w);
        }
        let n = view.size();
        homomorphism.forall1("involution", n, |x| {
            map[view.inv(x)] == target.inv()[map[x]]
        });
        homomorphism.check("center", map[c] == target.center());
        let preserves_center_box = match &view.center_box {
            Some(bx) => {
                let (_, cq) = recover_quantifiers(view, bx)?;
                let bk = box_k(&target, &cq)?;
                Some(view.algebra.elements().all(|x| map[bx[x]] == bk[map[x]]))
            }
            None => None,
        };
        Ok(PsiMap {
            center,
            target,
            map,
            injective,
            surjective,
            homomorphism,
            preserves_center_box,
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective && self.homomorphism.is_pass()
    }

    pub fn summary(&self) -> PsiSummary {
        PsiSummary {
            injective: self.injective,
            surjective: self.surjective,
            homomorphism: self.homomorphism.is_pass(),
            preserves_center_box: self.preserves_center_box,
            domain: self.map.len(),
            codomain: self.target.size(),
        }
    }
}

/// ψ, required to be an injective homomorphism that preserves the center
/// box when one is present.
pub fn psi(view: &CDiffView) -> Result<PsiMap, KalmanError> {
    let m = PsiMap::compute(view)?;
    if !m.injective {
        return Err(KalmanError::VerificationFailed {
            what: "psi is injective".into(),
            witness: Vec::new(),
        });
    }
    if let Some(v) = m.homomorphism.violations.first() {
        return Err(KalmanError::VerificationFailed {
            what: format!("psi preserves {}", v.axiom),
            witness: v.witness.clone(),
        });
    }
    if m.preserves_center_box == Some(false) {
        return Err(KalmanError::VerificationFailed {
            what: "psi preserves the center box".into(),
            witness: Vec::new(),
        });
    }
    Ok(m)
}

/// Both directions of the correspondence between quantifier pairs on `L`
/// and center quantifiers on `K(L)`, for one pair:
///
/// * `forward`: the pair recovered on `C(K(L))` from `□_K` is `φ(q)`;
/// * `base`: recovering on `L` directly gives back `q`;
/// * `backward`: `□_K` rebuilt from the recovered base pair is `□_K`;
/// * `psi`: ψ carries `□_K` to the box built on `K(C(K(L)))`.
pub fn round_trip(base: &FiniteAlgebra, q: &QuantifierPair) -> Result<AxiomReport, KalmanError> {
    let mut r = AxiomReport::new();
    let pm = phi(base, Some(q));
    match pm {
        Ok(_) => {}
        Err(KalmanError::VerificationFailed { what, witness }) => {
            r.push(format!("forward: {what}"), witness);
            return Ok(r);
        }
        Err(e) => return Err(e),
    }
    let k = build_k(base)?;
    let bk = box_k(&k, q)?;
    let back = recover_on_base(&k, &bk);
    r.check("base", &back == q);
    r.check(
        "backward",
        box_k(&k, &back).ok().as_deref() == Some(&bk[..]),
    );
    let view = k.view().with_center_box(bk);
    match PsiMap::compute(&view) {
        Ok(m) => r.check(
            "psi",
            m.preserves_center_box == Some(true) && m.is_isomorphism(),
        ),
        Err(KalmanError::VerificationFailed { what, witness }) => {
            r.push(format!("psi: {what}"), witness)
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// Every map on the view satisfying `Bc1`–`Bc7`, in lexicographic order.
///
/// Backtracking assigns values below each element (`Bc2` in integral
/// algebras) and prunes on monotonicity and meet preservation.
pub fn enumerate_center_quantifiers(view: &CDiffView) -> Vec<Vec<Elem>> {
    let n = view.size();
    let mut out = Vec::new();
    let mut map: Vec<Option<Elem>> = vec![None; n];
    fn go(view: &CDiffView, k: usize, map: &mut Vec<Option<Elem>>, out: &mut Vec<Vec<Elem>>) {
        let n = view.size();
        if k == n {
            let m: Vec<Elem> = map.iter().map(|v| v.expect("assigned")).collect();
            if super::validate_center_quantifier(view, &m)
                .violations
                .iter()
                .all(|v| !is_axiom(&v.axiom))
            {
                out.push(m);
            }
            return;
        }
        for v in 0..n {
            if !view.leq(v, k) {
                continue;
            }
            map[k] = Some(v);
            let ok = (0..=k).all(|x| {
                let bx = map[x].expect("assigned");
                (0..=k).all(|y| {
                    let by = map[y].expect("assigned");
                    (!view.leq(x, y) || view.leq(bx, by))
                        && map[view.cap(x, y)].is_none_or(|m| m == view.cap(bx, by))
                })
            });
            if ok {
                go(view, k + 1, map, out);
            }
        }
        map[k] = None;
    }
    go(view, 0, &mut map, &mut out);
    out
}

fn is_axiom(name: &str) -> bool {
    matches!(name, "Bc1" | "Bc2" | "Bc3" | "Bc4" | "Bc5" | "Bc6" | "Bc7")
}
