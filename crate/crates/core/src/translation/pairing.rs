use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::kalman::{box_k, build_k, CDiffView, KalmanAlgebra};
use crate::monadic::QuantifierPair;
use crate::terms::program::Program;
use crate::terms::{eval_cd, eval_rl, Assignment, TermCD, TermError};

use super::{split_name, tau_star, TranslationError};

/// The first subterm, in post-order, whose value in `K(L)` differs from
/// the pair of values of its translation in `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingWitness {
    pub assignment: Assignment,
    #[serde(serialize_with = "super::consequence::as_string")]
    pub subterm: TermCD,
    pub kalman_value: (Elem, Elem),
    pub translated_value: (Elem, Elem),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingOutcome {
    pub holds: bool,
    pub witness: Option<PairingWitness>,
}

impl PairingOutcome {
    fn pass() -> Self {
        PairingOutcome {
            holds: true,
            witness: None,
        }
    }
}

/// `(K(L), □_K)` next to `(L, q)`, ready to compare terms on both.
#[derive(Clone, Debug)]
pub struct Pairing {
    base: FiniteAlgebra,
    q: QuantifierPair,
    k: KalmanAlgebra,
    view: CDiffView,
}

impl Pairing {
    pub fn new(base: &FiniteAlgebra, q: &QuantifierPair) -> Result<Self, TranslationError> {
        let k = build_k(base)?;
        let bk = box_k(&k, q)?;
        let view = k.view().with_center_box(bk);
        Ok(Pairing {
            base: base.clone(),
            q: q.clone(),
            k,
            view,
        })
    }

    pub fn kalman(&self) -> &KalmanAlgebra {
        &self.k
    }

    pub fn view(&self) -> &CDiffView {
        &self.view
    }

    fn split(&self, assignment: &Assignment) -> Assignment {
        let mut out = Assignment::new();
        for (name, &p) in assignment {
            if let Some(&(a, b)) = self.k.pairs().get(p) {
                out.insert(split_name(name, 1), a);
                out.insert(split_name(name, 2), b);
            }
        }
        out
    }

    /// Compare both sides on one assignment of `K(L)` positions.
    pub fn check(
        &self,
        term: &TermCD,
        assignment: &Assignment,
    ) -> Result<PairingOutcome, TranslationError> {
        for v in term.variables() {
            match assignment.get(&v) {
                None => return Err(TermError::UnboundVariable(v).into()),
                Some(&p) if p >= self.k.size() => {
                    return Err(TermError::ValueOutOfRange { name: v, value: p }.into())
                }
                Some(_) => {}
            }
        }
        let split = self.split(assignment);
        let mut found = None;
        self.first_mismatch(term, assignment, &split, &mut found)?;
        Ok(match found {
            None => PairingOutcome::pass(),
            Some(w) => PairingOutcome {
                holds: false,
                witness: Some(w),
            },
        })
    }

    fn first_mismatch(
        &self,
        term: &TermCD,
        assignment: &Assignment,
        split: &Assignment,
        found: &mut Option<PairingWitness>,
    ) -> Result<(), TranslationError> {
        for child in term.children() {
            self.first_mismatch(child, assignment, split, found)?;
            if found.is_some() {
                return Ok(());
            }
        }
        let kalman_value = self.k.pair(eval_cd(&self.view, term, assignment)?);
        let t = tau_star(term);
        let translated_value = (
            eval_rl(&self.base, &self.q, &t.first, split)?,
            eval_rl(&self.base, &self.q, &t.second, split)?,
        );
        if kalman_value != translated_value {
            *found = Some(PairingWitness {
                assignment: assignment.clone(),
                subterm: term.clone(),
                kalman_value,
                translated_value,
            });
        }
        Ok(())
    }

    /// Compare both sides on every assignment; stops at the first failure.
    pub fn check_all(&self, term: &TermCD) -> Result<PairingOutcome, TranslationError> {
        let vars: Vec<String> = term.variables().into_iter().collect();
        let cd = Program::compile_cd(&self.view, &vars, &[term])?;
        let split_vars: Vec<String> = vars
            .iter()
            .flat_map(|v| [split_name(v, 1), split_name(v, 2)])
            .collect();
        let t = tau_star(term);
        let rl = Program::compile_rl(&self.base, &self.q, &split_vars, &[&t.first, &t.second])?;
        let mut split_values = vec![0; split_vars.len()];
        let (mut scratch, mut out) = (Vec::new(), Vec::new());
        let failed = cd.for_each_assignment(|values, root| {
            for (i, &p) in values.iter().enumerate() {
                let (a, b) = self.k.pair(p);
                split_values[2 * i] = a;
                split_values[2 * i + 1] = b;
            }
            rl.run(&split_values, &mut scratch, &mut out);
            self.k.pair(root[0]) == (out[0], out[1])
        });
        match failed {
            None => Ok(PairingOutcome::pass()),
            Some(values) => {
                let asg: Assignment = vars.into_iter().zip(values).collect();
                self.check(term, &asg)
            }
        }
    }
}

/// One-shot comparison for a single assignment into `K(base)`.
pub fn pairing_check(
    base: &FiniteAlgebra,
    q: &QuantifierPair,
    term: &TermCD,
    assignment: &Assignment,
) -> Result<PairingOutcome, TranslationError> {
    Pairing::new(base, q)?.check(term, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtins as b;
    use crate::terms::parse_cd;

    #[test]
    fn constant_and_box() {
        let l3 = b::lukasiewicz(3);
        let id = QuantifierPair::identity(3);
        let out = pairing_check(&l3, &id, &parse_cd("c").unwrap(), &Assignment::new()).unwrap();
        assert!(out.holds);
        let sub = QuantifierPair::new(vec![0, 0, 2], vec![0, 2, 2]);
        let p = Pairing::new(&l3, &sub).unwrap();
        let t = parse_cd("Box(x1)").unwrap();
        let mut count = 0;
        for x in 0..p.kalman().size() {
            let asg: Assignment = [("x1".to_string(), x)].into_iter().collect();
            assert!(p.check(&t, &asg).unwrap().holds);
            count += 1;
        }
        assert_eq!(count, 6);
        assert!(
            p.check_all(&parse_cd("~(x1 (x) x2)").unwrap())
                .unwrap()
                .holds
        );
    }

    #[test]
    fn detects_a_broken_pairing() {
        // a view whose Box disagrees with the quantifier pair
        let l3 = b::lukasiewicz(3);
        let sub = QuantifierPair::new(vec![0, 0, 2], vec![0, 2, 2]);
        let mut p = Pairing::new(&l3, &sub).unwrap();
        let n = p.kalman().size();
        p.view.center_box = Some((0..n).collect());
        let t = parse_cd("~Box(x1) cap c").unwrap();
        let out = p.check_all(&t).unwrap();
        assert!(!out.holds);
        let w = out.witness.unwrap();
        assert_eq!(w.subterm, parse_cd("Box(x1)").unwrap());
    }

    #[test]
    fn rejects_bad_assignments() {
        let l3 = b::lukasiewicz(3);
        let id = QuantifierPair::identity(3);
        let t = parse_cd("x1").unwrap();
        assert!(pairing_check(&l3, &id, &t, &Assignment::new()).is_err());
        let asg: Assignment = [("x1".to_string(), 6)].into_iter().collect();
        assert!(pairing_check(&l3, &id, &t, &asg).is_err());
    }
}
