use std::collections::BTreeSet;
use std::fmt::Display;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{Elem, FiniteAlgebra};
use crate::kalman::CDiffView;
use crate::monadic::QuantifierPair;
use crate::terms::program::Program;
use crate::terms::{parse_cd_equation, Assignment, Equation, TermCD, TermError, TermRL};

use super::{context_for, split_name, translate_equation, Pairing, TranslationError};

pub(crate) fn as_string<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

/// Premises and a conclusion in the c-differential signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub name: String,
    pub premises: Vec<Equation<TermCD>>,
    pub conclusion: Equation<TermCD>,
}

impl Problem {
    pub fn parse(name: &str, premises: &[&str], conclusion: &str) -> Result<Problem, TermError> {
        Ok(Problem {
            name: name.to_string(),
            premises: premises
                .iter()
                .map(|p| parse_cd_equation(p))
                .collect::<Result<_, _>>()?,
            conclusion: parse_cd_equation(conclusion)?,
        })
    }

    pub fn variables(&self) -> Vec<String> {
        let mut vars: BTreeSet<String> = self.conclusion.variables();
        for p in &self.premises {
            vars.extend(p.variables());
        }
        vars.into_iter().collect()
    }

    pub fn uses_box(&self) -> bool {
        std::iter::once(&self.conclusion)
            .chain(&self.premises)
            .any(|e| e.lhs.uses_box() || e.rhs.uses_box())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConsequenceLimits {
    pub max_vars: usize,
    /// Cap on assignments per algebra.
    pub max_assignments: u64,
}

impl Default for ConsequenceLimits {
    fn default() -> Self {
        ConsequenceLimits {
            max_vars: 3,
            max_assignments: 10_000_000,
        }
    }
}

/// Whether the premises entail the conclusion in one algebra; the witness
/// is the first assignment satisfying the premises but not the conclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub algebra: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Assignment>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsequenceReport {
    pub problem: String,
    pub side_a: Vec<Verdict>,
    pub side_b: Vec<Verdict>,
    pub holds_a: bool,
    pub holds_b: bool,
    /// Catalog-level verdicts coincide.
    pub agreement: bool,
    /// For paired catalogs, indices whose two verdicts differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paired_disagreements: Option<Vec<usize>>,
}

impl ConsequenceReport {
    /// Agreement at catalog level and, when paired, at every instance.
    pub fn is_consistent(&self) -> bool {
        self.agreement
            && self
                .paired_disagreements
                .as_ref()
                .is_none_or(|d| d.is_empty())
    }
}

fn check_limits(
    size: usize,
    vars: usize,
    limits: &ConsequenceLimits,
) -> Result<(), TranslationError> {
    let count = (size as u64).checked_pow(vars as u32).unwrap_or(u64::MAX);
    if count > limits.max_assignments {
        return Err(TranslationError::LimitExceeded {
            what: "assignment count",
            value: count.min(usize::MAX as u64) as usize,
            limit: limits.max_assignments.min(usize::MAX as u64) as usize,
        });
    }
    Ok(())
}

fn verdict(name: String, vars: &[String], program: &Program, premises: usize) -> Verdict {
    // roots come in (lhs, rhs) pairs: premises first, then conclusions
    let failed = program.for_each_assignment(|_, out| {
        let sat = |i: usize| out[2 * i] == out[2 * i + 1];
        !(0..premises).all(sat) || (premises..out.len() / 2).all(sat)
    });
    Verdict {
        algebra: name,
        holds: failed.is_none(),
        witness: failed.map(|values| vars.iter().cloned().zip(values).collect()),
    }
}

fn side_a_verdict(
    view: &CDiffView,
    problem: &Problem,
    vars: &[String],
) -> Result<Verdict, TranslationError> {
    let mut roots: Vec<&TermCD> = Vec::new();
    for e in problem
        .premises
        .iter()
        .chain(std::iter::once(&problem.conclusion))
    {
        roots.push(&e.lhs);
        roots.push(&e.rhs);
    }
    let program = Program::compile_cd(view, vars, &roots)?;
    Ok(verdict(
        view.algebra.name().to_string(),
        vars,
        &program,
        problem.premises.len(),
    ))
}

fn side_b_verdict(
    a: &FiniteAlgebra,
    q: &QuantifierPair,
    premises: &[Equation<TermRL>],
    conclusion: &[Equation<TermRL>],
    split_vars: &[String],
) -> Result<Verdict, TranslationError> {
    let roots: Vec<&TermRL> = premises
        .iter()
        .chain(conclusion)
        .flat_map(|e| [&e.lhs, &e.rhs])
        .collect();
    let program = Program::compile_rl(a, q, split_vars, &roots)?;
    Ok(verdict(
        a.name().to_string(),
        split_vars,
        &program,
        premises.len(),
    ))
}

/// Decide the problem on every c-differential algebra of side A, and its
/// translation (with context equations) on every `(L, q)` of side B.
pub fn finite_consequence_check(
    side_a: &[CDiffView],
    side_b: &[(FiniteAlgebra, QuantifierPair)],
    problem: &Problem,
    limits: &ConsequenceLimits,
) -> Result<ConsequenceReport, TranslationError> {
    let vars = problem.variables();
    if vars.len() > limits.max_vars {
        return Err(TranslationError::LimitExceeded {
            what: "variable count",
            value: vars.len(),
            limit: limits.max_vars,
        });
    }
    for view in side_a {
        check_limits(view.size(), vars.len(), limits)?;
    }
    for (a, _) in side_b {
        check_limits(a.size(), 2 * vars.len(), limits)?;
    }

    let split_vars: Vec<String> = vars
        .iter()
        .flat_map(|v| [split_name(v, 1), split_name(v, 2)])
        .collect();
    let mut rl_premises: Vec<Equation<TermRL>> = problem
        .premises
        .iter()
        .flat_map(translate_equation)
        .collect();
    rl_premises.extend(context_for(&vars).equations);
    let rl_conclusion = translate_equation(&problem.conclusion);

    let verdicts_a = side_a
        .par_iter()
        .map(|view| side_a_verdict(view, problem, &vars))
        .collect::<Result<Vec<_>, _>>()?;
    let verdicts_b = side_b
        .par_iter()
        .map(|(a, q)| side_b_verdict(a, q, &rl_premises, &rl_conclusion, &split_vars))
        .collect::<Result<Vec<_>, _>>()?;
    let holds_a = verdicts_a.iter().all(|v| v.holds);
    let holds_b = verdicts_b.iter().all(|v| v.holds);
    Ok(ConsequenceReport {
        problem: problem.name.clone(),
        side_a: verdicts_a,
        side_b: verdicts_b,
        holds_a,
        holds_b,
        agreement: holds_a == holds_b,
        paired_disagreements: None,
    })
}

/// Side A is `(K(L), □_K)` for each `(L, q)` of side B, and verdicts are
/// also compared instance by instance.
pub fn paired_consequence_check(
    pairs: &[(FiniteAlgebra, QuantifierPair)],
    problem: &Problem,
    limits: &ConsequenceLimits,
) -> Result<ConsequenceReport, TranslationError> {
    let views = pairs
        .iter()
        .map(|(a, q)| Pairing::new(a, q).map(|p| p.view().clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = finite_consequence_check(&views, pairs, problem, limits)?;
    let disagreements = report
        .side_a
        .iter()
        .zip(&report.side_b)
        .enumerate()
        .filter(|(_, (a, b))| a.holds != b.holds)
        .map(|(i, _)| i)
        .collect();
    report.paired_disagreements = Some(disagreements);
    Ok(report)
}

/// Value of an element of `K(L)` as a base pair, for reporting witnesses.
pub fn witness_pairs(pairing: &Pairing, witness: &Assignment) -> Vec<(String, (Elem, Elem))> {
    witness
        .iter()
        .map(|(k, &p)| (k.clone(), pairing.kalman().pair(p)))
        .collect()
}
