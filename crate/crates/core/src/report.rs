//! Axiom reports: named failures with concrete witnesses.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::algebra::Elem;

/// One failed identity together with the tuple that breaks it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<Elem>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

/// Result of an exhaustive axiom check. Empty means every identity held.
///
/// Each axiom is reported at most once, with the first witness found in
/// lexicographic order of the quantified variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, axiom: impl Into<String>, witness: Vec<Elem>) {
        self.violations.push(Violation {
            axiom: axiom.into(),
            witness,
        });
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }

    /// Extend with every violation of `other`, prefixing the axiom names.
    pub fn extend_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for v in other.violations {
            self.push(format!("{prefix}{}", v.axiom), v.witness);
        }
    }

    /// Whether an axiom with exactly this name was reported.
    pub fn fails(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn witness(&self, axiom: &str) -> Option<&[Elem]> {
        self.violations
            .iter()
            .find(|v| v.axiom == axiom)
            .map(|v| v.witness.as_slice())
    }

    pub fn check(&mut self, axiom: &str, holds: bool) {
        if !holds {
            self.push(axiom, Vec::new());
        }
    }

    pub fn forall1(&mut self, axiom: &str, n: usize, mut pred: impl FnMut(Elem) -> bool) {
        if let Some(x) = (0..n).find(|&x| !pred(x)) {
            self.push(axiom, vec![x]);
        }
    }

    pub fn forall2(&mut self, axiom: &str, n: usize, mut pred: impl FnMut(Elem, Elem) -> bool) {
        for x in 0..n {
            for y in 0..n {
                if !pred(x, y) {
                    self.push(axiom, vec![x, y]);
                    return;
                }
            }
        }
    }

    pub fn forall3(
        &mut self,
        axiom: &str,
        n: usize,
        mut pred: impl FnMut(Elem, Elem, Elem) -> bool,
    ) {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !pred(x, y, z) {
                        self.push(axiom, vec![x, y, z]);
                        return;
                    }
                }
            }
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "pass");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
