//! The translation of c-differential terms into pairs of residuated-lattice
//! terms, its context equations, and the checks that tie the two sides
//! together on finite instances.

mod consequence;
mod pairing;
mod suite;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::kalman::KalmanError;
use crate::terms::{Equation, TermCD, TermError, TermRL};

pub use consequence::{
    finite_consequence_check, paired_consequence_check, witness_pairs, ConsequenceLimits,
    ConsequenceReport, Problem, Verdict,
};
pub use pairing::{pairing_check, Pairing, PairingOutcome, PairingWitness};
pub use suite::problem_suite;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error("`{0}` is not a symbol of the c-differential signature")]
    UnknownSymbol(String),
    #[error("{what} is {value}, above the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Kalman(#[from] KalmanError),
}

/// A symbol of the c-differential signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CdSymbol {
    Cap,
    Cup,
    Tensor,
    Wand,
    Inv,
    CBox,
    Zero,
    Center,
    One,
}

impl CdSymbol {
    pub const ALL: [CdSymbol; 9] = [
        CdSymbol::Cap,
        CdSymbol::Cup,
        CdSymbol::Tensor,
        CdSymbol::Wand,
        CdSymbol::Inv,
        CdSymbol::CBox,
        CdSymbol::Zero,
        CdSymbol::Center,
        CdSymbol::One,
    ];

    pub fn arity(self) -> usize {
        match self {
            CdSymbol::Cap | CdSymbol::Cup | CdSymbol::Tensor | CdSymbol::Wand => 2,
            CdSymbol::Inv | CdSymbol::CBox => 1,
            CdSymbol::Zero | CdSymbol::Center | CdSymbol::One => 0,
        }
    }
}

impl FromStr for CdSymbol {
    type Err = TranslationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "cap" | "∩" => CdSymbol::Cap,
            "cup" | "∪" => CdSymbol::Cup,
            "(x)" | "⊗" => CdSymbol::Tensor,
            "~>" | "⇝" => CdSymbol::Wand,
            "~" | "∼" | "¬" => CdSymbol::Inv,
            "Box" | "□" => CdSymbol::CBox,
            "0" => CdSymbol::Zero,
            "c" => CdSymbol::Center,
            "1" => CdSymbol::One,
            other => return Err(TranslationError::UnknownSymbol(other.to_string())),
        })
    }
}

impl fmt::Display for CdSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CdSymbol::Cap => "cap",
            CdSymbol::Cup => "cup",
            CdSymbol::Tensor => "(x)",
            CdSymbol::Wand => "~>",
            CdSymbol::Inv => "~",
            CdSymbol::CBox => "Box",
            CdSymbol::Zero => "0",
            CdSymbol::Center => "c",
            CdSymbol::One => "1",
        })
    }
}

/// The pair of RL terms assigned to a CD term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TranslatedTerm {
    pub first: TermRL,
    pub second: TermRL,
}

impl TranslatedTerm {
    pub fn variables(&self) -> BTreeSet<String> {
        let mut v = self.first.variables();
        v.extend(self.second.variables());
        v
    }
}

impl fmt::Display for TranslatedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Name of the `i`-th copy (1 or 2) of a source variable.
pub fn split_name(var: &str, i: u8) -> String {
    format!("{var}_{i}")
}

fn v(var: &str, i: u8) -> TermRL {
    TermRL::var(split_name(var, i))
}

/// The schema of a symbol over the argument variables `x1_1, x1_2, x2_1, x2_2`.
pub fn tau(symbol: CdSymbol) -> TranslatedTerm {
    use TermRL as T;
    let (a1, a2, b1, b2) = (v("x1", 1), v("x1", 2), v("x2", 1), v("x2", 2));
    let (first, second) = match symbol {
        CdSymbol::Cap => (T::meet(a1, b1), T::join(a2, b2)),
        CdSymbol::Cup => (T::join(a1, b1), T::meet(a2, b2)),
        CdSymbol::Tensor => (
            T::times(a1.clone(), b1.clone()),
            T::meet(T::imp(a1, b2), T::imp(b1, a2)),
        ),
        CdSymbol::Wand => (
            T::meet(T::imp(a1.clone(), b1), T::imp(b2.clone(), a2)),
            T::times(a1, b2),
        ),
        CdSymbol::Inv => (a2, a1),
        CdSymbol::CBox => (T::boxed(a1), T::dia(a2)),
        CdSymbol::Zero => (T::Zero, T::One),
        CdSymbol::Center => (T::Zero, T::Zero),
        CdSymbol::One => (T::One, T::Zero),
    };
    TranslatedTerm { first, second }
}

pub fn tau_by_name(symbol: &str) -> Result<TranslatedTerm, TranslationError> {
    Ok(tau(symbol.parse()?))
}

fn instantiate(schema: &TranslatedTerm, args: &[TranslatedTerm]) -> TranslatedTerm {
    let mut sub = |name: &str| {
        let pick = |j: usize, t: &TranslatedTerm| {
            if j == 1 {
                t.first.clone()
            } else {
                t.second.clone()
            }
        };
        match name {
            "x1_1" => pick(1, &args[0]),
            "x1_2" => pick(2, &args[0]),
            "x2_1" => pick(1, &args[1]),
            "x2_2" => pick(2, &args[1]),
            other => unreachable!("schema variable {other}"),
        }
    };
    TranslatedTerm {
        first: schema.first.map_vars(&mut sub),
        second: schema.second.map_vars(&mut sub),
    }
}

/// Extend the symbol table to whole terms: `x ↦ (x_1, x_2)`, and each
/// operation's schema is instantiated with the translated arguments.
pub fn tau_star(term: &TermCD) -> TranslatedTerm {
    use TermCD::*;
    let (symbol, args): (CdSymbol, Vec<TranslatedTerm>) = match term {
        Var(x) => {
            return TranslatedTerm {
                first: v(x, 1),
                second: v(x, 2),
            }
        }
        Zero => (CdSymbol::Zero, vec![]),
        Center => (CdSymbol::Center, vec![]),
        One => (CdSymbol::One, vec![]),
        Cap(a, b) => (CdSymbol::Cap, vec![tau_star(a), tau_star(b)]),
        Cup(a, b) => (CdSymbol::Cup, vec![tau_star(a), tau_star(b)]),
        Tensor(a, b) => (CdSymbol::Tensor, vec![tau_star(a), tau_star(b)]),
        Wand(a, b) => (CdSymbol::Wand, vec![tau_star(a), tau_star(b)]),
        Inv(a) => (CdSymbol::Inv, vec![tau_star(a)]),
        CBox(a) => (CdSymbol::CBox, vec![tau_star(a)]),
    };
    instantiate(&tau(symbol), &args)
}

/// The two componentwise RL equations of a CD equation.
pub fn translate_equation(eq: &Equation<TermCD>) -> [Equation<TermRL>; 2] {
    let l = tau_star(&eq.lhs);
    let r = tau_star(&eq.rhs);
    [
        Equation::new(l.first, r.first),
        Equation::new(l.second, r.second),
    ]
}

/// The context equations `v_1 * v_2 == 0`, one per source variable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContextSet {
    pub equations: Vec<Equation<TermRL>>,
}

impl fmt::Display for ContextSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.equations.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn context_for<S: AsRef<str>>(variables: &[S]) -> ContextSet {
    ContextSet {
        equations: variables
            .iter()
            .map(|x| {
                let x = x.as_ref();
                Equation::new(TermRL::times(v(x, 1), v(x, 2)), TermRL::Zero)
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::{parse_cd, parse_cd_equation, parse_rl, parse_rl_equation};

    fn rl(s: &str) -> TermRL {
        parse_rl(s).unwrap()
    }

    #[test]
    fn symbol_table() {
        assert_eq!(
            tau(CdSymbol::Center),
            TranslatedTerm {
                first: TermRL::Zero,
                second: TermRL::Zero
            }
        );
        assert_eq!(
            tau_by_name("~").unwrap(),
            TranslatedTerm {
                first: rl("x1_2"),
                second: rl("x1_1")
            }
        );
        assert_eq!(tau_by_name("(x)").unwrap().first, rl("x1_1 * x2_1"));
        assert_eq!(
            tau_by_name("(x)").unwrap().second,
            rl("(x1_1 -> x2_2) /\\ (x2_1 -> x1_2)")
        );
        assert_eq!(
            tau_by_name("~>").unwrap().first,
            rl("(x1_1 -> x2_1) /\\ (x2_2 -> x1_2)")
        );
        assert_eq!(tau_by_name("~>").unwrap().second, rl("x1_1 * x2_2"));
        assert_eq!(tau_by_name("Box").unwrap().first, rl("box(x1_1)"));
        assert_eq!(tau_by_name("Box").unwrap().second, rl("dia(x1_2)"));
        assert_eq!(tau_by_name("0").unwrap().second, TermRL::One);
        assert_eq!(tau_by_name("1").unwrap().first, TermRL::One);
        assert_eq!(tau_by_name("cup").unwrap().second, rl("x1_2 /\\ x2_2"));
        assert_eq!(
            tau_by_name("->"),
            Err(TranslationError::UnknownSymbol("->".into()))
        );
        for s in CdSymbol::ALL {
            assert_eq!(s.to_string().parse::<CdSymbol>().unwrap(), s);
            let vars = tau(s).variables();
            assert!(vars.len() <= 2 * s.arity());
        }
    }

    #[test]
    fn term_extension() {
        let t = tau_star(&parse_cd("x1").unwrap());
        assert_eq!((t.first, t.second), (rl("x1_1"), rl("x1_2")));
        let t = tau_star(&parse_cd("~c").unwrap());
        assert_eq!((t.first, t.second), (TermRL::Zero, TermRL::Zero));
        let t = tau_star(&parse_cd("~(x1 (x) x2)").unwrap());
        assert_eq!(t.first, rl("(x1_1 -> x2_2) /\\ (x2_1 -> x1_2)"));
        assert_eq!(t.second, rl("x1_1 * x2_1"));
    }

    #[test]
    fn equations_and_context() {
        let [a, b] = translate_equation(&parse_cd_equation("~x1 == x1").unwrap());
        assert_eq!(a, parse_rl_equation("x1_2 == x1_1").unwrap());
        assert_eq!(b, parse_rl_equation("x1_1 == x1_2").unwrap());
        let [a, b] = translate_equation(&parse_cd_equation("x1 cap c == c").unwrap());
        assert_eq!(a, parse_rl_equation("x1_1 /\\ 0 == 0").unwrap());
        assert_eq!(b, parse_rl_equation("x1_2 \\/ 0 == 0").unwrap());
        let [a, b] = translate_equation(&parse_cd_equation("x (x) c == x (x) c").unwrap());
        assert_eq!(a.lhs, a.rhs);
        assert_eq!(b.lhs, b.rhs);

        assert!(context_for::<&str>(&[]).equations.is_empty());
        let ctx = context_for(&["x1"]);
        assert_eq!(
            ctx.equations,
            vec![parse_rl_equation("x1_1 * x1_2 == 0").unwrap()]
        );
        assert_eq!(context_for(&["x1", "x2"]).equations.len(), 2);
    }
}
