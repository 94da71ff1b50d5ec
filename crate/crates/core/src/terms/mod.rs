//! Terms over the residuated-lattice signature and the c-differential
//! signature: syntax trees, parsing, printing and evaluation.

mod eval;
mod parse;
mod print;
pub mod program;
pub mod random;

use std::collections::BTreeSet;

use thiserror::Error;

pub use eval::{eval_cd, eval_rl, Assignment};
pub use parse::{parse_cd, parse_cd_equation, parse_rl, parse_rl_equation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("`{symbol}` at line {line}, column {column} belongs to the {other} signature")]
    SignatureMismatch {
        line: usize,
        column: usize,
        symbol: String,
        other: &'static str,
    },
    #[error("variable `{0}` is not assigned")]
    UnboundVariable(String),
    #[error("value {value} for `{name}` is not an element")]
    ValueOutOfRange { name: String, value: usize },
    #[error("term uses Box but no center quantifier is given")]
    MissingCenterBox,
}

/// A term in `∧ ∨ ⊙ → − □ ◇ 0 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermRL {
    Var(String),
    Zero,
    One,
    Meet(Box<TermRL>, Box<TermRL>),
    Join(Box<TermRL>, Box<TermRL>),
    Times(Box<TermRL>, Box<TermRL>),
    Imp(Box<TermRL>, Box<TermRL>),
    /// `−x`, kept as its own node so printing round-trips.
    Neg(Box<TermRL>),
    Boxed(Box<TermRL>),
    Dia(Box<TermRL>),
}

/// A term in `∩ ∪ ⊗ ⇝ ~ □_c 0 c 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermCD {
    Var(String),
    Zero,
    Center,
    One,
    Cap(Box<TermCD>, Box<TermCD>),
    Cup(Box<TermCD>, Box<TermCD>),
    Tensor(Box<TermCD>, Box<TermCD>),
    Wand(Box<TermCD>, Box<TermCD>),
    Inv(Box<TermCD>),
    CBox(Box<TermCD>),
}

/// `lhs ≈ rhs` over one signature.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Equation<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T> Equation<T> {
    pub fn new(lhs: T, rhs: T) -> Self {
        Equation { lhs, rhs }
    }
}

macro_rules! ctor2 {
    ($ty:ident, $($f:ident => $v:ident),*) => {
        impl $ty {
            $(pub fn $f(a: $ty, b: $ty) -> $ty { $ty::$v(Box::new(a), Box::new(b)) })*
        }
    };
}

macro_rules! ctor1 {
    ($ty:ident, $($f:ident => $v:ident),*) => {
        #[allow(clippy::should_implement_trait)]
        impl $ty {
            $(pub fn $f(a: $ty) -> $ty { $ty::$v(Box::new(a)) })*
        }
    };
}

ctor2!(TermRL, meet => Meet, join => Join, times => Times, imp => Imp);
ctor1!(TermRL, neg => Neg, boxed => Boxed, dia => Dia);
ctor2!(TermCD, cap => Cap, cup => Cup, tensor => Tensor, wand => Wand);
ctor1!(TermCD, inv => Inv, cbox => CBox);

impl TermRL {
    pub fn var(name: impl Into<String>) -> TermRL {
        TermRL::Var(name.into())
    }

    pub fn children(&self) -> Vec<&TermRL> {
        use TermRL::*;
        match self {
            Var(_) | Zero | One => vec![],
            Meet(a, b) | Join(a, b) | Times(a, b) | Imp(a, b) => vec![a, b],
            Neg(a) | Boxed(a) | Dia(a) => vec![a],
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        if let TermRL::Var(v) = self {
            out.insert(v.clone());
        }
        for c in self.children() {
            c.collect_vars(out);
        }
    }

    /// Operator nesting depth; atoms have depth 0.
    pub fn depth(&self) -> usize {
        self.children()
            .iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Rebuild with `f` applied to every variable.
    pub fn map_vars(&self, f: &mut impl FnMut(&str) -> TermRL) -> TermRL {
        use TermRL::*;
        match self {
            Var(v) => f(v),
            Zero => Zero,
            One => One,
            Meet(a, b) => TermRL::meet(a.map_vars(f), b.map_vars(f)),
            Join(a, b) => TermRL::join(a.map_vars(f), b.map_vars(f)),
            Times(a, b) => TermRL::times(a.map_vars(f), b.map_vars(f)),
            Imp(a, b) => TermRL::imp(a.map_vars(f), b.map_vars(f)),
            Neg(a) => TermRL::neg(a.map_vars(f)),
            Boxed(a) => TermRL::boxed(a.map_vars(f)),
            Dia(a) => TermRL::dia(a.map_vars(f)),
        }
    }

    /// `t[x := s]`
    pub fn substitute(&self, x: &str, s: &TermRL) -> TermRL {
        self.map_vars(&mut |v| if v == x { s.clone() } else { TermRL::var(v) })
    }
}

impl TermCD {
    pub fn var(name: impl Into<String>) -> TermCD {
        TermCD::Var(name.into())
    }

    pub fn children(&self) -> Vec<&TermCD> {
        use TermCD::*;
        match self {
            Var(_) | Zero | Center | One => vec![],
            Cap(a, b) | Cup(a, b) | Tensor(a, b) | Wand(a, b) => vec![a, b],
            Inv(a) | CBox(a) => vec![a],
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        if let TermCD::Var(v) = self {
            out.insert(v.clone());
        }
        for c in self.children() {
            c.collect_vars(out);
        }
    }

    /// Operator nesting depth; atoms have depth 0.
    pub fn depth(&self) -> usize {
        self.children()
            .iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn uses_box(&self) -> bool {
        matches!(self, TermCD::CBox(_)) || self.children().iter().any(|c| c.uses_box())
    }

    pub fn map_vars(&self, f: &mut impl FnMut(&str) -> TermCD) -> TermCD {
        use TermCD::*;
        match self {
            Var(v) => f(v),
            Zero => Zero,
            Center => Center,
            One => One,
            Cap(a, b) => TermCD::cap(a.map_vars(f), b.map_vars(f)),
            Cup(a, b) => TermCD::cup(a.map_vars(f), b.map_vars(f)),
            Tensor(a, b) => TermCD::tensor(a.map_vars(f), b.map_vars(f)),
            Wand(a, b) => TermCD::wand(a.map_vars(f), b.map_vars(f)),
            Inv(a) => TermCD::inv(a.map_vars(f)),
            CBox(a) => TermCD::cbox(a.map_vars(f)),
        }
    }

    pub fn substitute(&self, x: &str, s: &TermCD) -> TermCD {
        self.map_vars(&mut |v| if v == x { s.clone() } else { TermCD::var(v) })
    }
}

impl Equation<TermRL> {
    pub fn variables(&self) -> BTreeSet<String> {
        let mut v = self.lhs.variables();
        v.extend(self.rhs.variables());
        v
    }
}

impl Equation<TermCD> {
    pub fn variables(&self) -> BTreeSet<String> {
        let mut v = self.lhs.variables();
        v.extend(self.rhs.variables());
        v
    }
}
