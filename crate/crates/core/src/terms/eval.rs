use std::collections::BTreeMap;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::kalman::CDiffView;
use crate::monadic::QuantifierPair;

use super::{TermCD, TermError, TermRL};

/// Variable name to element index.
pub type Assignment = BTreeMap<String, Elem>;

fn lookup(assignment: &Assignment, name: &str, size: usize) -> Result<Elem, TermError> {
    let value = *assignment
        .get(name)
        .ok_or_else(|| TermError::UnboundVariable(name.to_string()))?;
    if value >= size {
        return Err(TermError::ValueOutOfRange {
            name: name.to_string(),
            value,
        });
    }
    Ok(value)
}

/// Evaluate an RL term bottom-up; `box`/`dia` read the quantifier pair.
pub fn eval_rl(
    a: &FiniteAlgebra,
    q: &QuantifierPair,
    term: &TermRL,
    assignment: &Assignment,
) -> Result<Elem, TermError> {
    use TermRL::*;
    let ev = |t: &TermRL| eval_rl(a, q, t, assignment);
    Ok(match term {
        Var(v) => lookup(assignment, v, a.size())?,
        Zero => a.zero(),
        One => a.one(),
        Meet(x, y) => a.meet(ev(x)?, ev(y)?),
        Join(x, y) => a.join(ev(x)?, ev(y)?),
        Times(x, y) => a.times(ev(x)?, ev(y)?),
        Imp(x, y) => a.imp(ev(x)?, ev(y)?),
        Neg(x) => a.neg(ev(x)?),
        Boxed(x) => q.boxed(ev(x)?),
        Dia(x) => q.dia(ev(x)?),
    })
}

/// Evaluate a CD term; `Box` reads `view.center_box`.
pub fn eval_cd(
    view: &CDiffView,
    term: &TermCD,
    assignment: &Assignment,
) -> Result<Elem, TermError> {
    use TermCD::*;
    let ev = |t: &TermCD| eval_cd(view, t, assignment);
    Ok(match term {
        Var(v) => lookup(assignment, v, view.size())?,
        Zero => view.zero(),
        Center => view.center,
        One => view.one(),
        Cap(x, y) => view.cap(ev(x)?, ev(y)?),
        Cup(x, y) => view.cup(ev(x)?, ev(y)?),
        Tensor(x, y) => view.tensor(ev(x)?, ev(y)?),
        Wand(x, y) => view.wand(ev(x)?, ev(y)?),
        Inv(x) => view.inv(ev(x)?),
        CBox(x) => {
            let bx = view
                .center_box
                .as_ref()
                .ok_or(TermError::MissingCenterBox)?;
            bx[ev(x)?]
        }
    })
}
