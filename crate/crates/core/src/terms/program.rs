//! Terms compiled against a fixed algebra into a hash-consed straight-line
//! program, for evaluating one term under many assignments.

use std::collections::HashMap;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::kalman::CDiffView;
use crate::monadic::QuantifierPair;

use super::{TermCD, TermError, TermRL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Instr {
    Var(usize),
    Const(Elem),
    Unary(usize, usize),
    Binary(usize, usize, usize),
}

/// A compiled term. Operation tables are copied in, so the program does not
/// borrow the algebra.
#[derive(Clone, Debug)]
pub struct Program {
    size: usize,
    vars: Vec<String>,
    instrs: Vec<Instr>,
    unary: Vec<Vec<Elem>>,
    binary: Vec<Vec<Elem>>,
    roots: Vec<usize>,
}

struct Builder {
    size: usize,
    vars: Vec<String>,
    instrs: Vec<Instr>,
    memo: HashMap<Instr, usize>,
    unary: Vec<Vec<Elem>>,
    binary: Vec<Vec<Elem>>,
}

impl Builder {
    fn new(size: usize, vars: &[String], unary: Vec<Vec<Elem>>, binary: Vec<Vec<Elem>>) -> Self {
        Builder {
            size,
            vars: vars.to_vec(),
            instrs: Vec::new(),
            memo: HashMap::new(),
            unary,
            binary,
        }
    }

    fn emit(&mut self, instr: Instr) -> usize {
        if let Some(&i) = self.memo.get(&instr) {
            return i;
        }
        self.instrs.push(instr);
        self.memo.insert(instr, self.instrs.len() - 1);
        self.instrs.len() - 1
    }

    fn var(&mut self, name: &str) -> Result<usize, TermError> {
        let i = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| TermError::UnboundVariable(name.to_string()))?;
        Ok(self.emit(Instr::Var(i)))
    }

    fn finish(self, roots: Vec<usize>) -> Program {
        Program {
            size: self.size,
            vars: self.vars,
            instrs: self.instrs,
            unary: self.unary,
            binary: self.binary,
            roots,
        }
    }
}

fn flat(n: usize, f: impl Fn(Elem, Elem) -> Elem) -> Vec<Elem> {
    (0..n * n).map(|i| f(i / n, i % n)).collect()
}

const MEET: usize = 0;
const JOIN: usize = 1;
const TIMES: usize = 2;
const IMP: usize = 3;
const NEG: usize = 0;
const BOX: usize = 1;
const DIA: usize = 2;

impl Program {
    /// Compile RL terms over `vars` (in that order) against `(a, q)`.
    pub fn compile_rl(
        a: &FiniteAlgebra,
        q: &QuantifierPair,
        vars: &[String],
        terms: &[&TermRL],
    ) -> Result<Program, TermError> {
        let n = a.size();
        let unary = vec![
            (0..n).map(|x| a.neg(x)).collect(),
            q.universal.clone(),
            q.existential.clone(),
        ];
        let binary = vec![
            flat(n, |x, y| a.meet(x, y)),
            flat(n, |x, y| a.join(x, y)),
            flat(n, |x, y| a.times(x, y)),
            flat(n, |x, y| a.imp(x, y)),
        ];
        let mut b = Builder::new(n, vars, unary, binary);
        fn go(b: &mut Builder, a: &FiniteAlgebra, t: &TermRL) -> Result<usize, TermError> {
            use TermRL::*;
            let bin = |b: &mut Builder, op, x: &TermRL, y: &TermRL| -> Result<usize, TermError> {
                let (i, j) = (go(b, a, x)?, go(b, a, y)?);
                Ok(b.emit(Instr::Binary(op, i, j)))
            };
            let un = |b: &mut Builder, op, x: &TermRL| -> Result<usize, TermError> {
                let i = go(b, a, x)?;
                Ok(b.emit(Instr::Unary(op, i)))
            };
            match t {
                Var(v) => b.var(v),
                Zero => Ok(b.emit(Instr::Const(a.zero()))),
                One => Ok(b.emit(Instr::Const(a.one()))),
                Meet(x, y) => bin(b, MEET, x, y),
                Join(x, y) => bin(b, JOIN, x, y),
                Times(x, y) => bin(b, TIMES, x, y),
                Imp(x, y) => bin(b, IMP, x, y),
                Neg(x) => un(b, NEG, x),
                Boxed(x) => un(b, BOX, x),
                Dia(x) => un(b, DIA, x),
            }
        }
        let roots = terms
            .iter()
            .map(|t| go(&mut b, a, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(b.finish(roots))
    }

    /// Compile CD terms over `vars` against a view.
    pub fn compile_cd(
        view: &CDiffView,
        vars: &[String],
        terms: &[&TermCD],
    ) -> Result<Program, TermError> {
        let n = view.size();
        if terms.iter().any(|t| t.uses_box()) && view.center_box.is_none() {
            return Err(TermError::MissingCenterBox);
        }
        let unary = vec![
            view.inv.clone(),
            view.center_box.clone().unwrap_or_default(),
        ];
        let binary = vec![
            flat(n, |x, y| view.cap(x, y)),
            flat(n, |x, y| view.cup(x, y)),
            flat(n, |x, y| view.tensor(x, y)),
            flat(n, |x, y| view.wand(x, y)),
        ];
        let mut b = Builder::new(n, vars, unary, binary);
        fn go(b: &mut Builder, v: &CDiffView, t: &TermCD) -> Result<usize, TermError> {
            use TermCD::*;
            let bin = |b: &mut Builder, op, x: &TermCD, y: &TermCD| -> Result<usize, TermError> {
                let (i, j) = (go(b, v, x)?, go(b, v, y)?);
                Ok(b.emit(Instr::Binary(op, i, j)))
            };
            let un = |b: &mut Builder, op, x: &TermCD| -> Result<usize, TermError> {
                let i = go(b, v, x)?;
                Ok(b.emit(Instr::Unary(op, i)))
            };
            match t {
                Var(name) => b.var(name),
                Zero => Ok(b.emit(Instr::Const(v.zero()))),
                Center => Ok(b.emit(Instr::Const(v.center))),
                One => Ok(b.emit(Instr::Const(v.one()))),
                Cap(x, y) => bin(b, MEET, x, y),
                Cup(x, y) => bin(b, JOIN, x, y),
                Tensor(x, y) => bin(b, TIMES, x, y),
                Wand(x, y) => bin(b, IMP, x, y),
                Inv(x) => un(b, NEG, x),
                CBox(x) => un(b, BOX, x),
            }
        }
        let roots = terms
            .iter()
            .map(|t| go(&mut b, view, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(b.finish(roots))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Number of distinct subterms after sharing.
    pub fn len(&self) -> usize {
        self.instrs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instrs.is_empty()
    }

    /// Evaluate every root. `values[i]` is the value of `vars()[i]`.
    pub fn run(&self, values: &[Elem], scratch: &mut Vec<Elem>, out: &mut Vec<Elem>) {
        let n = self.size;
        scratch.clear();
        for instr in &self.instrs {
            let v = match *instr {
                Instr::Var(i) => values[i],
                Instr::Const(c) => c,
                Instr::Unary(op, i) => self.unary[op][scratch[i]],
                Instr::Binary(op, i, j) => self.binary[op][scratch[i] * n + scratch[j]],
            };
            scratch.push(v);
        }
        out.clear();
        out.extend(self.roots.iter().map(|&r| scratch[r]));
    }

    /// Call `f` with the root values under every assignment of the
    /// variables, in lexicographic order, until it returns false.
    /// Returns the assignment at which `f` stopped.
    pub fn for_each_assignment(
        &self,
        mut f: impl FnMut(&[Elem], &[Elem]) -> bool,
    ) -> Option<Vec<Elem>> {
        let k = self.vars.len();
        let mut values = vec![0; k];
        let mut scratch = Vec::with_capacity(self.instrs.len());
        let mut out = Vec::with_capacity(self.roots.len());
        if self.size == 0 {
            return None;
        }
        loop {
            self.run(&values, &mut scratch, &mut out);
            if !f(&values, &out) {
                return Some(values);
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                values[i] += 1;
                if values[i] < self.size {
                    break;
                }
                values[i] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtins as b;
    use crate::kalman::build_k;
    use crate::terms::{eval_cd, eval_rl, parse_cd, parse_rl, Assignment};

    #[test]
    fn sharing() {
        let t = parse_rl("(x * y) \\/ (x * y)").unwrap();
        let vars = vec!["x".to_string(), "y".to_string()];
        let l = b::lukasiewicz(4);
        let p = Program::compile_rl(&l, &QuantifierPair::identity(4), &vars, &[&t]).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn agrees_with_tree_evaluation() {
        let l = b::lukasiewicz(3);
        let q = QuantifierPair::new(vec![0, 0, 2], vec![0, 2, 2]);
        let t = parse_rl("box(x -> -y) /\\ dia(x * y) -> x").unwrap();
        let vars = vec!["x".to_string(), "y".to_string()];
        let p = Program::compile_rl(&l, &q, &vars, &[&t]).unwrap();
        let stopped = p.for_each_assignment(|vals, out| {
            let asg: Assignment = vars.iter().cloned().zip(vals.iter().copied()).collect();
            out[0] == eval_rl(&l, &q, &t, &asg).unwrap()
        });
        assert_eq!(stopped, None);

        let k = build_k(&l).unwrap();
        let view = k.view();
        let t = parse_cd("~(x (x) y) cup (x ~> c)").unwrap();
        let p = Program::compile_cd(&view, &vars, &[&t]).unwrap();
        let mut count = 0;
        p.for_each_assignment(|vals, out| {
            count += 1;
            let asg: Assignment = vars.iter().cloned().zip(vals.iter().copied()).collect();
            out[0] == eval_cd(&view, &t, &asg).unwrap()
        });
        assert_eq!(count, 36);
    }

    #[test]
    fn compile_errors() {
        let k = build_k(&b::boolean2()).unwrap();
        let t = parse_cd("Box(x)").unwrap();
        assert_eq!(
            Program::compile_cd(&k.view(), &["x".into()], &[&t]).err(),
            Some(TermError::MissingCenterBox)
        );
        let t = parse_cd("y").unwrap();
        assert!(Program::compile_cd(&k.view(), &["x".into()], &[&t]).is_err());
    }
}
