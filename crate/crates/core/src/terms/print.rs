use std::fmt;

use super::{Equation, TermCD, TermRL};

const ATOM: u8 = u8::MAX;

enum Shape<'a, T> {
    Atom(String),
    Prefix(&'static str, &'a T),
    Call(&'static str, &'a T),
    Binary(&'static str, u8, bool, &'a T, &'a T),
}

trait Printable: Sized {
    fn shape(&self) -> Shape<'_, Self>;

    fn prec(&self) -> u8 {
        match self.shape() {
            Shape::Binary(_, p, _, _, _) => p,
            _ => ATOM,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape() {
            Shape::Atom(s) => f.write_str(&s),
            Shape::Call(name, a) => {
                write!(f, "{name}(")?;
                a.write(f)?;
                f.write_str(")")
            }
            Shape::Prefix(op, a) => {
                f.write_str(op)?;
                wrap(a, a.prec() != ATOM, f)
            }
            Shape::Binary(op, p, right, a, b) => {
                let (pa, pb) = (a.prec(), b.prec());
                let (left_parens, right_parens) = if right {
                    (pa <= p, pb < p)
                } else {
                    (pa < p, pb <= p)
                };
                wrap(a, left_parens, f)?;
                write!(f, " {op} ")?;
                wrap(b, right_parens, f)
            }
        }
    }
}

fn wrap<T: Printable>(t: &T, parens: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parens {
        f.write_str("(")?;
        t.write(f)?;
        f.write_str(")")
    } else {
        t.write(f)
    }
}

impl Printable for TermRL {
    fn shape(&self) -> Shape<'_, Self> {
        use TermRL::*;
        match self {
            Var(v) => Shape::Atom(v.clone()),
            Zero => Shape::Atom("0".into()),
            One => Shape::Atom("1".into()),
            Imp(a, b) => Shape::Binary("->", 1, true, a, b),
            Join(a, b) => Shape::Binary("\\/", 2, false, a, b),
            Meet(a, b) => Shape::Binary("/\\", 3, false, a, b),
            Times(a, b) => Shape::Binary("*", 4, false, a, b),
            Neg(a) => Shape::Prefix("-", a),
            Boxed(a) => Shape::Call("box", a),
            Dia(a) => Shape::Call("dia", a),
        }
    }
}

impl Printable for TermCD {
    fn shape(&self) -> Shape<'_, Self> {
        use TermCD::*;
        match self {
            Var(v) => Shape::Atom(v.clone()),
            Zero => Shape::Atom("0".into()),
            Center => Shape::Atom("c".into()),
            One => Shape::Atom("1".into()),
            Wand(a, b) => Shape::Binary("~>", 1, true, a, b),
            Cup(a, b) => Shape::Binary("cup", 2, false, a, b),
            Cap(a, b) => Shape::Binary("cap", 3, false, a, b),
            Tensor(a, b) => Shape::Binary("(x)", 4, false, a, b),
            Inv(a) => Shape::Prefix("~", a),
            CBox(a) => Shape::Call("Box", a),
        }
    }
}

impl fmt::Display for TermRL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

impl fmt::Display for TermCD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

impl<T: fmt::Display> fmt::Display for Equation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {}", self.lhs, self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use crate::terms::{parse_cd, parse_rl};

    #[test]
    fn minimal_parentheses() {
        for (src, printed) in [
            ("(a -> b) -> d", "(a -> b) -> d"),
            ("a -> (b -> d)", "a -> b -> d"),
            ("(a \\/ b) \\/ d", "a \\/ b \\/ d"),
            ("a \\/ (b \\/ d)", "a \\/ (b \\/ d)"),
            ("-(a * b)", "-(a * b)"),
            ("--a", "--a"),
            ("- box(a)", "-box(a)"),
            ("box((a))", "box(a)"),
        ] {
            assert_eq!(parse_rl(src).unwrap().to_string(), printed);
        }
        for (src, printed) in [
            ("x1 cap c", "x1 cap c"),
            ("~(x1 (x) x2)", "~(x1 (x) x2)"),
            ("(x1 cup x2) (x) x3", "(x1 cup x2) (x) x3"),
            ("Box(~x) ~> (x ~> c)", "Box(~x) ~> x ~> c"),
        ] {
            assert_eq!(parse_cd(src).unwrap().to_string(), printed);
        }
    }

    #[test]
    fn round_trip_examples() {
        let t = parse_cd("x1 cap c").unwrap();
        assert_eq!(parse_cd(&t.to_string()).unwrap(), t);
        let t = parse_cd("~~(x (x) x) (x) x").unwrap();
        assert_eq!(parse_cd(&t.to_string()).unwrap(), t);
    }
}
