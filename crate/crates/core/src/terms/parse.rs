use super::{Equation, TermCD, TermError, TermRL};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    // residuated-lattice symbols
    Arrow,
    Vee,
    Wedge,
    Star,
    Minus,
    KwBox,
    KwDia,
    // c-differential symbols
    Squiggle,
    Tilde,
    Tensor,
    KwCup,
    KwCap,
    KwC,
    KwBigBox,
    // shared
    Square,
    Not,
    LParen,
    RParen,
    EqEq,
    Eof,
}

impl Tok {
    fn ends_operand(&self) -> bool {
        matches!(
            self,
            Tok::Ident(_) | Tok::Zero | Tok::One | Tok::KwC | Tok::RParen
        )
    }

    fn spelling(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::Zero => "0".into(),
            Tok::One => "1".into(),
            Tok::Arrow => "->".into(),
            Tok::Vee => "\\/".into(),
            Tok::Wedge => "/\\".into(),
            Tok::Star => "*".into(),
            Tok::Minus => "-".into(),
            Tok::KwBox => "box".into(),
            Tok::KwDia => "dia".into(),
            Tok::Squiggle => "~>".into(),
            Tok::Tilde => "~".into(),
            Tok::Tensor => "(x)".into(),
            Tok::KwCup => "cup".into(),
            Tok::KwCap => "cap".into(),
            Tok::KwC => "c".into(),
            Tok::KwBigBox => "Box".into(),
            Tok::Square => "□".into(),
            Tok::Not => "¬".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::EqEq => "==".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, TermError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out: Vec<Spanned> = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let (l, c) = (line, column);
        let mut advance = |k: usize, i: &mut usize| {
            for _ in 0..k {
                if chars[*i] == '\n' {
                    line += 1;
                    column = 1;
                } else {
                    column += 1;
                }
                *i += 1;
            }
        };
        if ch.is_whitespace() {
            advance(1, &mut i);
            continue;
        }
        let rest = |s: &str| {
            chars[i..]
                .iter()
                .take(s.chars().count())
                .copied()
                .eq(s.chars())
        };
        let prev_operand = out.last().is_some_and(|t| t.tok.ends_operand());
        let (tok, len) = if rest("->") {
            (Tok::Arrow, 2)
        } else if rest("\\/") {
            (Tok::Vee, 2)
        } else if rest("/\\") {
            (Tok::Wedge, 2)
        } else if rest("~>") {
            (Tok::Squiggle, 2)
        } else if rest("==") {
            (Tok::EqEq, 2)
        } else if prev_operand && rest("(x)") {
            (Tok::Tensor, 3)
        } else if ch.is_ascii_alphabetic() {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            let word: String = chars[i..j].iter().collect();
            let tok = match word.as_str() {
                "box" => Tok::KwBox,
                "dia" | "diamond" => Tok::KwDia,
                "Box" => Tok::KwBigBox,
                "cup" => Tok::KwCup,
                "cap" => Tok::KwCap,
                "c" => Tok::KwC,
                w if w.starts_with(|c: char| c.is_ascii_lowercase()) => Tok::Ident(word.clone()),
                _ => {
                    return Err(TermError::Syntax {
                        line: l,
                        column: c,
                        message: format!("unknown word `{word}`"),
                    })
                }
            };
            (tok, j - i)
        } else if ch.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_alphanumeric() {
                j += 1;
            }
            let word: String = chars[i..j].iter().collect();
            let tok = match word.as_str() {
                "0" => Tok::Zero,
                "1" => Tok::One,
                _ => {
                    return Err(TermError::Syntax {
                        line: l,
                        column: c,
                        message: format!("only the constants 0 and 1 are numerals, found `{word}`"),
                    })
                }
            };
            (tok, j - i)
        } else {
            let tok = match ch {
                '→' => Tok::Arrow,
                '∨' => Tok::Vee,
                '∧' => Tok::Wedge,
                '*' | '⊙' => Tok::Star,
                '-' | '−' => Tok::Minus,
                '◇' => Tok::KwDia,
                '⇝' => Tok::Squiggle,
                '~' | '∼' => Tok::Tilde,
                '⊗' => Tok::Tensor,
                '∪' => Tok::KwCup,
                '∩' => Tok::KwCap,
                '□' => Tok::Square,
                '¬' => Tok::Not,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '≈' => Tok::EqEq,
                _ => {
                    return Err(TermError::Syntax {
                        line: l,
                        column: c,
                        message: format!("unexpected character `{ch}`"),
                    })
                }
            };
            (tok, 1)
        };
        advance(len, &mut i);
        out.push(Spanned {
            tok,
            line: l,
            column: c,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

/// One of the two signatures, seen by the shared precedence parser.
trait Grammar {
    type Term;
    const OTHER: &'static str;

    /// Precedence and right-associativity of a binary operator.
    fn binary(tok: &Tok) -> Option<(u8, bool)>;
    fn build_binary(tok: &Tok, a: Self::Term, b: Self::Term) -> Self::Term;
    fn is_unary(tok: &Tok) -> bool;
    fn build_unary(tok: &Tok, a: Self::Term) -> Self::Term;
    fn atom(tok: &Tok) -> Option<Self::Term>;
    fn foreign(tok: &Tok) -> bool;
}

struct Rl;
struct Cd;

impl Grammar for Rl {
    type Term = TermRL;
    const OTHER: &'static str = "c-differential";

    fn binary(tok: &Tok) -> Option<(u8, bool)> {
        match tok {
            Tok::Arrow => Some((1, true)),
            Tok::Vee => Some((2, false)),
            Tok::Wedge => Some((3, false)),
            Tok::Star => Some((4, false)),
            _ => None,
        }
    }

    fn build_binary(tok: &Tok, a: TermRL, b: TermRL) -> TermRL {
        match tok {
            Tok::Arrow => TermRL::imp(a, b),
            Tok::Vee => TermRL::join(a, b),
            Tok::Wedge => TermRL::meet(a, b),
            _ => TermRL::times(a, b),
        }
    }

    fn is_unary(tok: &Tok) -> bool {
        matches!(
            tok,
            Tok::Minus | Tok::Not | Tok::KwBox | Tok::Square | Tok::KwDia
        )
    }

    fn build_unary(tok: &Tok, a: TermRL) -> TermRL {
        match tok {
            Tok::KwBox | Tok::Square => TermRL::boxed(a),
            Tok::KwDia => TermRL::dia(a),
            _ => TermRL::neg(a),
        }
    }

    fn atom(tok: &Tok) -> Option<TermRL> {
        match tok {
            Tok::Zero => Some(TermRL::Zero),
            Tok::One => Some(TermRL::One),
            Tok::Ident(v) => Some(TermRL::var(v.clone())),
            _ => None,
        }
    }

    fn foreign(tok: &Tok) -> bool {
        matches!(
            tok,
            Tok::Squiggle
                | Tok::Tilde
                | Tok::Tensor
                | Tok::KwCup
                | Tok::KwCap
                | Tok::KwC
                | Tok::KwBigBox
        )
    }
}

impl Grammar for Cd {
    type Term = TermCD;
    const OTHER: &'static str = "residuated-lattice";

    fn binary(tok: &Tok) -> Option<(u8, bool)> {
        match tok {
            Tok::Squiggle => Some((1, true)),
            Tok::KwCup => Some((2, false)),
            Tok::KwCap => Some((3, false)),
            Tok::Tensor => Some((4, false)),
            _ => None,
        }
    }

    fn build_binary(tok: &Tok, a: TermCD, b: TermCD) -> TermCD {
        match tok {
            Tok::Squiggle => TermCD::wand(a, b),
            Tok::KwCup => TermCD::cup(a, b),
            Tok::KwCap => TermCD::cap(a, b),
            _ => TermCD::tensor(a, b),
        }
    }

    fn is_unary(tok: &Tok) -> bool {
        matches!(tok, Tok::Tilde | Tok::Not | Tok::KwBigBox | Tok::Square)
    }

    fn build_unary(tok: &Tok, a: TermCD) -> TermCD {
        match tok {
            Tok::KwBigBox | Tok::Square => TermCD::cbox(a),
            _ => TermCD::inv(a),
        }
    }

    fn atom(tok: &Tok) -> Option<TermCD> {
        match tok {
            Tok::Zero => Some(TermCD::Zero),
            Tok::One => Some(TermCD::One),
            Tok::KwC => Some(TermCD::Center),
            Tok::Ident(v) => Some(TermCD::var(v.clone())),
            _ => None,
        }
    }

    fn foreign(tok: &Tok) -> bool {
        matches!(
            tok,
            Tok::Arrow | Tok::Vee | Tok::Wedge | Tok::Star | Tok::Minus | Tok::KwBox | Tok::KwDia
        )
    }
}

struct Parser<G> {
    toks: Vec<Spanned>,
    pos: usize,
    _grammar: std::marker::PhantomData<G>,
}

impl<G: Grammar> Parser<G> {
    fn new(text: &str) -> Result<Self, TermError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            _grammar: std::marker::PhantomData,
        })
    }

    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, at: &Spanned, message: String) -> TermError {
        if G::foreign(&at.tok) {
            TermError::SignatureMismatch {
                line: at.line,
                column: at.column,
                symbol: at.tok.spelling(),
                other: G::OTHER,
            }
        } else {
            TermError::Syntax {
                line: at.line,
                column: at.column,
                message,
            }
        }
    }

    fn expr(&mut self, min_prec: u8) -> Result<G::Term, TermError> {
        let mut lhs = self.unary()?;
        loop {
            let next = self.peek().clone();
            let Some((prec, right)) = G::binary(&next.tok) else {
                if G::foreign(&next.tok) {
                    return Err(self.error(&next, String::new()));
                }
                break;
            };
            if prec < min_prec {
                break;
            }
            self.bump();
            let rhs = self.expr(if right { prec } else { prec + 1 })?;
            lhs = G::build_binary(&next.tok, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<G::Term, TermError> {
        let t = self.bump();
        if G::is_unary(&t.tok) {
            let a = self.unary()?;
            return Ok(G::build_unary(&t.tok, a));
        }
        if t.tok == Tok::LParen {
            let inner = self.expr(0)?;
            let close = self.bump();
            if close.tok != Tok::RParen {
                return Err(self.error(
                    &close,
                    format!("expected `)`, found `{}`", close.tok.spelling()),
                ));
            }
            return Ok(inner);
        }
        G::atom(&t.tok)
            .ok_or_else(|| self.error(&t, format!("expected a term, found `{}`", t.tok.spelling())))
    }

    fn finish(&mut self) -> Result<(), TermError> {
        let t = self.bump();
        if t.tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&t, format!("unexpected `{}`", t.tok.spelling())))
        }
    }

    fn term(text: &str) -> Result<G::Term, TermError> {
        let mut p = Self::new(text)?;
        let t = p.expr(0)?;
        p.finish()?;
        Ok(t)
    }

    fn equation(text: &str) -> Result<Equation<G::Term>, TermError> {
        let mut p = Self::new(text)?;
        let lhs = p.expr(0)?;
        let eq = p.bump();
        if eq.tok != Tok::EqEq {
            return Err(p.error(&eq, format!("expected `==`, found `{}`", eq.tok.spelling())));
        }
        let rhs = p.expr(0)?;
        p.finish()?;
        Ok(Equation::new(lhs, rhs))
    }
}

pub fn parse_rl(text: &str) -> Result<TermRL, TermError> {
    Parser::<Rl>::term(text)
}

pub fn parse_cd(text: &str) -> Result<TermCD, TermError> {
    Parser::<Cd>::term(text)
}

/// `lhs == rhs` in the residuated-lattice grammar.
pub fn parse_rl_equation(text: &str) -> Result<Equation<TermRL>, TermError> {
    Parser::<Rl>::equation(text)
}

/// `lhs == rhs` in the c-differential grammar.
pub fn parse_cd_equation(text: &str) -> Result<Equation<TermCD>, TermError> {
    Parser::<Cd>::equation(text)
}
