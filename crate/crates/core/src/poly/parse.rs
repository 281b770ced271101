//! Text parser for polynomials.
//!
//! Grammar: sums and differences of products, `^` with a non-negative integer
//! exponent, parentheses, integer literals and identifiers. Division is
//! allowed by nonzero constants only, so `b^2/2` and `3/2*x` both work.

use num_traits::Zero;

use super::mpoly::{unify_contexts, MPoly};
use super::rational::Rational;
use super::PolyError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Tok>, PolyError> {
    let err = |reason: String| PolyError::Parse {
        input: input.to_string(),
        reason,
    };
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(
                    s.parse().map_err(|_| err(format!("bad integer `{s}`")))?,
                ));
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(err(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn err(&self, reason: impl Into<String>) -> PolyError {
        PolyError::Parse {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let c = d
                        .constant_value()
                        .ok_or_else(|| self.err("division by a non-constant"))?;
                    if c.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly, PolyError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPoly, PolyError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let neg = matches!(self.peek(), Some(Tok::Minus));
            if neg {
                self.pos += 1;
            }
            match self.next() {
                Some(Tok::Num(n)) => {
                    if neg {
                        let e: i64 = i64::try_from(&n).map(|v| -v).unwrap_or(i64::MIN);
                        return Err(PolyError::NegativeExponent(e));
                    }
                    let e = u32::try_from(&n).map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected an integer exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MPoly, PolyError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(MPoly::constant(Rational::from_integer(n))),
            Some(Tok::Ident(name)) => Ok(MPoly::var(&name)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(self.err("missing `)`")),
                }
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn first_appearance(toks: &[Tok]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for t in toks {
        if let Tok::Ident(n) = t {
            if !out.contains(n) {
                out.push(n.clone());
            }
        }
    }
    out
}

impl MPoly {
    /// Parses a polynomial; the context lists variables in order of first
    /// appearance.
    pub fn parse(input: &str) -> Result<MPoly, PolyError> {
        Self::parse_in(input, &[] as &[&str])
    }

    /// Parses with a prescribed leading context. Variables not listed in
    /// `vars` are appended in order of first appearance.
    pub fn parse_in<S: AsRef<str>>(input: &str, vars: &[S]) -> Result<MPoly, PolyError> {
        let toks = lex(input)?;
        if toks.is_empty() {
            return Err(PolyError::Parse {
                input: input.into(),
                reason: "empty input".into(),
            });
        }
        let given: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        super::mpoly::check_context(&given)?;
        let ctx = unify_contexts(&given, &first_appearance(&toks));
        let mut p = Parser {
            toks,
            pos: 0,
            input,
        };
        let e = p.expr()?;
        if p.pos < p.toks.len() {
            return Err(p.err(format!("trailing input at token {}", p.pos)));
        }
        Ok(e.in_context(&ctx).expect("context covers every identifier"))
    }
}

impl std::str::FromStr for MPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MPoly::parse(s)
    }
}
