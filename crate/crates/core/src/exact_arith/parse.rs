//! Reader for polynomial and rational-function text.
//!
//! Accepts both plain ASCII (`27*j^2 + 42*j + 17`, `(3*j+1)*(3*j+2)`) and the
//! typeset style used for printed recurrences: juxtaposition for products,
//! `\big(`/`\big)` delimiters, `\frac{..}{..}` prefactors, line breaks, and a
//! leading `name(args) =` label. Trailing `.`/`,` are ignored.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::multipoly::MultiPoly;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::Var;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Frac,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' | b'$' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(s[start..i].parse().unwrap())));
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'/' => out.push((start, Tok::Slash)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'{' => out.push((start, Tok::LBrace)),
            b'}' => out.push((start, Tok::RBrace)),
            b'\\' => {
                let rest = &s[i + 1..];
                if let Some(r) = rest.strip_prefix("big") {
                    i += 4;
                    match r.as_bytes().first() {
                        Some(b'(') => out.push((start, Tok::LParen)),
                        Some(b')') => out.push((start, Tok::RParen)),
                        _ => return Err(perr(start, "expected `\\big(` or `\\big)`")),
                    }
                    i += 1;
                    continue;
                }
                if rest.starts_with("frac") {
                    i += 5;
                    out.push((start, Tok::Frac));
                    continue;
                }
                return Err(perr(start, "unknown command"));
            }
            c if c.is_ascii_lowercase() => match Var::from_name(&s[i..i + 1]) {
                Some(v) => out.push((start, Tok::Var(v))),
                None => return Err(perr(start, "unknown variable")),
            },
            _ => return Err(perr(start, "unexpected character")),
        }
        i += 1;
    }
    Ok(out)
}

fn perr(pos: usize, msg: &str) -> Error {
    Error::Parse {
        pos,
        msg: String::from(msg),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(perr(self.pos(), &format!("expected {t:?}")))
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = if self.eat(&Tok::Minus) {
            self.term()?.neg()
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Var(_) | Tok::LParen | Tok::Frac)
        )
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.factor()?);
            } else if self.eat(&Tok::Slash) {
                let p = self.pos();
                acc = acc.div(&self.factor()?).map_err(|_| perr(p, "division by zero"))?;
            } else if self.starts_primary() {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.primary()?;
        if self.eat(&Tok::Caret) {
            let p = self.pos();
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.clone(),
                _ => return Err(perr(p, "expected integer exponent")),
            };
            self.at += 1;
            let e: u32 = e.try_into().map_err(|_| perr(p, "exponent too large"))?;
            let mut acc = RatFunc::one();
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RatFunc> {
        let p = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(RatFunc::constant(Rational::from_integer(n)))
            }
            Some(Tok::Var(v)) => {
                self.at += 1;
                Ok(RatFunc::from_poly(MultiPoly::var(v)))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Frac) => {
                self.at += 1;
                self.expect(&Tok::LBrace)?;
                let n = self.expr()?;
                self.expect(&Tok::RBrace)?;
                self.expect(&Tok::LBrace)?;
                let d = self.expr()?;
                self.expect(&Tok::RBrace)?;
                n.div(&d).map_err(|_| perr(p, "zero denominator"))
            }
            _ => Err(perr(p, "expected a number, variable, or group")),
        }
    }
}

/// Parses a rational function.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let (offset, body) = match text.find('=') {
        Some(i) => (i + 1, &text[i + 1..]),
        None => (0, text),
    };
    let trimmed = body.trim_end_matches(|c: char| c.is_whitespace() || matches!(c, '.' | ',' | '$'));
    let toks = lex(trimmed)
        .map_err(|e| shift_err(e, offset))?;
    let mut p = Parser {
        toks,
        at: 0,
        end: trimmed.len(),
    };
    let r = p.expr().map_err(|e| shift_err(e, offset))?;
    if p.at != p.toks.len() {
        return Err(shift_err(perr(p.pos(), "trailing input"), offset));
    }
    Ok(r)
}

/// Parses a polynomial; fails if a non-constant denominator remains.
pub fn parse_poly(text: &str) -> Result<MultiPoly> {
    let r = parse_ratfunc(text)?;
    match r.den().as_constant() {
        Some(c) if !c.is_zero() => Ok(r.num().scale(&(Rational::one() / c))),
        _ => Err(perr(0, "not a polynomial")),
    }
}

fn shift_err(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, Binding, Mono};

    #[test]
    fn plain_ascii() {
        let p = parse_poly("27*j^2 + 42*j + 17").unwrap();
        assert_eq!(p.coeff(&Mono::from_pairs(&[(Var::J, 2)])), int(27));
        let q = parse_poly("(3*j+1)*(3*j+2)").unwrap();
        assert_eq!(q.eval(&Binding::new().with(Var::J, int(1))).unwrap(), int(20));
    }

    #[test]
    fn typeset_juxtaposition() {
        let p = parse_poly("p_{2}(n) = a^2 n^2 - 4 a n^3 +\n 4 n^4.").unwrap();
        assert_eq!(p.coeff(&Mono::from_pairs(&[(Var::N, 4)])), int(4));
        assert_eq!(p.coeff(&Mono::from_pairs(&[(Var::A, 1), (Var::N, 3)])), int(-4));
    }

    #[test]
    fn frac_prefactor_and_big_delims() {
        let r = parse_ratfunc(r"R = \frac{1}{(a+k+n) (b+k+n)} (a + n) \big(2 k\big)").unwrap();
        let b = Binding::new()
            .with(Var::A, int(1))
            .with(Var::B, int(0))
            .with(Var::N, int(1))
            .with(Var::K, int(1));
        // (1+1)·2 / ((3)(2)) = 2/3
        assert_eq!(r.eval(&b).unwrap(), Rational::new(2.into(), 3.into()));
    }

    #[test]
    fn errors_report_position() {
        match parse_poly("1 + # 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("1/(n)").is_err());
    }
}
