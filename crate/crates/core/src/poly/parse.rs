//! Text grammar for polynomials.
//!
//! ```text
//! expr    := ('+' | '-')? term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ('^' integer)?
//! primary := integer | integer '/' integer | identifier | '(' expr ')'
//! ```
//!
//! A rational literal is written without spaces (`3/4`); a `/` anywhere else
//! separates the numerator and denominator of a fraction. Juxtaposition is
//! never multiplication.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn err(col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column: col + 1,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Lexer> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => toks.push((Tok::Plus, start)),
            b'-' => toks.push((Tok::Minus, start)),
            b'*' => toks.push((Tok::Star, start)),
            b'^' => toks.push((Tok::Caret, start)),
            b'/' => toks.push((Tok::Slash, start)),
            b'(' => toks.push((Tok::LParen, start)),
            b')' => toks.push((Tok::RParen, start)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = src[start..i].parse().unwrap();
                let mut value = Rational::from_integer(num);
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    let ds = i + 1;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let den: BigInt = src[ds..i].parse().unwrap();
                    if den.is_zero() {
                        return Err(err(ds, "zero denominator in rational literal"));
                    }
                    value /= Rational::from_integer(den);
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(err(i, "implicit multiplication is not allowed; use `*`"));
                }
                toks.push((Tok::Num(value), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return Err(err(i, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(Lexer { toks })
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
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
                _ => break,
            }
        }
        debug_assert_eq!(acc.nvars(), n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let col = self.col();
            match self.peek().cloned() {
                Some(Tok::Num(r)) if r.is_integer() => {
                    self.pos += 1;
                    let e: u32 = r.numer().try_into().map_err(|_| err(col, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(err(col, "expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let col = self.col();
        let n = self.ring.nvars();
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(Polynomial::constant(n, r))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.index_of(&name) {
                    Some(i) => Ok(Polynomial::var(n, i)),
                    None => Err(err(col, format!("undeclared variable `{name}`"))),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(err(self.col(), "expected `)`")),
                }
            }
            Some(t) => Err(err(col, format!("unexpected token {}", describe(&t)))),
            None => Err(err(col, "unexpected end of input")),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Num(_) => "number",
        Tok::Ident(_) => "identifier",
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Caret => "`^`",
        Tok::Slash => "`/`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
    }
}

fn parser<'a>(ring: &'a Ring, src: &str) -> Result<Parser<'a>> {
    let lexer = lex(src)?;
    Ok(Parser {
        ring,
        toks: lexer.toks,
        pos: 0,
        end: src.len(),
    })
}

pub(crate) fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial> {
    let mut p = parser(ring, src)?;
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        let t = &p.toks[p.pos].0;
        return Err(err(p.col(), format!("unexpected token {}", describe(t))));
    }
    Ok(out)
}

pub(crate) fn parse_fraction(ring: &Ring, src: &str) -> Result<(Polynomial, Polynomial)> {
    let mut p = parser(ring, src)?;
    let num = p.expr()?;
    let den = match p.peek() {
        None => ring.one(),
        Some(Tok::Slash) => {
            p.pos += 1;
            let d = p.expr()?;
            if d.is_zero() {
                return Err(err(p.col(), "denominator is zero"));
            }
            d
        }
        Some(t) => {
            let t = t.clone();
            return Err(err(p.col(), format!("unexpected token {}", describe(&t))));
        }
    };
    if p.pos != p.toks.len() {
        let t = &p.toks[p.pos].0;
        return Err(err(p.col(), format!("unexpected token {}", describe(t))));
    }
    Ok((num, den))
}
