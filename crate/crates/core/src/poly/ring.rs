use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};

use super::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::{Error, Result};

/// Ordered list of variable names; fixes the meaning of exponent slots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Arc<[String]>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Input(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Input(format!("variable `{v}` declared twice")));
            }
        }
        Ok(Ring { vars: vars.into() })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::Input(format!("unknown variable `{name}`")))?;
        Ok(Polynomial::var(self.nvars(), i))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars())
    }

    /// This ring with `extra` appended after the existing variables.
    pub fn extended<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Ring> {
        Ring::new(self.vars.iter().cloned().chain(extra.into_iter().map(Into::into)))
    }

    /// A name not yet used in this ring: `base` itself, else `base1`, `base2`, ...
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}{k}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }

    /// The subring on all variables except `drop`; returns it with the kept indices.
    pub fn without(&self, drop: &[usize]) -> (Ring, Vec<usize>) {
        let keep: Vec<usize> = (0..self.nvars()).filter(|i| !drop.contains(i)).collect();
        let ring = Ring {
            vars: keep.iter().map(|&i| self.vars[i].clone()).collect(),
        };
        (ring, keep)
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(self, src)
    }

    /// Parses `p / q` (or a bare polynomial, meaning `p / 1`).
    pub fn parse_fraction(&self, src: &str) -> Result<(Polynomial, Polynomial)> {
        super::parse::parse_fraction(self, src)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        assert_eq!(p.nvars(), self.nvars(), "polynomial belongs to another ring");
        format_polynomial(p, &self.vars)
    }

    /// Formats with terms listed in descending `ord` order.
    pub fn format_in(&self, p: &Polynomial, ord: &MonomialOrder) -> String {
        assert_eq!(p.nvars(), self.nvars(), "polynomial belongs to another ring");
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        format_terms(&terms, &self.vars)
    }

    pub fn display<'a>(&'a self, p: &'a Polynomial) -> DisplayPoly<'a> {
        DisplayPoly { ring: self, poly: p }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.vars.join(", "))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vars.join(", "))
    }
}

pub struct DisplayPoly<'a> {
    ring: &'a Ring,
    poly: &'a Polynomial,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(self.poly))
    }
}

fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

pub(crate) fn format_polynomial(p: &Polynomial, names: &[String]) -> String {
    format_terms(p.terms(), names)
}

fn format_terms(terms: &[(Monomial, Rational)], names: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&format_rational(&a));
        } else {
            if !a.is_one() {
                out.push_str(&format_rational(&a));
                out.push('*');
            }
            out.push_str(&format_monomial(m, names));
        }
    }
    out
}
