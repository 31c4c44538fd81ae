use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational};
use crate::{Error, Result};

/// Canonical order in which terms are stored: descending grevlex.
fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::grevlex().cmp(b, a)
}

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending grevlex order with no zero
/// coefficients and no repeated monomials, so structural equality is
/// algebraic equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(c.into()))
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::term(nvars, Monomial::var(nvars, var, 1), Rational::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), nvars);
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![(m, c)],
        }
    }

    /// Builds a canonical polynomial from raw terms given as sparse
    /// `(variable index, exponent)` lists.
    pub fn from_terms(nvars: usize, raw: Vec<(Rational, Vec<(usize, u32)>)>) -> Result<Self> {
        let mut out = Vec::with_capacity(raw.len());
        for (c, powers) in raw {
            let mut e = vec![0u32; nvars];
            for (v, k) in powers {
                if v >= nvars {
                    return Err(Error::Input(format!(
                        "variable index {v} is not declared (ring has {nvars} variables)"
                    )));
                }
                e[v] += k;
            }
            out.push((Monomial::from_exponents(e), c));
        }
        Ok(Self::from_unsorted(nvars, out))
    }

    /// Sorts, merges duplicate monomials and drops zero coefficients.
    pub fn from_unsorted(nvars: usize, mut terms: Vec<(Monomial, Rational)>) -> Self {
        terms.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Polynomial { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || self.is_unit()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    /// Coefficient of `var^k`, as a polynomial free of `var`.
    pub fn coefficient_of(&self, var: usize, k: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) == k)
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e[var] = 0;
                (Monomial::from_exponents(e), c.clone())
            })
            .collect();
        Polynomial::from_unsorted(self.nvars, terms)
    }

    /// True when only the listed variables occur.
    pub fn supported_in(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|(m, _)| m.supported_in(vars))
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) > 0)
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<&(Monomial, Rational)> {
        self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|t| &t.0)
    }

    pub fn leading_coefficient(&self, ord: &MonomialOrder) -> Option<&Rational> {
        self.leading_term(ord).map(|t| &t.1)
    }

    /// Divides by the leading coefficient for `ord`.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_coefficient(ord) {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        // multiplying by a monomial preserves grevlex order
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Re-embeds into a ring with `nvars` variables; variable `i` becomes `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.nvars, "variable map has wrong length");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(nvars, map), c.clone()))
            .collect();
        Polynomial::from_unsorted(nvars, terms)
    }

    /// Embeds into a ring whose first `self.nvars()` variables coincide with ours.
    pub fn extend(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        let map: Vec<usize> = (0..self.nvars).collect();
        self.remap(nvars, &map)
    }

    /// Drops to a ring with fewer variables; `keep[j]` is the old index of new variable `j`.
    /// Returns `None` if a dropped variable occurs.
    pub fn restrict(&self, keep: &[usize]) -> Option<Polynomial> {
        if !self.supported_in(keep) {
            return None;
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = keep.iter().map(|&i| m.exp(i)).collect();
                (Monomial::from_exponents(e), c.clone())
            })
            .collect();
        Some(Polynomial::from_unsorted(keep.len(), terms))
    }

    /// Substitutes polynomials (all in a common target ring) for every variable.
    pub fn substitute(&self, values: &[Polynomial]) -> Polynomial {
        assert_eq!(values.len(), self.nvars);
        let target = values.first().map(|v| v.nvars).unwrap_or(0);
        let mut cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache.entry((v, e)).or_insert_with(|| values[v].pow(e)).clone();
                t = &t * &p;
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Clears denominators and divides by the content, making the leading
    /// coefficient (for `ord`) a positive integer.
    pub fn primitive(&self, ord: &MonomialOrder) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&lcm / c.denom());
            gcd = gcd.gcd(&n);
        }
        let mut factor = Rational::new(lcm, gcd);
        if self.leading_coefficient(ord).unwrap().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

fn merge_add(a: &Polynomial, b: &Polynomial, negate_b: bool) -> Polynomial {
    assert_eq!(a.nvars, b.nvars, "polynomials live in different rings");
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        match canonical_cmp(&a.terms[i].0, &b.terms[j].0) {
            Ordering::Less => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let (m, c) = &b.terms[j];
                out.push((m.clone(), if negate_b { -c } else { c.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a.terms[i].1 - &b.terms[j].1
                } else {
                    &a.terms[i].1 + &b.terms[j].1
                };
                if !c.is_zero() {
                    out.push((a.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(
        b.terms[j..]
            .iter()
            .map(|(m, c)| (m.clone(), if negate_b { -c } else { c.clone() })),
    );
    Polynomial {
        nvars: a.nvars,
        terms: out,
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        merge_add(self, rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        merge_add(self, rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials live in different rings");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|x| *x += &c).or_insert(c);
            }
        }
        Polynomial::from_unsorted(self.nvars, acc.into_iter().collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", super::format_polynomial(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn normalize_cancels_to_zero() {
        // 2x + 3x - 5x
        let p = Polynomial::from_terms(
            1,
            vec![
                (q(2, 1), vec![(0, 1)]),
                (q(3, 1), vec![(0, 1)]),
                (q(-5, 1), vec![(0, 1)]),
            ],
        )
        .unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn normalize_adds_rationals() {
        // (1/2)x + (1/3)x; cross-multiplication gives (3 + 2)/6
        let p = Polynomial::from_terms(1, vec![(q(1, 2), vec![(0, 1)]), (q(1, 3), vec![(0, 1)])]).unwrap();
        assert_eq!(p, Polynomial::var(1, 0).scale(&q(5, 6)));
    }

    #[test]
    fn normalize_identity_case() {
        // y^2 + (-1) x^3 over (x, y)
        let p = Polynomial::from_terms(2, vec![(q(1, 1), vec![(1, 2)]), (q(-1, 1), vec![(0, 3)])]).unwrap();
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        assert_eq!(p, &y.pow(2) - &x.pow(3));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn normalize_rejects_undeclared_variable() {
        let err = Polynomial::from_terms(2, vec![(q(1, 1), vec![(2, 1)])]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn coefficient_extraction() {
        let x = Polynomial::var(2, 0);
        let t = Polynomial::var(2, 1);
        let p = &(&x * &t.pow(2)) + &(&t - &x);
        assert_eq!(p.coefficient_of(1, 2), x);
        assert_eq!(p.coefficient_of(1, 1), Polynomial::one(2));
        assert_eq!(p.coefficient_of(1, 0), -&x);
        assert_eq!(p.degree_in(1), 2);
    }

    #[test]
    fn substitute_and_remap() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = &y.pow(2) - &x.pow(3);
        // parametrize the cusp by s -> (s^2, s^3)
        let s = Polynomial::var(1, 0);
        assert!(p.substitute(&[s.pow(2), s.pow(3)]).is_zero());
        let moved = p.remap(3, &[2, 0]);
        assert_eq!(moved.degree_in(2), 3);
        assert_eq!(moved.restrict(&[2, 0]).unwrap(), p);
    }
}
