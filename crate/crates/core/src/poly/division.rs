use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::{Error, Result};

/// Polynomial with terms sorted ascending for a fixed order, so the leading
/// term sits at the end of the vector.
#[derive(Clone, Debug)]
pub(crate) struct OrderedPoly {
    pub(crate) terms: Vec<(Monomial, Rational)>,
}

impl OrderedPoly {
    pub(crate) fn new(p: &Polynomial, ord: &MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        OrderedPoly { terms }
    }

    pub(crate) fn to_polynomial(&self, nvars: usize) -> Polynomial {
        Polynomial::from_unsorted(nvars, self.terms.clone())
    }

    #[inline]
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub(crate) fn lead(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("zero polynomial has no leading term").0
    }

    pub(crate) fn lc(&self) -> &Rational {
        &self.terms.last().expect("zero polynomial has no leading term").1
    }

    pub(crate) fn scale(&mut self, c: &Rational) {
        for t in &mut self.terms {
            t.1 *= c;
        }
    }

    pub(crate) fn make_monic(&mut self) -> Rational {
        let inv = self.lc().recip();
        if !inv.is_one() {
            self.scale(&inv);
        }
        inv
    }

    /// `self -= c * m * g`.
    pub(crate) fn sub_mul(&mut self, c: &Rational, m: &Monomial, g: &OrderedPoly, ord: &MonomialOrder) {
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let ord_ab = match (ai.peek(), bi.peek()) {
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => break,
            };
            match ord_ab {
                Ordering::Less => out.push(ai.next().unwrap()),
                Ordering::Greater => {
                    let (bm, bc) = bi.next().unwrap();
                    out.push((bm, -bc));
                }
                Ordering::Equal => {
                    let (am, ac) = ai.next().unwrap();
                    let (_, bc) = bi.next().unwrap();
                    let nc = ac - bc;
                    if !nc.is_zero() {
                        out.push((am, nc));
                    }
                }
            }
        }
        self.terms = out;
    }
}

fn check_ring(f: &Polynomial, divisors: &[Polynomial]) -> Result<()> {
    if divisors.iter().any(|g| g.nvars() != f.nvars()) {
        return Err(Error::Input("divisors live in a different ring".into()));
    }
    Ok(())
}

/// Multivariate division of `f` by the ordered list `divisors`.
///
/// Returns quotients `q_i` and remainder `r` with `f = sum q_i g_i + r`,
/// where no term of `r` is divisible by a leading monomial of the divisors.
pub fn divide_multi(
    f: &Polynomial,
    divisors: &[Polynomial],
    ord: &MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    check_ring(f, divisors)?;
    if divisors.iter().any(Polynomial::is_zero) {
        return Err(Error::Input("cannot divide by the zero polynomial".into()));
    }
    let gs: Vec<OrderedPoly> = divisors.iter().map(|g| OrderedPoly::new(g, ord)).collect();
    let refs: Vec<&OrderedPoly> = gs.iter().collect();
    let (quot, rem) = divide_ordered(OrderedPoly::new(f, ord), &refs, ord, true);
    let n = f.nvars();
    let quotients = quot
        .unwrap()
        .into_iter()
        .map(|terms| Polynomial::from_unsorted(n, terms))
        .collect();
    Ok((quotients, Polynomial::from_unsorted(n, rem)))
}

/// Remainder of `f` on division by `divisors` (no quotients recorded).
pub fn remainder(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
    check_ring(f, divisors)?;
    let gs: Vec<OrderedPoly> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| OrderedPoly::new(g, ord))
        .collect();
    let refs: Vec<&OrderedPoly> = gs.iter().collect();
    let (_, rem) = divide_ordered(OrderedPoly::new(f, ord), &refs, ord, false);
    Ok(Polynomial::from_unsorted(f.nvars(), rem))
}

/// Core division loop shared with the Groebner engine. Quotient terms are
/// returned unsorted.
#[allow(clippy::type_complexity)]
pub(crate) fn divide_ordered(
    mut p: OrderedPoly,
    divisors: &[&OrderedPoly],
    ord: &MonomialOrder,
    track: bool,
) -> (Option<Vec<Vec<(Monomial, Rational)>>>, Vec<(Monomial, Rational)>) {
    let mut quot: Option<Vec<Vec<(Monomial, Rational)>>> = track.then(|| vec![Vec::new(); divisors.len()]);
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.lead().cloned() {
        let hit = divisors.iter().enumerate().find(|(_, g)| g.lm().divides(&lm));
        match hit {
            Some((i, g)) => {
                let m = lm.div(g.lm()).unwrap();
                let c = &lc / g.lc();
                p.sub_mul(&c, &m, g, ord);
                if let Some(q) = quot.as_mut() {
                    q[i].push((m, c));
                }
            }
            None => {
                p.terms.pop();
                rem.push((lm, lc));
            }
        }
    }
    (quot, rem)
}

/// S-polynomial `(L/lt(f)) f - (L/lt(g)) g` with `L = lcm(lm f, lm g)`.
pub fn spoly(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Input("S-polynomial of the zero polynomial".into()));
    }
    check_ring(f, std::slice::from_ref(g))?;
    let (fm, fc) = f.leading_term(ord).unwrap();
    let (gm, gc) = g.leading_term(ord).unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &fc.recip());
    let b = g.mul_term(&l.div(gm).unwrap(), &gc.recip());
    Ok(&a - &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(vars.iter().copied()).unwrap()
    }

    #[test]
    fn self_division() {
        let r = ring(&["x", "y"]);
        let f = r.parse("y^2 - x^3").unwrap();
        let (q, rem) = divide_multi(&f, std::slice::from_ref(&f), &MonomialOrder::grevlex()).unwrap();
        assert_eq!(q, vec![r.one()]);
        assert!(rem.is_zero());
    }

    #[test]
    fn divide_by_variable_in_lex() {
        let r = ring(&["x", "y"]);
        let f = r.parse("x^2*y").unwrap();
        let (q, rem) = divide_multi(&f, &[r.parse("x").unwrap()], &MonomialOrder::lex()).unwrap();
        assert_eq!(q, vec![r.parse("x*y").unwrap()]);
        assert!(rem.is_zero());
    }

    #[test]
    fn cusp_single_step_in_grevlex() {
        // lm(y^2 - x^3) = x^3 in grevlex, which does not divide y^2, so the
        // whole of y^2 lands in the remainder when divided in that order.
        let r = ring(&["x", "y"]);
        let g = r.parse("y^2 - x^3").unwrap();
        let f = r.parse("y^2").unwrap();
        let (q, rem) = divide_multi(&f, std::slice::from_ref(&g), &MonomialOrder::grevlex()).unwrap();
        assert_eq!(&(&q[0] * &g) + &rem, f);
        assert!(q[0].is_zero());
        assert_eq!(rem, f);
        // with y ranked first (lex y > x) a single step leaves x^3
        let ord = MonomialOrder::lex().with_precedence(vec![1, 0]);
        let (q, rem) = divide_multi(&f, &[g], &ord).unwrap();
        assert_eq!(q, vec![r.one()]);
        assert_eq!(rem, r.parse("x^3").unwrap());
    }

    #[test]
    fn spoly_examples() {
        let r = ring(&["x", "y"]);
        let s = spoly(&r.parse("x").unwrap(), &r.parse("y").unwrap(), &MonomialOrder::lex()).unwrap();
        assert!(s.is_zero());
        let s = spoly(
            &r.parse("x^2 + y").unwrap(),
            &r.parse("x*y + 1").unwrap(),
            &MonomialOrder::grevlex(),
        )
        .unwrap();
        assert_eq!(s, r.parse("y^2 - x").unwrap());
    }

    #[test]
    fn spoly_cancels_leading_terms() {
        let r = ring(&["t", "x", "y"]);
        let ord = MonomialOrder::lex();
        let f = r.parse("y^2 - x^3").unwrap();
        let g = r.parse("x*t - y").unwrap();
        let s = spoly(&f, &g, &ord).unwrap();
        let l = f.leading_monomial(&ord).unwrap().lcm(g.leading_monomial(&ord).unwrap());
        assert!(s.terms().iter().all(|(m, _)| *m != l));
        assert!(ord.cmp(s.leading_monomial(&ord).unwrap(), &l).is_lt());
    }

    #[test]
    fn zero_divisor_rejected() {
        let r = ring(&["x"]);
        assert!(divide_multi(&r.one(), &[r.zero()], &MonomialOrder::lex()).is_err());
    }
}
