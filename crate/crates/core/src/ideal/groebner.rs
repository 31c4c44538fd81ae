//! Buchberger's algorithm with the Gebauer-Moeller installation of the
//! product and chain criteria and the normal selection strategy.
//!
//! The same loop optionally carries, for every basis element, the row of
//! cofactors expressing it in terms of the input generators.

#[cfg(test)]
use std::cmp::Ordering;

use super::budget;
use crate::poly::{divide_ordered, Monomial, MonomialOrder, OrderedPoly, Polynomial, Rational};
use crate::{Error, Result};

/// Reduced Groebner basis together with cofactor rows:
/// `basis[k] = sum_i rows[k][i] * gens[i]`.
#[derive(Clone, Debug)]
pub struct TrackedBasis {
    pub basis: Vec<Polynomial>,
    pub rows: Vec<Vec<Polynomial>>,
}

impl TrackedBasis {
    /// Cofactors of `f` with respect to the original generators, if `f`
    /// lies in the ideal.
    pub fn cofactors(&self, f: &Polynomial, ord: &MonomialOrder) -> Option<Vec<Polynomial>> {
        let nvars = f.nvars();
        let ngens = self.rows.first().map(Vec::len).unwrap_or(0);
        if self.basis.is_empty() {
            return f.is_zero().then(|| vec![Polynomial::zero(nvars); ngens]);
        }
        let (quot, rem) = crate::poly::divide_multi(f, &self.basis, ord).ok()?;
        if !rem.is_zero() {
            return None;
        }
        let mut out = vec![Polynomial::zero(nvars); ngens];
        for (q, row) in quot.iter().zip(&self.rows) {
            if q.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o = &*o + &(q * r);
            }
        }
        Some(out)
    }
}

struct Elem {
    poly: OrderedPoly,
    row: Option<Vec<Polynomial>>,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'a> {
    ord: &'a MonomialOrder,
    nvars: usize,
    elems: Vec<Elem>,
    pairs: Vec<Pair>,
    processed: u64,
    limit: u64,
}

/// Reduced Groebner basis of `gens`, sorted by ascending leading monomial.
pub fn groebner(gens: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Polynomial>> {
    run(gens, ord, false).map(|t| t.basis)
}

/// As [`groebner`], also returning cofactor rows for every basis element.
pub fn groebner_tracked(gens: &[Polynomial], ord: &MonomialOrder) -> Result<TrackedBasis> {
    run(gens, ord, true)
}

fn run(gens: &[Polynomial], ord: &MonomialOrder, track: bool) -> Result<TrackedBasis> {
    let Some(first) = gens.first() else {
        return Ok(TrackedBasis {
            basis: Vec::new(),
            rows: Vec::new(),
        });
    };
    let nvars = first.nvars();
    if gens.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::Input("generators live in different rings".into()));
    }
    let mut engine = Engine {
        ord,
        nvars,
        elems: Vec::new(),
        pairs: Vec::new(),
        processed: 0,
        limit: budget::pair_budget(),
    };
    let ngens = gens.len();
    let result = engine.compute(gens, track, ngens);
    budget::record(engine.processed);
    result
}

impl Engine<'_> {
    fn compute(&mut self, gens: &[Polynomial], track: bool, ngens: usize) -> Result<TrackedBasis> {
        let nvars = self.nvars;
        let zero_row = || vec![Polynomial::zero(nvars); ngens];
        for (i, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let row = track.then(|| {
                let mut r = zero_row();
                r[i] = Polynomial::one(self.nvars);
                r
            });
            let (h, row) = self.reduce(OrderedPoly::new(g, self.ord), row);
            if let Some(done) = self.insert(h, row) {
                return Ok(done);
            }
        }
        while let Some(pair) = self.select() {
            self.processed += 1;
            if self.processed > self.limit {
                return Err(Error::ComputationBudgetExceeded {
                    pairs: self.processed,
                    limit: self.limit,
                });
            }
            let (s, srow) = self.spoly(pair.i, pair.j, &pair.lcm);
            let (h, row) = self.reduce(s, srow);
            if let Some(done) = self.insert(h, row) {
                return Ok(done);
            }
        }
        Ok(self.finish())
    }

    /// Makes `h` monic and adds it to the basis. Returns the final answer
    /// early when `h` is a nonzero constant.
    fn insert(&mut self, mut h: OrderedPoly, mut row: Option<Vec<Polynomial>>) -> Option<TrackedBasis> {
        if h.is_zero() {
            return None;
        }
        let inv = h.make_monic();
        if let Some(r) = row.as_mut() {
            for x in r.iter_mut() {
                *x = x.scale(&inv);
            }
        }
        if h.lm().is_one() {
            return Some(TrackedBasis {
                basis: vec![Polynomial::one(self.nvars)],
                rows: row.into_iter().collect(),
            });
        }
        self.update(h, row);
        None
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                ord.cmp(&pa.lcm, &pb.lcm).then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> (OrderedPoly, Option<Vec<Polynomial>>) {
        let (a, b) = (&self.elems[i], &self.elems[j]);
        let ma = lcm.div(a.poly.lm()).unwrap();
        let mb = lcm.div(b.poly.lm()).unwrap();
        // both operands are monic
        let one = Rational::from_integer(1.into());
        let minus_one = -one.clone();
        let mut s = OrderedPoly { terms: Vec::new() };
        s.sub_mul(&minus_one, &ma, &a.poly, self.ord);
        s.sub_mul(&one, &mb, &b.poly, self.ord);
        let row = match (&a.row, &b.row) {
            (Some(ra), Some(rb)) => Some(
                ra.iter()
                    .zip(rb)
                    .map(|(x, y)| &x.mul_term(&ma, &one) - &y.mul_term(&mb, &one))
                    .collect(),
            ),
            _ => None,
        };
        (s, row)
    }

    /// Full reduction by the active elements.
    fn reduce(&self, p: OrderedPoly, row: Option<Vec<Polynomial>>) -> (OrderedPoly, Option<Vec<Polynomial>>) {
        let active: Vec<usize> = (0..self.elems.len()).filter(|&k| self.elems[k].active).collect();
        self.reduce_by(p, row, &active)
    }

    fn reduce_by(
        &self,
        p: OrderedPoly,
        row: Option<Vec<Polynomial>>,
        by: &[usize],
    ) -> (OrderedPoly, Option<Vec<Polynomial>>) {
        let divisors: Vec<&OrderedPoly> = by.iter().map(|&k| &self.elems[k].poly).collect();
        let track = row.is_some();
        let (quot, mut rem) = divide_ordered(p, &divisors, self.ord, track);
        rem.reverse();
        let rem = OrderedPoly { terms: rem };
        let row = row.map(|mut r| {
            for (k, q) in by.iter().zip(quot.unwrap()) {
                if q.is_empty() {
                    continue;
                }
                let q = Polynomial::from_unsorted(self.nvars, q);
                let grow = self.elems[*k].row.as_ref().unwrap();
                for (x, g) in r.iter_mut().zip(grow) {
                    if !g.is_zero() {
                        *x = &*x - &(&q * g);
                    }
                }
            }
            r
        });
        (rem, row)
    }

    fn update(&mut self, h: OrderedPoly, row: Option<Vec<Polynomial>>) {
        let hk = self.elems.len();
        let hlm = h.lm().clone();
        let active: Vec<usize> = (0..hk).filter(|&k| self.elems[k].active).collect();

        let mut cands: Vec<(usize, Monomial, bool)> = active
            .iter()
            .map(|&g| {
                let glm = self.elems[g].poly.lm();
                (g, hlm.lcm(glm), hlm.is_coprime(glm))
            })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, l, coprime)) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l, coprime));
            }
        }
        // product criterion
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, _, coprime)| !coprime)
            .map(|(g, lcm, _)| Pair { i: g, j: hk, lcm })
            .collect();
        // chain criterion on old pairs
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].poly.lm().lcm(&hlm);
            let lj = elems[p.j].poly.lm().lcm(&hlm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);
        for &g in &active {
            if hlm.divides(self.elems[g].poly.lm()) {
                self.elems[g].active = false;
            }
        }
        self.elems.push(Elem {
            poly: h,
            row,
            active: true,
        });
    }

    fn finish(&mut self) -> TrackedBasis {
        let ord = self.ord;
        let mut active: Vec<usize> = (0..self.elems.len()).filter(|&k| self.elems[k].active).collect();
        active.sort_by(|&a, &b| ord.cmp(self.elems[a].poly.lm(), self.elems[b].poly.lm()));
        for idx in 0..active.len() {
            let k = active[idx];
            let others: Vec<usize> = active.iter().copied().filter(|&o| o != k).collect();
            let p = std::mem::replace(&mut self.elems[k].poly, OrderedPoly { terms: Vec::new() });
            let row = self.elems[k].row.take();
            let (p, row) = self.reduce_by(p, row, &others);
            debug_assert!(!p.is_zero());
            self.elems[k].poly = p;
            self.elems[k].row = row;
        }
        let basis = active
            .iter()
            .map(|&k| self.elems[k].poly.to_polynomial(self.nvars))
            .collect();
        let rows = active.iter().filter_map(|&k| self.elems[k].row.clone()).collect();
        TrackedBasis { basis, rows }
    }
}

/// Leading monomials compare ascending; used to keep bases in a canonical order.
#[cfg(test)]
pub(crate) fn cmp_by_lead(a: &Polynomial, b: &Polynomial, ord: &MonomialOrder) -> Ordering {
    match (a.leading_monomial(ord), b.leading_monomial(ord)) {
        (Some(x), Some(y)) => ord.cmp(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    }
}
