//! Ideals and the ideal-theoretic primitives built on Groebner bases:
//! membership, radical membership, elimination, saturation and quotients.

pub mod budget;
mod groebner;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub use groebner::{groebner, groebner_tracked, TrackedBasis};

use crate::poly::{remainder, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

type BasisCache = Arc<RwLock<HashMap<MonomialOrder, Arc<[Polynomial]>>>>;

/// An ideal of a polynomial ring, given by generators, with reduced
/// Groebner bases memoised per monomial order.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: BasisCache,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        write!(f, "<{}> in Q[{}]", gens.join(", "), self.ring)
    }
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::Input(format!(
                "generator has {} variables but the ring has {}",
                g.nvars(),
                ring.nvars()
            )));
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring,
            gens,
            cache: Arc::default(),
        })
    }

    /// Parses each generator in `ring`.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|g| ring.parse(g)).collect::<Result<_>>()?;
        Ideal::new(ring.clone(), gens)
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: Ring) -> Self {
        let one = ring.one();
        Ideal::new(ring, vec![one]).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Groebner basis for `ord`, computed once and memoised.
    pub fn gb(&self, ord: &MonomialOrder) -> Result<Arc<[Polynomial]>> {
        if let Some(b) = self.cache.read().unwrap().get(ord) {
            return Ok(b.clone());
        }
        let basis: Arc<[Polynomial]> = groebner(&self.gens, ord)?.into();
        self.cache
            .write()
            .unwrap()
            .entry(ord.clone())
            .or_insert_with(|| basis.clone());
        Ok(basis)
    }

    /// Grevlex basis.
    pub fn basis(&self) -> Result<Arc<[Polynomial]>> {
        self.gb(&MonomialOrder::grevlex())
    }

    pub fn normal_form(&self, f: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
        self.check(f)?;
        remainder(f, &self.gb(ord)?, ord)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f, &MonomialOrder::grevlex())?.is_zero())
    }

    pub fn contains_all(&self, fs: &[Polynomial]) -> Result<bool> {
        for f in fs {
            if !self.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.contains_all(other.gens())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.basis()?.iter().any(Polynomial::is_unit))
    }

    /// Literal ideal equality (mutual containment).
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// `f ∈ √I`, decided by `1 ∈ I + <1 - z f>` with a fresh variable `z`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        self.check(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        self.rabinowitsch(f)?.is_unit()
    }

    /// The ideal `I + <1 - z f>` in the ring extended by one fresh variable.
    pub fn rabinowitsch(&self, f: &Polynomial) -> Result<Ideal> {
        let z = self.ring.fresh_name("z");
        let ring = self.ring.extended([z])?;
        let n = ring.nvars();
        let zf = &Polynomial::var(n, n - 1) * &f.extend(n);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.extend(n)).collect();
        gens.push(&Polynomial::one(n) - &zf);
        Ideal::new(ring, gens)
    }

    pub fn radical_contains_all(&self, fs: &[Polynomial]) -> Result<bool> {
        for f in fs {
            if !self.radical_contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `√I = √J`.
    pub fn equal_radical(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(other.radical_contains_all(&self.gens)? && self.radical_contains_all(&other.gens)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn with_gens(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(self.ring.clone(), gens)
    }

    /// Pushes the ideal into a ring whose variable `i` is `map[i]` in `target`.
    pub fn embed(&self, target: &Ring, map: &[usize]) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.remap(target.nvars(), map)).collect();
        Ideal::new(target.clone(), gens)
    }

    /// `I ∩ Q[remaining variables]`, returned in the subring on the kept variables.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        if let Some(&bad) = drop.iter().find(|&&v| v >= self.nvars()) {
            return Err(Error::Input(format!("variable index {bad} out of range")));
        }
        let (sub, keep) = self.ring.without(drop);
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let ord = MonomialOrder::block(drop);
        let gens = self.gb(&ord)?.iter().filter_map(|g| g.restrict(&keep)).collect();
        Ideal::new(sub, gens)
    }

    /// Elimination that keeps the ambient ring (eliminated variables simply do not occur).
    pub fn eliminate_in_place(&self, drop: &[usize]) -> Result<Ideal> {
        let ord = MonomialOrder::block(drop);
        let gens = self
            .gb(&ord)?
            .iter()
            .filter(|g| !drop.iter().any(|&v| g.involves(v)))
            .cloned()
            .collect();
        Ideal::new(self.ring.clone(), gens)
    }

    /// `(I : q^∞) = (I + <1 - z q>) ∩ Q[x]`.
    pub fn saturate(&self, q: &Polynomial) -> Result<Ideal> {
        self.check(q)?;
        if q.is_zero() {
            return Err(Error::Input("cannot saturate by zero".into()));
        }
        if q.is_unit() {
            return Ok(self.clone());
        }
        let aug = self.rabinowitsch(q)?;
        let z = aug.nvars() - 1;
        let out = aug.eliminate(&[z])?;
        Ideal::new(self.ring.clone(), out.gens)
    }

    /// `I ∩ J` via `(t I + (1 - t) J) ∩ Q[x]`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let w = self.ring.fresh_name("w");
        let ring = self.ring.extended([w])?;
        let n = ring.nvars();
        let t = Polynomial::var(n, n - 1);
        let one_minus_t = &Polynomial::one(n) - &t;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| &t * &g.extend(n)).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.extend(n)));
        let out = Ideal::new(ring, gens)?.eliminate(&[n - 1])?;
        Ideal::new(self.ring.clone(), out.gens)
    }

    /// `(I : q) = {a : a q ∈ I}`.
    pub fn quotient(&self, q: &Polynomial) -> Result<Ideal> {
        self.check(q)?;
        if q.is_zero() {
            return Err(Error::Input("colon by zero".into()));
        }
        if q.is_unit() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(self.ring.clone(), vec![q.clone()])?;
        let meet = self.intersect(&principal)?;
        let ord = MonomialOrder::grevlex();
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in meet.gens() {
            let (quot, rem) = crate::poly::divide_multi(g, std::slice::from_ref(q), &ord)?;
            debug_assert!(rem.is_zero(), "element of <q> not divisible by q");
            gens.push(quot.into_iter().next().unwrap());
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// `(I : J) = ∩ (I : g)` over the generators of `J`.
    pub fn quotient_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc = Ideal::unit(self.ring.clone());
        for g in other.gens() {
            acc = acc.intersect(&self.quotient(g)?)?;
        }
        Ok(acc)
    }

    /// `q` is a non-zero-divisor modulo `I` exactly when `(I : q) = I`.
    pub fn is_nzd(&self, q: &Polynomial) -> Result<bool> {
        self.check(q)?;
        if q.is_zero() {
            return Ok(false);
        }
        let colon = self.quotient(q)?;
        self.contains_ideal(&colon)
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.nvars() {
            return Err(Error::Input(format!(
                "polynomial has {} variables but the ideal's ring has {}",
                f.nvars(),
                self.nvars()
            )));
        }
        Ok(())
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Input(format!(
                "ideals live in different rings: Q[{}] vs Q[{}]",
                self.ring, other.ring
            )));
        }
        Ok(())
    }
}
