//! The two oracles: one records claims while a certificate is written,
//! the other validates them by division when it is read back.

use snk_core::poly::remainder;
use snk_core::{groebner_tracked, spoly, MonomialOrder, Polynomial, Ring};

use crate::cert::{BasisClaim, Claim, IdentityClaim, OrderSpec};
use crate::protocol::Oracle;
use crate::CliError;

#[derive(Default)]
pub struct Recorder {
    pub claims: Vec<Claim>,
}

impl Oracle for Recorder {
    fn basis(
        &mut self,
        label: &str,
        ring: &Ring,
        order: &OrderSpec,
        gens: &[Polynomial],
    ) -> Result<Vec<Polynomial>, CliError> {
        if let Some(Claim::Basis(b)) = self.claims.iter().find(|c| c.label() == label) {
            if b.ring != *ring || b.order != *order || b.gens != gens {
                return Err(CliError::Internal(format!("label `{label}` reused for another ideal")));
            }
            return Ok(b.basis.clone());
        }
        let ord = order.resolve(ring)?;
        let tb = groebner_tracked(gens, &ord).map_err(CliError::Engine)?;
        self.claims.push(Claim::Basis(BasisClaim {
            label: label.to_string(),
            ring: ring.clone(),
            order: order.clone(),
            gens: gens.to_vec(),
            basis: tb.basis.clone(),
            rows: tb.rows,
        }));
        Ok(tb.basis)
    }

    fn identity(
        &mut self,
        label: &str,
        ring: &Ring,
        target: &Polynomial,
        power: u32,
        gens: &[Polynomial],
    ) -> Result<Vec<Polynomial>, CliError> {
        let ord = MonomialOrder::grevlex();
        let tb = groebner_tracked(gens, &ord).map_err(CliError::Engine)?;
        let cofactors = tb
            .cofactors(&target.pow(power), &ord)
            .ok_or_else(|| CliError::Internal(format!("{label}: power is not in the ideal")))?;
        self.claims.push(Claim::Identity(IdentityClaim {
            label: label.to_string(),
            ring: ring.clone(),
            target: target.clone(),
            power,
            gens: gens.to_vec(),
            cofactors: cofactors.clone(),
        }));
        Ok(cofactors)
    }
}

/// Replays claims from a certificate. Never computes a Groebner basis.
pub struct Checker {
    claims: Vec<Claim>,
    checked: Vec<bool>,
}

fn reject(label: &str, why: impl std::fmt::Display) -> CliError {
    CliError::Rejected(format!("{label}: {why}"))
}

impl Checker {
    pub fn new(claims: Vec<Claim>) -> Self {
        let checked = vec![false; claims.len()];
        Checker { claims, checked }
    }

    /// Every claim in the certificate was needed by the replay.
    pub fn finish(&self) -> Result<(), CliError> {
        match self.checked.iter().position(|c| !c) {
            Some(i) => Err(reject(self.claims[i].label(), "claim is not used by the verdict")),
            None => Ok(()),
        }
    }

    fn find(&self, label: &str) -> Result<usize, CliError> {
        let mut hits = self.claims.iter().enumerate().filter(|(_, c)| c.label() == label);
        match (hits.next(), hits.next()) {
            (Some((i, _)), None) => Ok(i),
            (None, _) => Err(reject(label, "claim missing")),
            _ => Err(reject(label, "claim appears twice")),
        }
    }
}

fn expand(rows: &[Polynomial], gens: &[Polynomial], nvars: usize) -> Polynomial {
    rows.iter()
        .zip(gens)
        .fold(Polynomial::zero(nvars), |acc, (r, g)| &acc + &(r * g))
}

/// `basis` generates `<gens>` and passes Buchberger's criterion.
fn validate(b: &BasisClaim) -> Result<(), CliError> {
    let label = b.label.as_str();
    let n = b.ring.nvars();
    if b.rows.len() != b.basis.len() {
        return Err(reject(label, "one row per basis element is required"));
    }
    if b.basis.iter().any(Polynomial::is_zero) {
        return Err(reject(label, "zero basis element"));
    }
    for (k, (g, row)) in b.basis.iter().zip(&b.rows).enumerate() {
        if expand(row, &b.gens, n) != *g {
            return Err(reject(
                label,
                format!("row {} does not produce basis element {}", k + 1, k + 1),
            ));
        }
    }
    let ord = b.order.resolve(&b.ring)?;
    let reduces = |f: &Polynomial| -> Result<bool, CliError> {
        if b.basis.is_empty() {
            return Ok(f.is_zero());
        }
        Ok(remainder(f, &b.basis, &ord).map_err(CliError::Engine)?.is_zero())
    };
    for (i, g) in b.gens.iter().enumerate() {
        if !reduces(g)? {
            return Err(reject(label, format!("generator {} does not reduce to zero", i + 1)));
        }
    }
    let leads: Vec<_> = b
        .basis
        .iter()
        .map(|g| g.leading_monomial(&ord).unwrap().clone())
        .collect();
    for i in 0..b.basis.len() {
        for j in i + 1..b.basis.len() {
            if leads[i].is_coprime(&leads[j]) {
                continue;
            }
            let s = spoly(&b.basis[i], &b.basis[j], &ord).map_err(CliError::Engine)?;
            if !reduces(&s)? {
                return Err(reject(
                    label,
                    format!("S-polynomial of elements {} and {} does not reduce", i + 1, j + 1),
                ));
            }
        }
    }
    Ok(())
}

impl Oracle for Checker {
    fn basis(
        &mut self,
        label: &str,
        ring: &Ring,
        order: &OrderSpec,
        gens: &[Polynomial],
    ) -> Result<Vec<Polynomial>, CliError> {
        let i = self.find(label)?;
        let Claim::Basis(b) = &self.claims[i] else {
            return Err(reject(label, "expected a basis claim"));
        };
        if b.ring.vars() != ring.vars() {
            return Err(reject(label, "ring differs from the one the verdict needs"));
        }
        if b.order != *order {
            return Err(reject(label, "term order differs from the one the verdict needs"));
        }
        if b.gens != gens {
            return Err(reject(label, "generators differ from the ones the verdict needs"));
        }
        if !self.checked[i] {
            validate(b)?;
            self.checked[i] = true;
        }
        Ok(b.basis.clone())
    }

    fn identity(
        &mut self,
        label: &str,
        ring: &Ring,
        target: &Polynomial,
        power: u32,
        gens: &[Polynomial],
    ) -> Result<Vec<Polynomial>, CliError> {
        let i = self.find(label)?;
        let Claim::Identity(c) = &self.claims[i] else {
            return Err(reject(label, "expected an identity claim"));
        };
        if c.ring.vars() != ring.vars() || c.target != *target || c.power != power || c.gens != gens {
            return Err(reject(label, "identity is about something else"));
        }
        if c.cofactors.len() != gens.len() || expand(&c.cofactors, gens, ring.nvars()) != target.pow(power) {
            return Err(reject(label, "cofactors do not re-substitute"));
        }
        self.checked[i] = true;
        Ok(c.cofactors.clone())
    }
}
