//! Towers of subintegral extensions obtained by adjoining regulous
//! functions one at a time, bounded Swan-pair scans, and explicit
//! Nullstellensatz certificates in the presentation ring.

use crate::extension::{graph_ideal_named, ExtensionPresentation, VarietyPresentation};
use crate::ideal::{groebner_tracked, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::regulous::{swan_pair_solve, verdict_from_graph, Fraction, SwanOutcome, Verdict};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct TowerStep {
    /// The adjoined function, written over the ring of the previous level.
    pub fraction: Fraction,
    pub name: String,
    /// Graph relations introduced at this level.
    pub relations: Vec<Polynomial>,
}

/// `C[X] ⊂ C[X][t1] ⊂ C[X][t1, t2] ⊂ ...`, each level subintegral over `C[X]`.
#[derive(Clone, Debug)]
pub struct SeminormTower {
    base: VarietyPresentation,
    steps: Vec<TowerStep>,
    current: ExtensionPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateStatus {
    Adjoined(String),
    /// The candidate equals this element of the current ring.
    AlreadyInRing(Polynomial),
    NotRegulous,
    /// The candidate could not be classified (for example the budget ran out).
    Failed(Error),
}

impl SeminormTower {
    pub fn new(base: VarietyPresentation) -> Self {
        let current = ExtensionPresentation::identity(base.clone());
        SeminormTower {
            base,
            steps: Vec::new(),
            current,
        }
    }

    pub fn base(&self) -> &VarietyPresentation {
        &self.base
    }

    pub fn steps(&self) -> &[TowerStep] {
        &self.steps
    }

    pub fn height(&self) -> usize {
        self.steps.len()
    }

    pub fn current(&self) -> &ExtensionPresentation {
        &self.current
    }

    /// The presentation truncated after `k` steps.
    pub fn prefix(&self, k: usize) -> Result<ExtensionPresentation> {
        let keep = self.base.nvars() + k;
        let ring = self
            .current
            .ring()
            .without(&(keep..self.current.ring().nvars()).collect::<Vec<_>>())
            .0;
        let mut gens = Vec::new();
        for step in &self.steps[..k] {
            gens.extend(
                step.relations
                    .iter()
                    .map(|r| r.extend(keep).restrict(&(0..keep).collect::<Vec<_>>()).unwrap()),
            );
        }
        ExtensionPresentation::from_ideal(self.base.clone(), Ideal::new(ring, gens)?)
    }

    /// Lifts a fraction over the base ring (or any lower level) to the current ring.
    pub fn lift(&self, f: &Fraction) -> Fraction {
        let n = self.current.ring().nvars();
        let map: Vec<usize> = (0..f.nvars()).collect();
        f.remap(n, &map)
    }

    /// Adjoins a regulous function given over the current ring (or a lower level).
    pub fn adjoin(&self, f: &Fraction) -> Result<SeminormTower> {
        match self.step(f)? {
            Step::Grown(t) => Ok(t),
            Step::InRing(_) => Err(Error::AlreadyInRing),
        }
    }

    fn step(&self, f: &Fraction) -> Result<Step> {
        let f = self.lift(f);
        let level = self.current.as_variety()?;
        let name = self.fresh_name();
        let graph = graph_ideal_named(&level, &f.p, &f.q, &name)?;
        let verdict = verdict_from_graph(&level, graph)?;
        match verdict.verdict {
            Verdict::Regulous => {}
            Verdict::NotRegulous => return Err(Error::NotRegulous),
            Verdict::Undecided => return Err(verdict.reason.unwrap_or_else(|| Error::Input("undecided".into()))),
        }
        if let Some(h) = verdict.polynomial_value()? {
            return Ok(Step::InRing(h));
        }
        let graph = verdict.graph_ideal().expect("regulous verdicts carry the graph");
        let current = ExtensionPresentation::from_ideal(self.base.clone(), graph.clone())?;
        if !current.is_subintegral()? {
            return Err(Error::NotSubintegral);
        }
        let tvar = graph.nvars() - 1;
        let relations = graph.gens().iter().filter(|g| g.involves(tvar)).cloned().collect();
        let mut steps = self.steps.clone();
        steps.push(TowerStep {
            fraction: f,
            name,
            relations,
        });
        Ok(Step::Grown(SeminormTower {
            base: self.base.clone(),
            steps,
            current,
        }))
    }

    fn fresh_name(&self) -> String {
        let ring = self.current.ring();
        (self.steps.len() + 1..)
            .map(|k| format!("t{k}"))
            .find(|n| ring.index_of(n).is_none())
            .unwrap()
    }

    /// Greedily adjoins each candidate, reporting what happened to it.
    pub fn extend_with(&self, candidates: &[Fraction]) -> (SeminormTower, Vec<CandidateStatus>) {
        let mut tower = self.clone();
        let mut report = Vec::with_capacity(candidates.len());
        for c in candidates {
            match tower.step(c) {
                Ok(Step::Grown(next)) => {
                    report.push(CandidateStatus::Adjoined(next.steps.last().unwrap().name.clone()));
                    tower = next;
                }
                Ok(Step::InRing(h)) => report.push(CandidateStatus::AlreadyInRing(h)),
                Err(Error::NotRegulous) => report.push(CandidateStatus::NotRegulous),
                Err(e) => report.push(CandidateStatus::Failed(e)),
            }
        }
        (tower, report)
    }

    /// Every prefix of the tower is subintegral over the base.
    pub fn check_chain(&self) -> Result<bool> {
        for k in 0..=self.height() {
            if !self.prefix(k)?.is_subintegral()? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

enum Step {
    Grown(SeminormTower),
    InRing(Polynomial),
}

pub fn seminormalize_with_candidates(
    x: &VarietyPresentation,
    candidates: &[Fraction],
) -> (SeminormTower, Vec<CandidateStatus>) {
    SeminormTower::new(x.clone()).extend_with(candidates)
}

/// A Swan pair found by [`swan_scan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwanPair {
    pub p: Polynomial,
    pub q: Polynomial,
}

/// Polynomials with every monomial of degree `<= degree` weighted by a
/// value from `coefficients`, the zero polynomial excluded.
pub fn slice(nvars: usize, degree: u32, coefficients: &[i64]) -> Vec<Polynomial> {
    let mut monos = vec![Monomial::one(nvars)];
    for _ in 0..degree {
        let mut next = monos.clone();
        for m in &monos {
            for v in 0..nvars {
                let mm = m.mul(&Monomial::var(nvars, v, 1));
                if !next.contains(&mm) {
                    next.push(mm);
                }
            }
        }
        monos = next;
    }
    let mut coeffs: Vec<i64> = coefficients.to_vec();
    coeffs.sort_unstable();
    coeffs.dedup();
    let mut out = vec![Polynomial::zero(nvars)];
    for m in &monos {
        let mut grown = Vec::with_capacity(out.len() * coeffs.len());
        for p in &out {
            for &c in &coeffs {
                if c == 0 {
                    grown.push(p.clone());
                } else {
                    grown.push(p + &Polynomial::term(nvars, m.clone(), Rational::from_integer(c.into())));
                }
            }
        }
        out = grown;
    }
    out.retain(|p| !p.is_zero());
    out.sort_by(|a, b| {
        a.terms()
            .len()
            .cmp(&b.terms().len())
            .then_with(|| format!("{a:?}").cmp(&format!("{b:?}")))
    });
    out.dedup();
    out
}

/// Bounded search for pairs `p^2 = q^3` on `X` whose cube root is not in `C[X]`.
pub fn swan_scan(x: &VarietyPresentation, degree: u32, coefficients: &[i64]) -> Result<Vec<SwanPair>> {
    let polys = slice(x.nvars(), degree, coefficients);
    let ord = MonomialOrder::grevlex();
    let gb = x.ideal().gb(&ord)?;
    let nf = |f: &Polynomial| crate::poly::remainder(f, &gb, &ord);
    let squares: Vec<Polynomial> = polys.iter().map(|p| nf(&p.pow(2))).collect::<Result<_>>()?;
    let mut found = Vec::new();
    for q in &polys {
        if x.ideal().contains(q)? {
            continue;
        }
        let cube = nf(&q.pow(3))?;
        for (p, sq) in polys.iter().zip(&squares) {
            if *sq != cube {
                continue;
            }
            match swan_pair_solve(x, p, q) {
                Ok(SwanOutcome::ProperlyRegulous(_)) => found.push(SwanPair {
                    p: p.clone(),
                    q: q.clone(),
                }),
                Ok(_) | Err(Error::ReducibleAmbiguity) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(found)
}

pub const DEFAULT_WITNESS_BOUND: u32 = 12;

/// `f^n = Σ h_i g_i + Σ k_j r_j` with `r_j` the relations of the presentation.
#[derive(Clone, Debug)]
pub struct NullstellensatzWitness {
    pub n: u32,
    pub cofactors: Vec<Polynomial>,
    pub relation_cofactors: Vec<Polynomial>,
}

impl NullstellensatzWitness {
    /// Expands the identity and checks it holds exactly.
    pub fn verify(&self, f: &Polynomial, gens: &[Polynomial], relations: &[Polynomial]) -> bool {
        if self.cofactors.len() != gens.len() || self.relation_cofactors.len() != relations.len() {
            return false;
        }
        let mut acc = f.pow(self.n);
        for (h, g) in self
            .cofactors
            .iter()
            .zip(gens)
            .chain(self.relation_cofactors.iter().zip(relations))
        {
            acc = &acc - &(h * g);
        }
        acc.is_zero()
    }
}

/// Least `n <= bound` with `f^n ∈ <gens> + J`, with cofactors.
pub fn nullstellensatz_witness(
    tower: &SeminormTower,
    f: &Polynomial,
    gens: &[Polynomial],
    bound: u32,
) -> Result<NullstellensatzWitness> {
    let j = tower.current().relations();
    let whole = j.with_gens(gens.iter().cloned())?;
    if !whole.radical_contains(f)? {
        return Err(Error::NotInRadical);
    }
    let mut all: Vec<Polynomial> = gens.to_vec();
    all.extend(j.gens().iter().cloned());
    let ord = MonomialOrder::grevlex();
    let tb = groebner_tracked(&all, &ord)?;
    let mut power = Polynomial::one(f.nvars());
    for n in 1..=bound {
        power = &power * f;
        if let Some(mut c) = tb.cofactors(&power, &ord) {
            let rel = c.split_off(gens.len());
            return Ok(NullstellensatzWitness {
                n,
                cofactors: c,
                relation_cofactors: rel,
            });
        }
    }
    Err(Error::NotFoundWithinBound(bound))
}
