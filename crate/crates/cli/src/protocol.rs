//! The certified form of every task. The same code runs when a
//! certificate is written (bases come from the engine) and when it is
//! checked (bases come from the certificate and are validated by division).

use snk_core::poly::remainder;
use snk_core::{divide_multi, MonomialOrder, Polynomial, Ring};

use crate::cert::OrderSpec;
use crate::problem::{format_fraction, Problem, Task};
use crate::CliError;

pub trait Oracle {
    /// A Groebner basis of `<gens>` under `order`, recorded under `label`.
    fn basis(
        &mut self,
        label: &str,
        ring: &Ring,
        order: &OrderSpec,
        gens: &[Polynomial],
    ) -> Result<Vec<Polynomial>, CliError>;

    /// Cofactors `h` with `target^power = Σ h_i gens_i`.
    fn identity(
        &mut self,
        label: &str,
        ring: &Ring,
        target: &Polynomial,
        power: u32,
        gens: &[Polynomial],
    ) -> Result<Vec<Polynomial>, CliError>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Definitive,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: String,
    pub results: Vec<(String, String)>,
    pub status: Status,
}

impl Outcome {
    fn new(verdict: &str) -> Self {
        Outcome {
            verdict: verdict.to_string(),
            results: Vec::new(),
            status: Status::Definitive,
        }
    }

    fn push(&mut self, key: &str, value: String) {
        self.results.push((key.to_string(), value));
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError::Rejected(message.into())
}

fn hint<'a>(hints: &'a [(String, String)], key: &str) -> impl Iterator<Item = &'a str> + 'a {
    let key = key.to_string();
    hints.iter().filter(move |(k, _)| *k == key).map(|(_, v)| v.as_str())
}

fn in_ideal(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> bool {
    if basis.is_empty() {
        return f.is_zero();
    }
    remainder(f, basis, ord).map(|r| r.is_zero()).unwrap_or(false)
}

fn lift(ps: &[Polynomial], n: usize) -> Vec<Polynomial> {
    ps.iter().map(|p| p.extend(n)).collect()
}

fn free_of(basis: &[Polynomial], vars: &[usize], keep: usize) -> Vec<Polynomial> {
    let kept: Vec<usize> = (0..keep).collect();
    basis
        .iter()
        .filter(|g| vars.iter().all(|&v| !g.involves(v)))
        .map(|g| g.restrict(&kept).expect("free of the dropped variables"))
        .collect()
}

struct Session<'o, O: Oracle> {
    oracle: &'o mut O,
}

impl<O: Oracle> Session<'_, O> {
    fn gb(
        &mut self,
        label: &str,
        ring: &Ring,
        order: OrderSpec,
        gens: &[Polynomial],
    ) -> Result<Vec<Polynomial>, CliError> {
        self.oracle.basis(label, ring, &order, gens)
    }

    /// `f ∈ √<gens>` by the Rabinowitsch trick.
    fn radical(&mut self, label: &str, ring: &Ring, gens: &[Polynomial], f: &Polynomial) -> Result<bool, CliError> {
        let z = ring.fresh_name("z");
        let ext = ring.extended([z]).map_err(CliError::Engine)?;
        let n = ext.nvars();
        let mut all = lift(gens, n);
        let zv = Polynomial::var(n, n - 1);
        all.push(&Polynomial::one(n) - &(&zv * &f.extend(n)));
        let basis = self.gb(label, &ext, OrderSpec::Grevlex, &all)?;
        Ok(in_ideal(&Polynomial::one(n), &basis, &MonomialOrder::grevlex()))
    }

    /// `<gens> : q^∞`.
    fn saturate(
        &mut self,
        label: &str,
        ring: &Ring,
        gens: &[Polynomial],
        q: &Polynomial,
    ) -> Result<Vec<Polynomial>, CliError> {
        let z = ring.fresh_name("z");
        let ext = ring.extended([z.clone()]).map_err(CliError::Engine)?;
        let n = ext.nvars();
        let mut all = lift(gens, n);
        all.push(&Polynomial::one(n) - &(&Polynomial::var(n, n - 1) * &q.extend(n)));
        let basis = self.gb(label, &ext, OrderSpec::Block(vec![z]), &all)?;
        Ok(free_of(&basis, &[n - 1], ring.nvars()))
    }

    /// `(I : q) = I`, via `I ∩ <q>` computed with an auxiliary variable.
    fn nzd(&mut self, label: &str, ring: &Ring, ideal: &[Polynomial], q: &Polynomial) -> Result<bool, CliError> {
        if q.is_zero() {
            return Ok(false);
        }
        if ideal.iter().all(Polynomial::is_zero) {
            return Ok(true);
        }
        let w = ring.fresh_name("w");
        let ext = ring.extended([w.clone()]).map_err(CliError::Engine)?;
        let n = ext.nvars();
        let wv = Polynomial::var(n, n - 1);
        let mut all: Vec<Polynomial> = ideal.iter().map(|g| &wv * &g.extend(n)).collect();
        all.push(&(&Polynomial::one(n) - &wv) * &q.extend(n));
        let meet = self.gb(&format!("{label}-meet"), &ext, OrderSpec::Block(vec![w]), &all)?;
        let meet = free_of(&meet, &[n - 1], ring.nvars());
        let base = self.gb(&format!("{label}-ideal"), ring, OrderSpec::Grevlex, ideal)?;
        let ord = MonomialOrder::grevlex();
        for m in meet {
            let (quot, rem) = divide_multi(&m, std::slice::from_ref(q), &ord).map_err(CliError::Engine)?;
            if !rem.is_zero() {
                return Err(invalid(format!("{label}: an element of I ∩ <q> is not divisible by q")));
            }
            if !in_ideal(&quot[0], &base, &ord) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Finiteness, fibre injectivity and dominance of `J` over the base.
    fn judge(
        &mut self,
        prefix: &str,
        base: &Ring,
        ideal: &[Polynomial],
        ext: &Ring,
        j: &[Polynomial],
    ) -> Result<Judgement, CliError> {
        let nb = base.nvars();
        let adjoined: Vec<usize> = (nb..ext.nvars()).collect();
        let names: Vec<String> = adjoined.iter().map(|&i| ext.vars()[i].clone()).collect();
        let spec = OrderSpec::Block(names.clone());
        let ord = spec.resolve(ext)?;
        let fin = self.gb(&format!("{prefix}finite"), ext, spec, j)?;
        let mut out = Judgement::default();
        for &t in &adjoined {
            let monic = fin
                .iter()
                .filter(|g| {
                    let lm = g.leading_monomial(&ord).expect("basis elements are nonzero");
                    lm.exponents().iter().enumerate().all(|(i, &e)| (i == t) == (e > 0))
                })
                .min_by_key(|g| g.degree_in(t));
            match monic {
                Some(g) => out.relations.push(ext.format_in(g, &ord)),
                None => return Ok(out),
            }
        }
        out.finite = true;
        // doubled presentation: adjoined variables get primed copies
        let primed: Vec<String> = names.iter().map(|n| format!("{n}_")).collect();
        let dring = ext.extended(primed).map_err(CliError::Engine)?;
        let dn = dring.nvars();
        let shift: Vec<usize> = (0..ext.nvars())
            .map(|i| if i < nb { i } else { i + adjoined.len() })
            .collect();
        let mut doubled = lift(j, dn);
        doubled.extend(j.iter().map(|g| g.remap(dn, &shift)));
        for (k, &t) in adjoined.iter().enumerate() {
            let diff = &Polynomial::var(dn, t) - &Polynomial::var(dn, t + adjoined.len());
            if !self.radical(&format!("{prefix}injective-{}", k + 1), &dring, &doubled, &diff)? {
                out.not_injective.push(k + 1);
            }
        }
        let base_basis = self.gb(&format!("{prefix}ideal"), base, OrderSpec::Grevlex, ideal)?;
        let grevlex = MonomialOrder::grevlex();
        out.dominant = true;
        for (k, g) in free_of(&fin, &adjoined, nb).iter().enumerate() {
            if in_ideal(g, &base_basis, &grevlex) {
                continue;
            }
            if !self.radical(&format!("{prefix}dominant-{}", k + 1), base, ideal, g)? {
                out.dominant = false;
            }
        }
        Ok(out)
    }
}

#[derive(Default, Debug)]
struct Judgement {
    finite: bool,
    relations: Vec<String>,
    not_injective: Vec<usize>,
    dominant: bool,
}

impl Judgement {
    fn holds(&self) -> bool {
        self.finite && self.not_injective.is_empty() && self.dominant
    }

    fn failure(&self) -> Option<&'static str> {
        if !self.finite {
            Some("not-finite")
        } else if !self.not_injective.is_empty() {
            Some("not-injective")
        } else if !self.dominant {
            Some("not-dominant")
        } else {
            None
        }
    }

    fn report(&self, out: &mut Outcome) {
        for r in &self.relations {
            out.push("relation", r.clone());
        }
        if let Some(f) = self.failure() {
            out.push("failure", f.to_string());
        }
    }
}

fn order_of(problem: &Problem) -> OrderSpec {
    match problem.order {
        Some(crate::problem::OrderChoice::Lex) => OrderSpec::Lex,
        _ => OrderSpec::Grevlex,
    }
}

/// Runs the certified procedure for `problem`. `hints` carries data the
/// procedure checks but does not search for (conductor generators, Swan
/// pairs, polynomial values of candidates, ...).
pub fn certify<O: Oracle>(problem: &Problem, hints: &[(String, String)], oracle: &mut O) -> Result<Outcome, CliError> {
    let mut s = Session { oracle };
    let ring = problem.ring();
    let n = ring.nvars();
    let ideal = &problem.ideal;
    match problem.task {
        Task::Gb => {
            let basis = s.gb("ideal", &ring, order_of(problem), ideal)?;
            let ord = order_of(problem).resolve(&ring)?;
            let mut out = Outcome::new("Computed");
            for g in &basis {
                out.push("basis", ring.format_in(g, &ord));
            }
            Ok(out)
        }
        Task::Member => {
            let spec = order_of(problem);
            let basis = s.gb("ideal", &ring, spec.clone(), ideal)?;
            let ord = spec.resolve(&ring)?;
            let target = problem.target.as_ref().expect("checked by the parser");
            let rem = if basis.is_empty() {
                target.clone()
            } else {
                remainder(target, &basis, &ord).map_err(CliError::Engine)?
            };
            let mut out = Outcome::new(if rem.is_zero() { "Member" } else { "NotMember" });
            out.push("remainder", ring.format_in(&rem, &ord));
            Ok(out)
        }
        Task::RadicalMember => {
            let target = problem.target.as_ref().expect("checked by the parser");
            let inside = s.radical("rabinowitsch", &ring, ideal, target)?;
            Ok(Outcome::new(if inside { "InRadical" } else { "NotInRadical" }))
        }
        Task::Eliminate => {
            let spec = OrderSpec::Block(problem.eliminate.clone());
            let drop: Vec<usize> = problem.eliminate.iter().map(|v| ring.index_of(v).unwrap()).collect();
            let basis = s.gb("elimination", &ring, spec, ideal)?;
            let mut out = Outcome::new("Computed");
            for g in basis.iter().filter(|g| drop.iter().all(|&v| !g.involves(v))) {
                out.push("generator", ring.format(g));
            }
            Ok(out)
        }
        Task::Saturate => {
            let q = problem.by.as_ref().expect("checked by the parser");
            let sat = s.saturate("saturation", &ring, ideal, q)?;
            let mut out = Outcome::new("Computed");
            for g in &sat {
                out.push("generator", ring.format(g));
            }
            Ok(out)
        }
        Task::RegulousCheck => regulous(&mut s, problem),
        Task::SubintegralCheck => {
            let ext = problem.extended_ring();
            let mut j = lift(ideal, ext.nvars());
            j.extend(problem.relations.iter().cloned());
            let judgement = s.judge("", &ring, ideal, &ext, &j)?;
            let mut out = Outcome::new(if judgement.holds() {
                "Subintegral"
            } else {
                "NotSubintegral"
            });
            judgement.report(&mut out);
            Ok(out)
        }
        Task::SwanCheck => {
            let (p, q) = (problem.p.as_ref().unwrap(), problem.q.as_ref().unwrap());
            swan(&mut s, "", &ring, ideal, p, q)
        }
        Task::SwanScan => {
            // the slice is enumerated here too, so absence of pairs is certified
            let slice = snk_core::seminorm::slice(n, problem.degree.unwrap(), &problem.coefficients);
            let base = s.gb("ideal", &ring, OrderSpec::Grevlex, ideal)?;
            let ord = MonomialOrder::grevlex();
            let nf = |f: &Polynomial| remainder(f, &base, &ord).map_err(CliError::Engine);
            let squares: Vec<Polynomial> = slice.iter().map(|p| nf(&p.pow(2))).collect::<Result<_, _>>()?;
            let mut out = Outcome::new("NoneFound");
            let mut k = 0;
            for q in &slice {
                if in_ideal(q, &base, &ord) {
                    continue;
                }
                let cube = nf(&q.pow(3))?;
                for (p, sq) in slice.iter().zip(&squares) {
                    if *sq != cube {
                        continue;
                    }
                    k += 1;
                    if swan(&mut s, &format!("candidate-{k}-"), &ring, ideal, p, q)?.verdict == "ProperlyRegulous" {
                        out.verdict = "Found".into();
                        out.push("pair", format!("{} ; {}", ring.format(p), ring.format(q)));
                    }
                }
            }
            Ok(out)
        }
        Task::Conductor => {
            let f = &problem.fractions[0];
            let d = problem.degree.unwrap();
            if !s.nzd("nzd", &ring, ideal, &f.q)? {
                return Ok(undecided("denominator is a zero-divisor"));
            }
            let t = ring.fresh_name("t");
            let ext = ring.extended([t.clone()]).map_err(CliError::Engine)?;
            let m = ext.nvars();
            let mut gens = lift(ideal, m);
            gens.push(&(&f.q.extend(m) * &Polynomial::var(m, n)) - &f.p.extend(m));
            let graph = s.saturate("graph", &ext, &gens, &f.q.extend(m))?;
            let spec = OrderSpec::Block(vec![t]);
            let ord = spec.resolve(&ext)?;
            let fin = s.gb("finite", &ext, spec, &graph)?;
            let monic = fin
                .iter()
                .filter(|g| {
                    g.leading_monomial(&ord)
                        .is_some_and(|lm| lm.exponents()[..n].iter().all(|&e| e == 0))
                })
                .min_by_key(|g| g.degree_in(n));
            let Some(monic) = monic.filter(|g| g.degree_in(n) <= d) else {
                return Ok(Outcome::new("NotIntegral"));
            };
            let k = monic.degree_in(n);
            let mut out = Outcome::new("Computed");
            out.push("relation", ext.format_in(monic, &ord));
            for g in hint(hints, "generator") {
                let c = ring.parse(g).map_err(|e| invalid(e.to_string()))?;
                let mut power = c.extend(m);
                for _ in 1..k {
                    power = &power * &Polynomial::var(m, n);
                    let r = remainder(&power, &fin, &ord).map_err(CliError::Engine)?;
                    if r.involves(n) {
                        return Err(invalid(format!("`{g}` is not in the conductor")));
                    }
                }
                out.push("generator", ring.format(&c));
            }
            Ok(out)
        }
        Task::Seminormalize => {
            let (tower, mut out) = tower(&mut s, problem, hints)?;
            out.verdict = "Tower".into();
            out.push("height", tower.height.to_string());
            for g in &tower.relations {
                out.push("relation", tower.ring.format(g));
            }
            Ok(out)
        }
        Task::Nullstellensatz => {
            let (tower, mut out) = tower(&mut s, problem, hints)?;
            let top = &tower.ring;
            let tn = top.nvars();
            let kept: Vec<usize> = (0..tn).collect();
            let down = |p: &Polynomial| {
                p.restrict(&kept).ok_or_else(|| {
                    CliError::Input("target or generator uses a variable that was never adjoined".into())
                })
            };
            let target = down(problem.target.as_ref().unwrap())?;
            let mut gens: Vec<Polynomial> = problem.generators.iter().map(down).collect::<Result<_, _>>()?;
            gens.extend(tower.relations.iter().cloned());
            if !s.radical("ns-radical", top, &gens, &target)? {
                out.verdict = "NotInRadical".into();
                return Ok(out);
            }
            let bound = problem.bound.unwrap_or(snk_core::seminorm::DEFAULT_WITNESS_BOUND);
            let basis = s.gb("ns-ideal", top, OrderSpec::Grevlex, &gens)?;
            let ord = MonomialOrder::grevlex();
            let mut power = Polynomial::one(tn);
            for k in 1..=bound {
                power = &power * &target;
                if in_ideal(&power, &basis, &ord) {
                    s.oracle.identity("ns-identity", top, &target, k, &gens)?;
                    out.verdict = "Witness".into();
                    out.push("power", k.to_string());
                    return Ok(out);
                }
            }
            out.verdict = "NotFoundWithinBound".into();
            out.status = Status::Undecided;
            Ok(out)
        }
    }
}

fn undecided(reason: &str) -> Outcome {
    let mut out = Outcome::new("Undecided");
    out.status = Status::Undecided;
    out.push("reason", reason.to_string());
    out
}

fn regulous<O: Oracle>(s: &mut Session<'_, O>, problem: &Problem) -> Result<Outcome, CliError> {
    let ring = problem.ring();
    let n = ring.nvars();
    let ideal = &problem.ideal;
    let (ext, graph) = if problem.relations.is_empty() {
        let f = &problem.fractions[0];
        if !s.nzd("nzd", &ring, ideal, &f.q)? {
            return Ok(undecided("denominator is a zero-divisor"));
        }
        let ext = ring.extended([ring.fresh_name("t")]).map_err(CliError::Engine)?;
        let m = ext.nvars();
        let mut gens = lift(ideal, m);
        gens.push(&(&f.q.extend(m) * &Polynomial::var(m, n)) - &f.p.extend(m));
        let graph = s.saturate("graph", &ext, &gens, &f.q.extend(m))?;
        (ext, graph)
    } else {
        let ext = problem.extended_ring();
        let m = ext.nvars();
        let mut j = lift(ideal, m);
        j.extend(problem.relations.iter().cloned());
        let t = Polynomial::var(m, n);
        let mut acc = j.clone();
        for (i, f) in problem.fractions.iter().enumerate() {
            let (p, q) = (f.p.extend(m), f.q.extend(m));
            let claim = &q * &(&(&q * &t) - &p);
            if !s.radical(&format!("stratum-{}", i + 1), &ext, &acc, &claim)? {
                return Err(CliError::Engine(snk_core::Error::PreconditionFailed(format!(
                    "stratum {} does not satisfy its graph equation",
                    i + 1
                ))));
            }
            acc.push(q);
        }
        if !s.radical("vanishing", &ext, &acc, &t)? {
            return Err(CliError::Engine(snk_core::Error::PreconditionFailed(
                "the function is not zero where every denominator vanishes".into(),
            )));
        }
        (ext, j)
    };
    let judgement = s.judge("", &ring, ideal, &ext, &graph)?;
    let mut out = Outcome::new(if judgement.holds() { "Regulous" } else { "NotRegulous" });
    judgement.report(&mut out);
    Ok(out)
}

fn swan<O: Oracle>(
    s: &mut Session<'_, O>,
    prefix: &str,
    ring: &Ring,
    ideal: &[Polynomial],
    p: &Polynomial,
    q: &Polynomial,
) -> Result<Outcome, CliError> {
    let n = ring.nvars();
    let base = s.gb("ideal", ring, OrderSpec::Grevlex, ideal)?;
    let ord = MonomialOrder::grevlex();
    if !in_ideal(&(&p.pow(2) - &q.pow(3)), &base, &ord) {
        return Ok(Outcome::new("NotAPair"));
    }
    if in_ideal(q, &base, &ord) {
        let mut out = Outcome::new("InRing");
        out.push("value", "0".into());
        return Ok(out);
    }
    if !s.nzd(&format!("{prefix}nzd"), ring, ideal, q)? {
        return Ok(undecided("q is a zero-divisor"));
    }
    let t = ring.fresh_name("t");
    let ext = ring.extended([t.clone()]).map_err(CliError::Engine)?;
    let m = ext.nvars();
    let mut gens = lift(ideal, m);
    let tv = Polynomial::var(m, n);
    gens.push(&(&q.extend(m) * &tv) - &p.extend(m));
    let mut graph = s.saturate(&format!("{prefix}graph"), &ext, &gens, &q.extend(m))?;
    graph.push(&tv.pow(2) - &q.extend(m));
    let spec = OrderSpec::Block(vec![t]);
    let bord = spec.resolve(&ext)?;
    let blk = s.gb(&format!("{prefix}cube-root"), &ext, spec, &graph)?;
    let nf = remainder(&tv, &blk, &bord).map_err(CliError::Engine)?;
    if nf.involves(n) {
        return Ok(Outcome::new("ProperlyRegulous"));
    }
    let h = nf.restrict(&(0..n).collect::<Vec<_>>()).unwrap();
    let mut out = Outcome::new("InRing");
    out.push("value", ring.format(&h));
    Ok(out)
}

struct Tower {
    ring: Ring,
    relations: Vec<Polynomial>,
    height: usize,
}

/// Replays a candidate list; each step is certified over the previous level.
fn tower<O: Oracle>(
    s: &mut Session<'_, O>,
    problem: &Problem,
    hints: &[(String, String)],
) -> Result<(Tower, Outcome), CliError> {
    let base = problem.ring();
    let statuses: Vec<&str> = hint(hints, "status").collect();
    if statuses.len() != problem.candidates.len() {
        return Err(invalid("one status per candidate is required"));
    }
    let mut out = Outcome::new("Tower");
    let mut level = base.clone();
    let mut j = problem.ideal.clone();
    for (i, (cand, status)) in problem.candidates.iter().zip(statuses).enumerate() {
        let step = i + 1;
        if status.starts_with("failed") {
            out.status = Status::Undecided;
            out.push("status", status.to_string());
            continue;
        }
        let k = level.nvars();
        let f = cand.remap(k, &(0..base.nvars()).collect::<Vec<_>>());
        if !s.nzd(&format!("step-{step}-nzd"), &level, &j, &f.q)? {
            return Err(invalid(format!("step {step}: denominator is a zero-divisor")));
        }
        let name = (level.nvars() - base.nvars() + 1..)
            .map(|c| format!("t{c}"))
            .find(|c| level.index_of(c).is_none())
            .unwrap();
        let ext = level.extended([name.clone()]).map_err(CliError::Engine)?;
        let m = ext.nvars();
        let mut gens = lift(&j, m);
        let sv = Polynomial::var(m, k);
        gens.push(&(&f.q.extend(m) * &sv) - &f.p.extend(m));
        let graph = s.saturate(&format!("step-{step}-graph"), &ext, &gens, &f.q.extend(m))?;
        let judgement = s.judge(&format!("step-{step}-"), &level, &j, &ext, &graph)?;
        if !judgement.holds() {
            out.push("status", "not-regulous".into());
            continue;
        }
        if let Some(h) = status.strip_prefix("already-in-ring ") {
            let h = level.parse(h).map_err(|e| invalid(e.to_string()))?;
            if !s.radical(&format!("step-{step}-value"), &ext, &graph, &(&sv - &h.extend(m)))? {
                return Err(invalid(format!("step {step}: the stated value is wrong")));
            }
            out.push("status", format!("already-in-ring {}", level.format(&h)));
            continue;
        }
        out.push("status", format!("adjoined {name}"));
        level = ext;
        j = graph;
    }
    let height = level.nvars() - base.nvars();
    if height > 0 {
        let judgement = s.judge("tower-", &base, &problem.ideal, &level, &j)?;
        if !judgement.holds() {
            return Err(invalid("the tower is not subintegral over the base"));
        }
    }
    Ok((
        Tower {
            ring: level,
            relations: j,
            height,
        },
        out,
    ))
}

/// Canonical `status:` line for a candidate handled by the engine; `ring`
/// is the level the candidate was tried against.
pub fn status_line(ring: &Ring, status: &snk_core::seminorm::CandidateStatus) -> String {
    use snk_core::seminorm::CandidateStatus;
    match status {
        CandidateStatus::Adjoined(name) => format!("adjoined {name}"),
        CandidateStatus::AlreadyInRing(h) => format!("already-in-ring {}", ring.format(h)),
        CandidateStatus::NotRegulous => "not-regulous".into(),
        CandidateStatus::Failed(e) => format!("failed {e}"),
    }
}

/// Fraction text used in summaries.
pub fn describe_fraction(problem: &Problem) -> Option<String> {
    problem.fractions.first().map(|f| format_fraction(&problem.ring(), f))
}
