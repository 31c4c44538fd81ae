//! Deciding whether a rational function extends continuously to the whole
//! variety, by the criterion "rational, integral, Zariski-closed graph",
//! together with the Swan / power-pair criteria and their witnesses.

use crate::extension::{graph_ideal, ExtensionPresentation, InjectivityReport, RadicalCheck, VarietyPresentation};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Rational, Ring};
use crate::{Error, Result};

/// `p / q` over the base ring of a variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub p: Polynomial,
    pub q: Polynomial,
}

impl Fraction {
    pub fn new(p: Polynomial, q: Polynomial) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::Input("zero denominator".into()));
        }
        if p.nvars() != q.nvars() {
            return Err(Error::Input("numerator and denominator live in different rings".into()));
        }
        Ok(Fraction { p, q })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        let q = Polynomial::one(p.nvars());
        Fraction { p, q }
    }

    /// Parses `p / q` or a bare polynomial.
    pub fn parse(ring: &Ring, src: &str) -> Result<Self> {
        let (p, q) = ring.parse_fraction(src)?;
        Fraction::new(p, q)
    }

    pub fn nvars(&self) -> usize {
        self.p.nvars()
    }

    pub fn is_polynomial(&self) -> bool {
        self.q.is_constant()
    }

    /// The denominator is a non-zero-divisor modulo `I`.
    pub fn is_legitimate(&self, x: &VarietyPresentation) -> Result<bool> {
        x.ideal().is_nzd(&self.q)
    }

    /// Same fraction with every variable mapped through `map` into a ring of `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Fraction {
        Fraction {
            p: self.p.remap(nvars, map),
            q: self.q.remap(nvars, map),
        }
    }

    pub fn format(&self, ring: &Ring) -> String {
        if self.q.is_one() {
            return ring.format(&self.p);
        }
        format!("({}) / ({})", ring.format(&self.p), ring.format(&self.q))
    }
}

/// `f = p_1/q_1` where `q_1 != 0`, else `p_2/q_2` where `q_2 != 0`, ...,
/// and `0` where every `q_i` vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratifiedFraction {
    strata: Vec<Fraction>,
}

impl StratifiedFraction {
    pub fn new(strata: Vec<Fraction>) -> Result<Self> {
        if strata.is_empty() {
            return Err(Error::Input("a stratified fraction needs at least one stratum".into()));
        }
        Ok(StratifiedFraction { strata })
    }

    pub fn single(f: Fraction) -> Self {
        StratifiedFraction { strata: vec![f] }
    }

    pub fn strata(&self) -> &[Fraction] {
        &self.strata
    }

    /// The stratum on the dense open set.
    pub fn primary(&self) -> &Fraction {
        &self.strata[0]
    }

    /// Consecutive representations agree where the later one applies:
    /// `p_i q_j - p_j q_i` vanishes on `Z(I, q_1..q_{j-1})` for `i < j`.
    /// There `q_i = 0`, so this says `p_i` vanishes along with `q_i`, as
    /// `p_i = q_i f` forces for a continuous `f`.
    pub fn is_consistent(&self, x: &VarietyPresentation) -> Result<bool> {
        for j in 1..self.strata.len() {
            let before: Vec<Polynomial> = self.strata[..j].iter().map(|f| f.q.clone()).collect();
            let locus = x.ideal().with_gens(before)?;
            let b = &self.strata[j];
            for a in &self.strata[..j] {
                let cross = &(&a.p * &b.q) - &(&b.p * &a.q);
                if !locus.radical_contains(&cross)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Regulous,
    NotRegulous,
    Undecided,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Regulous => "Regulous",
            Verdict::NotRegulous => "NotRegulous",
            Verdict::Undecided => "Undecided",
        })
    }
}

/// Which condition a negative verdict violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// The eliminating basis has no pure power of `t` as a leading monomial.
    NotFinite,
    /// Some fiber holds two points; indices of the separating variables.
    NotInjective(Vec<usize>),
    /// The graph does not project onto the variety.
    NotDominant,
}

/// Outcome of the regulosity pipeline with the data that certifies it.
#[derive(Clone, Debug)]
pub struct RegulousVerdict {
    pub verdict: Verdict,
    pub graph: Option<ExtensionPresentation>,
    /// Monic relation of `t` over `C[X]`, when the graph is finite.
    pub relation: Option<Polynomial>,
    pub injectivity: Option<InjectivityReport>,
    /// `J ∩ C[x]`.
    pub image: Option<Ideal>,
    pub failure: Option<Failure>,
    /// Set when the verdict is `Undecided`.
    pub reason: Option<Error>,
}

impl RegulousVerdict {
    fn undecided(reason: Error) -> Self {
        RegulousVerdict {
            verdict: Verdict::Undecided,
            graph: None,
            relation: None,
            injectivity: None,
            image: None,
            failure: None,
            reason: Some(reason),
        }
    }

    pub fn is_regulous(&self) -> bool {
        self.verdict == Verdict::Regulous
    }

    pub fn graph_ideal(&self) -> Option<&Ideal> {
        self.graph.as_ref().map(ExtensionPresentation::relations)
    }

    /// When the function is already a polynomial `h` on `X`, returns `h`.
    pub fn polynomial_value(&self) -> Result<Option<Polynomial>> {
        match (&self.verdict, &self.graph) {
            (Verdict::Regulous, Some(g)) => value_in_base(g),
            _ => Ok(None),
        }
    }

    /// Re-runs every membership statement the verdict rests on.
    pub fn recheck(&self) -> Result<bool> {
        let Some(graph) = &self.graph else {
            return Ok(self.verdict == Verdict::Undecided);
        };
        // fresh copies: nothing is taken from the memoised bases
        let fresh = |i: &Ideal| Ideal::new(i.ring().clone(), i.gens().to_vec());
        let j = &fresh(graph.relations())?;
        let t = graph.base_nvars();
        if let Some(rel) = &self.relation {
            let lead = rel.leading_monomial(&graph.elimination_order());
            let monic = lead.is_some_and(|m| m.degree() == m.exp(t))
                && rel
                    .leading_coefficient(&graph.elimination_order())
                    .is_some_and(|c| *c == num_traits::One::one());
            if !monic || !j.contains(rel)? {
                return Ok(false);
            }
        }
        let checks_hold = |rep: &InjectivityReport| -> Result<Vec<bool>> {
            rep.checks
                .iter()
                .map(|c: &RadicalCheck| fresh(&c.ideal)?.is_unit())
                .collect()
        };
        match self.verdict {
            Verdict::Regulous => {
                let (Some(_), Some(inj), Some(image)) = (&self.relation, &self.injectivity, &self.image) else {
                    return Ok(false);
                };
                if !checks_hold(inj)?.into_iter().all(|b| b) {
                    return Ok(false);
                }
                let image_in_j = image
                    .gens()
                    .iter()
                    .all(|g| j.contains(&g.extend(j.nvars())).unwrap_or(false));
                Ok(image_in_j && fresh(image)?.equal_radical(&fresh(graph.base().ideal())?)?)
            }
            Verdict::NotRegulous => match &self.failure {
                Some(Failure::NotFinite) => Ok(!graph.is_finite()?),
                Some(Failure::NotInjective(idx)) => {
                    let Some(inj) = &self.injectivity else {
                        return Ok(false);
                    };
                    let held = checks_hold(inj)?;
                    Ok(!idx.is_empty() && idx.iter().all(|&k| held.get(k) == Some(&false)))
                }
                Some(Failure::NotDominant) => Ok(!graph.is_dominant()?),
                None => Ok(false),
            },
            Verdict::Undecided => Ok(true),
        }
    }
}

/// `h ∈ C[x]` with `t - h` in the radical of the graph ideal, for a graph
/// known to be that of a continuous function.
fn value_in_base(g: &ExtensionPresentation) -> Result<Option<Polynomial>> {
    if let Some(h) = g.adjoined_in_base(0)? {
        return Ok(Some(h));
    }
    let j = g.relations();
    let x = g.base();
    let n = j.nvars();
    let tvar = n - 1;
    let t = Polynomial::var(n, tvar);
    let (_, keep) = g.ring().without(&[tvar]);
    let verify =
        |h: Polynomial| -> Result<Option<Polynomial>> { Ok(j.radical_contains(&(&t - &h.extend(n)))?.then_some(h)) };
    let gb = j.gb(&g.elimination_order())?;
    // c t - d with c a non-zero-divisor: the graph is the closure over D(c)
    for e in gb.iter().filter(|e| e.degree_in(tvar) == 1) {
        let Some(c) = e.coefficient_of(tvar, 1).restrict(&keep) else {
            continue;
        };
        if c.is_constant() || !x.ideal().is_nzd(&c)? {
            continue;
        }
        let sat = ExtensionPresentation::from_ideal(x.clone(), j.saturate(&c.extend(n))?)?;
        if let Some(h) = sat.adjoined_in_base(0)? {
            return verify(h);
        }
        return Ok(None);
    }
    // t^k + a t^{k-1} + ... with a single root has that root at -a/k
    for e in gb.iter() {
        let k = e.degree_in(tvar);
        if k == 0 || !e.coefficient_of(tvar, k).is_one() {
            continue;
        }
        if let Some(a) = e.coefficient_of(tvar, k - 1).restrict(&keep) {
            if let Some(h) = verify(a.scale(&Rational::new((-1).into(), (k as i64).into())))? {
                return Ok(Some(h));
            }
        }
    }
    Ok(None)
}

fn settle(r: Result<RegulousVerdict>) -> Result<RegulousVerdict> {
    match r {
        Err(e) if e.is_budget() => Ok(RegulousVerdict::undecided(e)),
        other => other,
    }
}

/// Zariski closure of the graph of `f` in `X × A^1`.
pub fn graph_closure(x: &VarietyPresentation, f: &Fraction) -> Result<Ideal> {
    graph_ideal(x, &f.p, &f.q)
}

/// Regulosity of `f` on `X`.
pub fn is_regulous(x: &VarietyPresentation, f: &Fraction) -> Result<RegulousVerdict> {
    settle(graph_closure(x, f).and_then(|j| judge_graph(x, j)))
}

/// Runs the finite / injective / dominant pipeline on a candidate graph
/// ideal in `Q[x, t]`, `t` being the last variable.
pub fn verdict_from_graph(x: &VarietyPresentation, graph: Ideal) -> Result<RegulousVerdict> {
    settle(judge_graph(x, graph))
}

fn judge_graph(x: &VarietyPresentation, graph: Ideal) -> Result<RegulousVerdict> {
    if graph.nvars() != x.nvars() + 1 {
        return Err(Error::Input("graph ideal must have exactly one extra variable".into()));
    }
    let e = ExtensionPresentation::from_ideal(x.clone(), graph)?;
    let relation = match e.integral_equation(0) {
        Ok(r) => Some(r),
        Err(Error::NotFinite) => None,
        Err(err) => return Err(err),
    };
    let image = e.image_ideal()?;
    let mut out = RegulousVerdict {
        verdict: Verdict::NotRegulous,
        graph: None,
        relation: relation.clone(),
        injectivity: None,
        image: Some(image.clone()),
        failure: None,
        reason: None,
    };
    if relation.is_none() {
        out.failure = Some(Failure::NotFinite);
        out.graph = Some(e);
        return Ok(out);
    }
    let inj = e.fiber_injective()?;
    let failures = inj.failures();
    out.injectivity = Some(inj);
    if !failures.is_empty() {
        out.failure = Some(Failure::NotInjective(failures));
    } else if !image.equal_radical(x.ideal())? {
        out.failure = Some(Failure::NotDominant);
    } else {
        out.verdict = Verdict::Regulous;
    }
    out.graph = Some(e);
    Ok(out)
}

/// Regulosity of a stratified function from an explicitly supplied graph
/// system in `Q[x, name]`.
///
/// Besides the pipeline, checks that each stratum satisfies the system on
/// its own locus, and that the system forces `t = 0` where every
/// denominator vanishes.
pub fn check_graph_system(
    x: &VarietyPresentation,
    name: &str,
    f: &StratifiedFraction,
    system: &[Polynomial],
) -> Result<RegulousVerdict> {
    let ring = x.ring().extended([name])?;
    let n = ring.nvars();
    let j = x
        .ideal()
        .embed(&ring, &(0..x.nvars()).collect::<Vec<_>>())?
        .with_gens(system.iter().cloned())?;
    let t = Polynomial::var(n, n - 1);
    let mut earlier: Vec<Polynomial> = Vec::new();
    for s in f.strata() {
        let (p, q) = (s.p.extend(n), s.q.extend(n));
        let locus = j.with_gens(earlier.iter().cloned())?;
        let agrees = &q * &(&(&q * &t) - &p);
        match locus.radical_contains(&agrees) {
            Ok(true) => {}
            Ok(false) => {
                return Err(Error::PreconditionFailed(format!(
                    "stratum {} does not satisfy the supplied system",
                    x.ring().display(&s.p)
                )))
            }
            Err(e) if e.is_budget() => return Ok(RegulousVerdict::undecided(e)),
            Err(e) => return Err(e),
        }
        earlier.push(q);
    }
    let tail = j.with_gens(earlier)?;
    match tail.radical_contains(&t) {
        Ok(true) => {}
        Ok(false) => {
            return Err(Error::PreconditionFailed(
                "system does not force the value 0 off every stratum".into(),
            ))
        }
        Err(e) if e.is_budget() => return Ok(RegulousVerdict::undecided(e)),
        Err(e) => return Err(e),
    }
    verdict_from_graph(x, j)
}

/// Coefficients `(u, v)` with `u n + v m = 1` and `0 < u < m`.
pub fn bezout(n: u32, m: u32) -> Option<(i64, i64)> {
    use num_integer::Integer;
    if n == 0 || m == 0 || n.gcd(&m) != 1 {
        return None;
    }
    if m == 1 {
        return Some((0, 1));
    }
    let (n, m) = (n as i64, m as i64);
    let u = (1..m).find(|u| (u * n) % m == 1)?;
    Some((u, (1 - u * n) / m))
}

/// Graph for `f` with `f^n, f^m ∈ C[X]`, `gcd(n, m) = 1`:
/// `b^{-v} t - a^u`, `t^m - b` with `a = f^n`, `b = f^m`.
pub fn check_power_pair(x: &VarietyPresentation, f: &Fraction, n: u32, m: u32) -> Result<RegulousVerdict> {
    let Some((u, v)) = bezout(n, m) else {
        return Err(Error::PreconditionFailed(format!("gcd({n}, {m}) is not 1")));
    };
    let graph = graph_closure(x, f)?;
    let e = ExtensionPresentation::from_ideal(x.clone(), graph)?;
    let nt = e.ring().nvars();
    let t = Polynomial::var(nt, nt - 1);
    let power_in_ring = |k: u32| -> Result<Polynomial> {
        e.base_representative(&t.pow(k))?
            .ok_or_else(|| Error::PreconditionFailed(format!("f^{k} is not in the coordinate ring")))
    };
    let a = power_in_ring(n)?;
    let b = power_in_ring(m)?;
    let (a, b) = (a.extend(nt), b.extend(nt));
    let gens = if m == 1 {
        vec![&t - &b]
    } else {
        vec![&(&b.pow((-v) as u32) * &t) - &a.pow(u as u32), &t.pow(m) - &b]
    };
    let ring = e.ring().clone();
    let lifted = x.ideal().embed(&ring, &(0..x.nvars()).collect::<Vec<_>>())?;
    verdict_from_graph(x, lifted.with_gens(gens)?)
}

/// Classification of a candidate Swan pair `(p, q)`.
#[derive(Clone, Debug)]
pub enum SwanOutcome {
    /// `p^2 - q^3 ∉ I`.
    NotAPair,
    /// The cube root `f = p/q` is the polynomial `h`.
    InRing(Polynomial),
    /// `f = p/q` is regulous but not in `C[X]`: `X` is not seminormal.
    ProperlyRegulous(Ideal),
}

impl SwanOutcome {
    pub fn is_proper(&self) -> bool {
        matches!(self, SwanOutcome::ProperlyRegulous(_))
    }
}

pub fn swan_pair_solve(x: &VarietyPresentation, p: &Polynomial, q: &Polynomial) -> Result<SwanOutcome> {
    if !x.ideal().contains(&(&p.pow(2) - &q.pow(3)))? {
        return Ok(SwanOutcome::NotAPair);
    }
    if x.ideal().contains(q)? {
        // then p^2 ∈ I, so p vanishes on X and so does f
        return Ok(SwanOutcome::InRing(Polynomial::zero(x.nvars())));
    }
    let graph = graph_ideal(x, p, q)?;
    let n = graph.nvars();
    let t = Polynomial::var(n, n - 1);
    let j = graph.with_gens([&t.pow(2) - &q.extend(n)])?;
    let e = ExtensionPresentation::from_ideal(x.clone(), j)?;
    Ok(match e.adjoined_in_base(0)? {
        Some(h) => SwanOutcome::InRing(h),
        None => SwanOutcome::ProperlyRegulous(e.relations().clone()),
    })
}

/// `g ∈ C[X][f] \ C[X]` with `g^2, g^3 ∈ C[X]`.
#[derive(Clone, Debug)]
pub struct ElementaryWitness {
    /// `g` as an element of `Q[x, t]` modulo the graph ideal.
    pub g: Polynomial,
    /// The exponent with `g = F^m`, `F` the normalised function.
    pub m: u32,
    pub square: Polynomial,
    pub cube: Polynomial,
    pub graph: ExtensionPresentation,
}

const WITNESS_POWER_BOUND: u32 = 32;

pub fn elementary_witness(x: &VarietyPresentation, f: &StratifiedFraction) -> Result<ElementaryWitness> {
    let primary = f.primary();
    let verdict = is_regulous(x, primary)?;
    if !verdict.is_regulous() {
        return Err(Error::PreconditionFailed("the fraction is not regulous".into()));
    }
    let e = verdict.graph.clone().expect("regulous verdicts carry the graph");
    if e.adjoined_in_base(0)?.is_some() {
        return Err(Error::PreconditionFailed(
            "f already lies in the coordinate ring".into(),
        ));
    }
    let nt = e.ring().nvars();
    let t = Polynomial::var(nt, nt - 1);
    let in_ring = |h: &Polynomial| -> Result<bool> { Ok(e.base_representative(h)?.is_some()) };

    // normalise: the first stratum whose denominator does not clear f
    let mut big_f = t.clone();
    for s in f.strata() {
        let qt = &s.q.extend(nt) * &t;
        if !in_ring(&qt)? {
            big_f = &qt - &s.p.extend(nt);
            break;
        }
    }
    let d = e.integral_equation(0)?.degree_in(nt - 1);
    let in_conductor = |h: &Polynomial| -> Result<bool> {
        for i in 0..d {
            if !in_ring(&(h * &t.pow(i)))? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut power = big_f.clone();
    for m in 1..=WITNESS_POWER_BOUND {
        let next = &power * &big_f;
        if in_conductor(&next)? && !in_conductor(&power)? {
            let ord = e.elimination_order();
            let g = e.relations().normal_form(&power, &ord)?;
            let square = e.base_representative(&g.pow(2))?;
            let cube = e.base_representative(&g.pow(3))?;
            let (Some(square), Some(cube)) = (square, cube) else {
                break;
            };
            if in_ring(&g)? {
                break;
            }
            return Ok(ElementaryWitness {
                g,
                m,
                square,
                cube,
                graph: e,
            });
        }
        power = next;
    }
    Err(Error::NotFoundWithinBound(WITNESS_POWER_BOUND))
}

/// Restriction of a regulous function on `X` to the subvariety `V`.
pub fn restrict_regulous(x: &VarietyPresentation, v: &VarietyPresentation, f: &Fraction) -> Result<RegulousVerdict> {
    if v.ring() != x.ring() || !v.ideal().contains_ideal(x.ideal())? {
        return Err(Error::Input("V must be a subvariety of X in the same ring".into()));
    }
    let ambient = is_regulous(x, f)?;
    match ambient.verdict {
        Verdict::Regulous => {}
        Verdict::Undecided => return Ok(ambient),
        Verdict::NotRegulous => return Err(Error::NotRegulousOnAmbient),
    }
    if v.ideal().is_nzd(&f.q)? {
        return is_regulous(v, f);
    }
    let graph = ambient.graph_ideal().expect("regulous verdicts carry the graph");
    let n = graph.nvars();
    let jv = graph.with_gens(v.ideal().gens().iter().map(|g| g.extend(n)))?;
    let e = ExtensionPresentation::from_ideal(v.clone(), jv)?;
    let ord = e.elimination_order();
    let tvar = n - 1;
    let (_, keep) = e.ring().without(&[tvar]);
    let gb = e.relations().gb(&ord)?;
    for g in gb.iter().filter(|g| g.degree_in(tvar) == 1) {
        let q2 = g.coefficient_of(tvar, 1).restrict(&keep);
        let p2 = g.coefficient_of(tvar, 0).restrict(&keep);
        if let (Some(q2), Some(p2)) = (q2, p2) {
            if v.ideal().is_nzd(&q2)? {
                return is_regulous(v, &Fraction::new(-p2, q2)?);
            }
        }
    }
    // a monic element t^k + a t^{k-1} + ... whose roots coincide forces t = -a/k
    for g in gb.iter() {
        let k = g.degree_in(tvar);
        if k == 0 || !g.coefficient_of(tvar, k).is_one() {
            continue;
        }
        let Some(a) = g.coefficient_of(tvar, k - 1).restrict(&keep) else {
            continue;
        };
        let h = a.scale(&Rational::new((-1).into(), (k as i64).into()));
        let t = Polynomial::var(n, tvar);
        if e.relations().radical_contains(&(&t - &h.extend(n)))? {
            return is_regulous(v, &Fraction::polynomial(h));
        }
    }
    let mut out = RegulousVerdict::undecided(Error::PreconditionFailed(
        "no usable representative found in the restricted graph basis".into(),
    ));
    out.graph = Some(e);
    Ok(out)
}

/// A polynomial in `t` whose coefficients are `a / f^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedPolynomial {
    /// `(a_j, e_j)` for `j = 0..=degree`, lowest degree first.
    pub coefficients: Vec<(Polynomial, u32)>,
}

impl LocalizedPolynomial {
    pub fn new(coefficients: Vec<(Polynomial, u32)>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Input("empty coefficient list".into()));
        }
        Ok(LocalizedPolynomial { coefficients })
    }

    pub fn degree(&self) -> u32 {
        self.coefficients.len() as u32 - 1
    }

    /// `f^E` times the polynomial, `E` the largest exponent, in `Q[x, t]`.
    fn cleared(&self, f: &Polynomial, nt: usize) -> Polynomial {
        let top = self.coefficients.iter().map(|c| c.1).max().unwrap_or(0);
        let t = Polynomial::var(nt, nt - 1);
        let fe = f.extend(nt);
        let mut acc = Polynomial::zero(nt);
        for (j, (a, e)) in self.coefficients.iter().enumerate() {
            acc = &acc + &(&(&a.extend(nt) * &fe.pow(top - e)) * &t.pow(j as u32));
        }
        acc
    }
}

/// System `P = 0, F_1 = 0, ...` over `D(f)` whose unique solution is `g`;
/// `P` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedSystem {
    pub monic: LocalizedPolynomial,
    pub others: Vec<LocalizedPolynomial>,
}

#[derive(Clone, Debug)]
pub struct PrincipalExtension {
    pub n: u32,
    /// The scaled system, polynomial in `Q[x, t]`.
    pub system: Vec<Polynomial>,
    pub verdict: RegulousVerdict,
}

/// Scales a system describing `g` over `D(f)` into one describing `f^N g`
/// on all of `X`, with `s = f^N` the squared product of all denominators.
/// `f` must be a polynomial.
pub fn extend_from_principal_open(
    x: &VarietyPresentation,
    f: &Polynomial,
    system: &LocalizedSystem,
) -> Result<PrincipalExtension> {
    let lead = system.monic.coefficients.last().unwrap();
    if !lead.0.is_one() || lead.1 != 0 {
        return Err(Error::PreconditionFailed("the first equation must be monic".into()));
    }
    let nt = x.nvars() + 1;
    let ring = x.ring().extended([x.ring().fresh_name("t")])?;
    let base_gens: Vec<Polynomial> = x.ideal().gens().iter().map(|g| g.extend(nt)).collect();

    // uniqueness over D(f): f (t - t') in the radical of the doubled system
    let mut cleared = base_gens.clone();
    cleared.push(system.monic.cleared(f, nt));
    cleared.extend(system.others.iter().map(|s| s.cleared(f, nt)));
    let local = ExtensionPresentation::from_ideal(x.clone(), Ideal::new(ring.clone(), cleared)?)?;
    let doubled = local.doubled()?;
    let dn = doubled.nvars();
    let diff = &Polynomial::var(dn, nt - 1) - &Polynomial::var(dn, nt);
    if !doubled.radical_contains(&(&f.extend(dn) * &diff))? {
        return Err(Error::PreconditionFailed(
            "the system has several solutions over D(f)".into(),
        ));
    }

    let d = system.monic.degree();
    let mut total = 0u32;
    for (_, e) in &system.monic.coefficients[..d as usize] {
        total += e;
    }
    for eq in &system.others {
        total += eq.coefficients.iter().map(|c| c.1).sum::<u32>();
    }
    let n = 2 * total;
    let fe = f.extend(nt);
    let s = fe.pow(n);
    let t = Polynomial::var(nt, nt - 1);
    let mut scaled = Vec::new();
    let mut p = t.pow(d);
    for (k, (a, e)) in system.monic.coefficients[..d as usize].iter().enumerate() {
        let c = &(&fe.pow(n - e) * &a.extend(nt)) * &s.pow(d - 1 - k as u32);
        p = &p + &(&c * &t.pow(k as u32));
    }
    scaled.push(p);
    for eq in &system.others {
        let di = eq.degree();
        let mut acc = Polynomial::zero(nt);
        for (j, (a, e)) in eq.coefficients.iter().enumerate() {
            let c = &(&fe.pow(n - e) * &a.extend(nt)) * &s.pow(di - j as u32);
            acc = &acc + &(&c * &t.pow(j as u32));
        }
        scaled.push(acc);
    }
    let mut gens = base_gens;
    gens.extend(scaled.iter().cloned());
    let verdict = verdict_from_graph(x, Ideal::new(ring, gens)?)?;
    Ok(PrincipalExtension {
        n,
        system: scaled,
        verdict,
    })
}
