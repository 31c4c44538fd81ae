//! Presentations of affine varieties and of finite extensions of their
//! coordinate rings, with the closed-point tests for finiteness,
//! injectivity and subintegrality.

use crate::ideal::{groebner_tracked, Ideal};
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// An affine variety `X = Z(I)`, with `I` assumed radical.
#[derive(Clone, Debug)]
pub struct VarietyPresentation {
    ideal: Ideal,
    components: Option<Vec<Ideal>>,
}

impl VarietyPresentation {
    pub fn new(ideal: Ideal) -> Result<Self> {
        if ideal.is_unit()? {
            return Err(Error::Input("defining ideal is the unit ideal".into()));
        }
        Ok(VarietyPresentation {
            ideal,
            components: None,
        })
    }

    /// Shorthand for `new(Ideal::parse(..))` on a fresh ring.
    pub fn parse(vars: &[&str], gens: &[&str]) -> Result<Self> {
        let ring = Ring::new(vars.iter().copied())?;
        VarietyPresentation::new(Ideal::parse(&ring, gens)?)
    }

    /// Attaches a component list; their intersection must be radical-equal to `I`.
    pub fn with_components(self, components: Vec<Ideal>) -> Result<Self> {
        let mut meet = Ideal::unit(self.ring().clone());
        for c in &components {
            if c.ring() != self.ring() {
                return Err(Error::Input("component lives in another ring".into()));
            }
            meet = meet.intersect(c)?;
        }
        if !meet.equal_radical(&self.ideal)? {
            return Err(Error::Input("components do not intersect to the defining ideal".into()));
        }
        Ok(VarietyPresentation {
            components: Some(components),
            ..self
        })
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn components(&self) -> Option<&[Ideal]> {
        self.components.as_deref()
    }

    pub fn parse_poly(&self, src: &str) -> Result<Polynomial> {
        self.ring().parse(src)
    }

    /// `f` vanishes on `X` (equivalently `f ∈ I`, as `I` is radical).
    pub fn vanishes(&self, f: &Polynomial) -> Result<bool> {
        self.ideal.contains(f)
    }

    /// The subvariety cut out by the extra equations.
    pub fn subvariety(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        VarietyPresentation::new(self.ideal.with_gens(extra)?)
    }
}

/// `C[X] -> C[X][t_1..t_m] = C[x, t]/J`, the adjoined variables placed after the base ones.
#[derive(Clone, Debug)]
pub struct ExtensionPresentation {
    base: VarietyPresentation,
    relations: Ideal,
}

impl ExtensionPresentation {
    /// `relations` live in the base ring extended by `adjoined`; the
    /// generators of `I` are added automatically.
    pub fn new<S: Into<String>>(
        base: VarietyPresentation,
        adjoined: impl IntoIterator<Item = S>,
        relations: Vec<Polynomial>,
    ) -> Result<Self> {
        let ring = base.ring().extended(adjoined)?;
        let n = ring.nvars();
        let mut gens: Vec<Polynomial> = base.ideal().gens().iter().map(|g| g.extend(n)).collect();
        gens.extend(relations);
        let relations = Ideal::new(ring, gens)?;
        Ok(ExtensionPresentation { base, relations })
    }

    /// Parses relations written over the extended ring.
    pub fn parse(base: VarietyPresentation, adjoined: &[&str], relations: &[&str]) -> Result<Self> {
        let ring = base.ring().extended(adjoined.iter().copied())?;
        let rels = relations.iter().map(|r| ring.parse(r)).collect::<Result<Vec<_>>>()?;
        ExtensionPresentation::new(base, adjoined.iter().copied(), rels)
    }

    /// Wraps an ideal already living in the extended ring.
    pub fn from_ideal(base: VarietyPresentation, relations: Ideal) -> Result<Self> {
        let n = base.nvars();
        if relations.nvars() < n || relations.ring().vars()[..n] != base.ring().vars()[..] {
            return Err(Error::Input(
                "relation ring does not start with the base variables".into(),
            ));
        }
        let extra = base.ideal().gens().iter().map(|g| g.extend(relations.nvars()));
        let relations = relations.with_gens(extra)?;
        Ok(ExtensionPresentation { base, relations })
    }

    /// The extension with nothing adjoined.
    pub fn identity(base: VarietyPresentation) -> Self {
        let relations = base.ideal().clone();
        ExtensionPresentation { base, relations }
    }

    pub fn base(&self) -> &VarietyPresentation {
        &self.base
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    pub fn base_nvars(&self) -> usize {
        self.base.nvars()
    }

    /// Indices of the adjoined variables in `ring()`.
    pub fn adjoined(&self) -> Vec<usize> {
        (self.base.nvars()..self.relations.nvars()).collect()
    }

    pub fn adjoined_names(&self) -> &[String] {
        &self.ring().vars()[self.base.nvars()..]
    }

    /// Formats with adjoined variables leading.
    pub fn format(&self, p: &Polynomial) -> String {
        self.ring().format_in(p, &self.elimination_order())
    }

    /// Block order with the adjoined variables above the base ones.
    pub fn elimination_order(&self) -> MonomialOrder {
        MonomialOrder::block(&self.adjoined())
    }

    /// The presentation viewed as a variety in its own right.
    pub fn as_variety(&self) -> Result<VarietyPresentation> {
        VarietyPresentation::new(self.relations.clone())
    }

    /// Same extension with the adjoined variables renamed.
    pub fn renamed<S: Into<String>>(&self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let ring = self.base.ring().extended(names)?;
        if ring.nvars() != self.relations.nvars() {
            return Err(Error::Input("wrong number of names".into()));
        }
        let relations = Ideal::new(ring, self.relations.gens().to_vec())?;
        Ok(ExtensionPresentation {
            base: self.base.clone(),
            relations,
        })
    }

    /// Every adjoined `t_i` is the leading variable of a pure power `t_i^k`
    /// in the eliminating Groebner basis.
    pub fn is_finite(&self) -> Result<bool> {
        let gb = self.relations.gb(&self.elimination_order())?;
        Ok(self
            .adjoined()
            .into_iter()
            .all(|i| pure_power_element(&gb, i, &self.elimination_order()).is_some()))
    }

    /// Monic relation for `t_i` of least degree found in the eliminating basis.
    /// `i` counts adjoined variables from zero.
    pub fn integral_equation(&self, i: usize) -> Result<Polynomial> {
        let var = self.adjoined_var(i)?;
        let ord = self.elimination_order();
        let gb = self.relations.gb(&ord)?;
        pure_power_element(&gb, var, &ord).ok_or(Error::NotFinite)
    }

    fn adjoined_var(&self, i: usize) -> Result<usize> {
        let var = self.base.nvars() + i;
        if var >= self.relations.nvars() {
            return Err(Error::Input(format!("no adjoined variable with index {i}")));
        }
        Ok(var)
    }

    /// Closed-point injectivity of `Y -> X`: each `t_i - t_i'` lies in the
    /// radical of `J + J'`.
    pub fn fiber_injective(&self) -> Result<InjectivityReport> {
        let doubled = self.doubled()?;
        let n = self.relations.nvars();
        let mut checks = Vec::new();
        for (k, i) in self.adjoined().into_iter().enumerate() {
            let diff = &Polynomial::var(doubled.nvars(), i) - &Polynomial::var(doubled.nvars(), n + k);
            let rab = doubled.rabinowitsch(&diff)?;
            let unit = rab.is_unit()?;
            checks.push(RadicalCheck {
                ideal: rab,
                target: diff,
                holds: unit,
            });
        }
        Ok(InjectivityReport { checks })
    }

    /// `J + J'` in `Q[x, t, t']`, primed copies named `<t>_`.
    pub fn doubled(&self) -> Result<Ideal> {
        let ring = self.ring();
        let n = ring.nvars();
        let m = n - self.base.nvars();
        let mut names: Vec<String> = Vec::with_capacity(m);
        let mut scratch = ring.clone();
        for name in self.adjoined_names() {
            let fresh = scratch.fresh_name(&format!("{name}_"));
            scratch = scratch.extended([fresh.clone()])?;
            names.push(fresh);
        }
        let big = ring.extended(names)?;
        let total = big.nvars();
        let primed: Vec<usize> = (0..n).map(|v| if v < self.base.nvars() { v } else { v + m }).collect();
        let mut gens: Vec<Polynomial> = self.relations.gens().iter().map(|g| g.extend(total)).collect();
        gens.extend(
            self.relations
                .gens()
                .iter()
                .filter(|g| self.adjoined().iter().any(|&t| g.involves(t)))
                .map(|g| g.remap(total, &primed)),
        );
        Ideal::new(big, gens)
    }

    /// `J ∩ Q[x]`, returned in the base ring.
    pub fn image_ideal(&self) -> Result<Ideal> {
        self.relations.eliminate(&self.adjoined())
    }

    /// The elimination ideal agrees with `I` up to radical.
    pub fn is_dominant(&self) -> Result<bool> {
        self.image_ideal()?.equal_radical(self.base.ideal())
    }

    pub fn is_subintegral(&self) -> Result<bool> {
        Ok(self.subintegral_report()?.holds())
    }

    /// The three checks behind [`is_subintegral`](Self::is_subintegral).
    /// Injectivity is only examined once finiteness holds.
    pub fn subintegral_report(&self) -> Result<SubintegralReport> {
        if self.adjoined().is_empty() {
            return Ok(SubintegralReport {
                finite: true,
                injectivity: Some(InjectivityReport { checks: Vec::new() }),
                dominant: true,
            });
        }
        let finite = self.is_finite()?;
        let injectivity = if finite { Some(self.fiber_injective()?) } else { None };
        let dominant = self.is_dominant()?;
        Ok(SubintegralReport {
            finite,
            injectivity,
            dominant,
        })
    }

    /// `h` is the image of an element of `Q[x]`: the normal form of `h` in
    /// the eliminating basis is free of adjoined variables.
    pub fn base_representative(&self, h: &Polynomial) -> Result<Option<Polynomial>> {
        let ord = self.elimination_order();
        let nf = self.relations.normal_form(h, &ord)?;
        let (_, keep) = self.ring().without(&self.adjoined());
        Ok(nf.restrict(&keep))
    }

    /// For the adjoined variable `t_i`, the polynomial `h(x)` with
    /// `t_i - h ∈ J`, if `t_i` already lies in `C[X]`.
    pub fn adjoined_in_base(&self, i: usize) -> Result<Option<Polynomial>> {
        let var = self.adjoined_var(i)?;
        let t = Polynomial::var(self.relations.nvars(), var);
        self.base_representative(&t)
    }
}

/// A radical-membership test `target ∈ √J` decided by `1 ∈ J + <1 - z target>`.
#[derive(Clone, Debug)]
pub struct RadicalCheck {
    pub ideal: Ideal,
    pub target: Polynomial,
    pub holds: bool,
}

impl RadicalCheck {
    /// Cofactors writing `1` in the generators of `ideal`, when the check holds.
    pub fn unit_cofactors(&self) -> Result<Option<Vec<Polynomial>>> {
        if !self.holds {
            return Ok(None);
        }
        let ord = MonomialOrder::grevlex();
        let tb = groebner_tracked(self.ideal.gens(), &ord)?;
        Ok(tb.cofactors(&Polynomial::one(self.ideal.nvars()), &ord))
    }
}

#[derive(Clone, Debug)]
pub struct InjectivityReport {
    pub checks: Vec<RadicalCheck>,
}

impl InjectivityReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    /// Indices of adjoined variables that separate points in some fiber.
    pub fn failures(&self) -> Vec<usize> {
        (0..self.checks.len()).filter(|&k| !self.checks[k].holds).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SubintegralReport {
    pub finite: bool,
    pub injectivity: Option<InjectivityReport>,
    pub dominant: bool,
}

impl SubintegralReport {
    pub fn injective(&self) -> bool {
        self.injectivity.as_ref().is_some_and(InjectivityReport::holds)
    }

    pub fn holds(&self) -> bool {
        self.finite && self.injective() && self.dominant
    }
}

fn pure_power_element(gb: &[Polynomial], var: usize, ord: &MonomialOrder) -> Option<Polynomial> {
    gb.iter()
        .filter(|g| {
            g.leading_monomial(ord)
                .is_some_and(|m| m.exp(var) > 0 && m.degree() == m.exp(var))
        })
        .min_by_key(|g| g.leading_monomial(ord).unwrap().degree())
        .cloned()
}

/// Zariski closure of the graph of `p/q` in `X × A^1`, with the new
/// variable appended under the name `t` (or a fresh variant of it).
///
/// When `q` is a zero-divisor the component list decides: components on
/// which `q` vanishes contribute `C × {t = 0}`.
pub fn graph_ideal(x: &VarietyPresentation, p: &Polynomial, q: &Polynomial) -> Result<Ideal> {
    let name = x.ring().fresh_name("t");
    graph_ideal_named(x, p, q, &name)
}

pub fn graph_ideal_named(x: &VarietyPresentation, p: &Polynomial, q: &Polynomial, name: &str) -> Result<Ideal> {
    if q.is_zero() {
        return Err(Error::Input("zero denominator".into()));
    }
    if x.ideal().is_nzd(q)? {
        return closure_on(x.ideal(), p, q, name);
    }
    let Some(components) = x.components() else {
        return Err(Error::ReducibleAmbiguity);
    };
    let ring = x.ring().extended([name])?;
    let n = ring.nvars();
    let mut acc = Ideal::unit(ring.clone());
    for c in components {
        let piece = if c.contains(q)? {
            let mut gens: Vec<Polynomial> = c.gens().iter().map(|g| g.extend(n)).collect();
            gens.push(Polynomial::var(n, n - 1));
            Ideal::new(ring.clone(), gens)?
        } else if c.is_nzd(q)? {
            closure_on(c, p, q, name)?
        } else {
            return Err(Error::ReducibleAmbiguity);
        };
        acc = acc.intersect(&piece)?;
    }
    Ok(acc)
}

fn closure_on(i: &Ideal, p: &Polynomial, q: &Polynomial, name: &str) -> Result<Ideal> {
    let ring = i.ring().extended([name])?;
    let n = ring.nvars();
    let t = Polynomial::var(n, n - 1);
    let (pe, qe) = (p.extend(n), q.extend(n));
    let mut gens: Vec<Polynomial> = i.gens().iter().map(|g| g.extend(n)).collect();
    gens.push(&(&qe * &t) - &pe);
    let aff = Ideal::new(ring, gens)?;
    if q.is_unit() {
        return Ok(aff);
    }
    aff.saturate(&qe)
}

/// `Cond(p/q) = ∩_{i<d} ((<q^i> + I) : p^i)`, an ideal of the base ring
/// containing `I`.
pub fn conductor(x: &VarietyPresentation, p: &Polynomial, q: &Polynomial, d: usize) -> Result<Ideal> {
    if !x.ideal().is_nzd(q)? {
        return Err(Error::PreconditionFailed("denominator is a zero-divisor".into()));
    }
    let graph = ExtensionPresentation::from_ideal(x.clone(), graph_ideal(x, p, q)?)?;
    match graph.integral_equation(0) {
        Ok(eq) if (eq.degree_in(x.nvars()) as usize) <= d => {}
        Ok(_) | Err(Error::NotFinite) => return Err(Error::NotIntegral(d)),
        Err(e) => return Err(e),
    }
    let mut acc = Ideal::unit(x.ring().clone());
    for i in 1..d.max(1) {
        let qi = x.ideal().with_gens([q.pow(i as u32)])?;
        acc = acc.intersect(&qi.quotient(&p.pow(i as u32))?)?;
    }
    acc.with_gens(x.ideal().gens().iter().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp_graph() -> ExtensionPresentation {
        let x = VarietyPresentation::parse(&["x", "y"], &["y^2 - x^3"]).unwrap();
        ExtensionPresentation::parse(x, &["t"], &["x*t - y", "t^2 - x"]).unwrap()
    }

    #[test]
    fn finiteness() {
        assert!(cusp_graph().is_finite().unwrap());
        let a1 = VarietyPresentation::parse(&["x"], &[]).unwrap();
        let loc = ExtensionPresentation::parse(a1.clone(), &["t"], &["x*t - 1"]).unwrap();
        assert!(!loc.is_finite().unwrap());
        assert_eq!(loc.integral_equation(0).unwrap_err(), Error::NotFinite);
        let poly = ExtensionPresentation::parse(a1, &["t"], &["t - x^2"]).unwrap();
        assert!(poly.is_finite().unwrap());
    }

    #[test]
    fn integral_equations() {
        let e = cusp_graph();
        assert_eq!(e.format(&e.integral_equation(0).unwrap()), "t^2 - x");

        let lines = VarietyPresentation::parse(&["x", "y"], &["x*y*(y - x)"]).unwrap();
        let (p, q) = (lines.parse_poly("2*x*y").unwrap(), lines.parse_poly("x + y").unwrap());
        let g = ExtensionPresentation::from_ideal(lines.clone(), graph_ideal(&lines, &p, &q).unwrap()).unwrap();
        assert_eq!(g.format(&g.integral_equation(0).unwrap()), "t^2 - x*y");

        let a1 = VarietyPresentation::parse(&["x"], &[]).unwrap();
        let e = ExtensionPresentation::parse(a1, &["t"], &["t - x^3 - 1"]).unwrap();
        assert_eq!(e.format(&e.integral_equation(0).unwrap()), "t - x^3 - 1");
    }

    #[test]
    fn injectivity() {
        let rep = cusp_graph().fiber_injective().unwrap();
        assert!(rep.holds());
        let cof = rep.checks[0].unit_cofactors().unwrap().unwrap();
        let ideal = &rep.checks[0].ideal;
        let mut sum = Polynomial::zero(ideal.nvars());
        for (c, g) in cof.iter().zip(ideal.gens()) {
            sum = &sum + &(c * g);
        }
        assert!(sum.is_one());

        let sextic = VarietyPresentation::parse(&["x", "y"], &["y^2 + (x^2 - 1)*x^4"]).unwrap();
        let (p, q) = (sextic.parse_poly("y").unwrap(), sextic.parse_poly("x^2").unwrap());
        let e = ExtensionPresentation::from_ideal(sextic.clone(), graph_ideal(&sextic, &p, &q).unwrap()).unwrap();
        let rep = e.fiber_injective().unwrap();
        assert!(!rep.holds());
        assert_eq!(rep.failures(), vec![0]);

        let a1 = VarietyPresentation::parse(&["x"], &[]).unwrap();
        let e = ExtensionPresentation::parse(a1, &["t"], &["t - x^2 + 3"]).unwrap();
        assert!(e.fiber_injective().unwrap().holds());
    }

    #[test]
    fn injectivity_ignores_names() {
        let e = cusp_graph();
        let r = e.renamed(["u"]).unwrap();
        assert_eq!(r.adjoined_names(), &["u".to_string()]);
        assert!(r.fiber_injective().unwrap().holds());
    }

    #[test]
    fn subintegrality() {
        assert!(cusp_graph().is_subintegral().unwrap());

        let node = VarietyPresentation::parse(&["x", "y"], &["y^2 - x^2*(x + 1)"]).unwrap();
        let (p, q) = (node.parse_poly("y").unwrap(), node.parse_poly("x").unwrap());
        let e = ExtensionPresentation::from_ideal(node.clone(), graph_ideal(&node, &p, &q).unwrap()).unwrap();
        let t = Polynomial::var(3, 2);
        assert!(e
            .relations()
            .contains(&(&t.pow(2) - &e.ring().parse("x + 1").unwrap()))
            .unwrap());
        let rep = e.subintegral_report().unwrap();
        assert!(rep.finite && rep.dominant && !rep.injective());

        assert!(ExtensionPresentation::identity(node).is_subintegral().unwrap());
    }

    #[test]
    fn subintegrality_is_transitive_on_cusp_chain() {
        // C[x,y]/(y^2 - x^3) -> C[X][t] -> C[X][t][s] with s = t^2 (already present)
        let base = cusp_graph();
        let mid = base.as_variety().unwrap();
        let top = ExtensionPresentation::parse(mid, &["s"], &["s - t^2"]).unwrap();
        assert!(top.is_subintegral().unwrap());
        let whole = ExtensionPresentation::from_ideal(base.base().clone(), top.relations().clone()).unwrap();
        assert!(whole.is_subintegral().unwrap());
    }

    #[test]
    fn non_dominant_extension_is_rejected() {
        let a1 = VarietyPresentation::parse(&["x"], &[]).unwrap();
        let e = ExtensionPresentation::parse(a1, &["t"], &["t^2", "x"]).unwrap();
        let rep = e.subintegral_report().unwrap();
        assert!(rep.finite && !rep.dominant);
    }

    #[test]
    fn conductors() {
        let cusp = VarietyPresentation::parse(&["x", "y"], &["y^2 - x^3"]).unwrap();
        let (p, q) = (cusp.parse_poly("y").unwrap(), cusp.parse_poly("x").unwrap());
        let c = conductor(&cusp, &p, &q, 2).unwrap();
        let expected = cusp.ideal().with_gens([p.clone(), q.clone()]).unwrap();
        assert!(c.equal_radical(&expected).unwrap());
        assert!(!c.is_unit().unwrap());
        // a f^i in C[X] for every generator
        for g in c.gens() {
            assert!(cusp
                .ideal()
                .with_gens([q.clone()])
                .unwrap()
                .contains(&(g * &p))
                .unwrap());
        }

        let one = cusp.ring().one();
        assert!(conductor(&cusp, &p, &one, 1).unwrap().is_unit().unwrap());

        let lines = VarietyPresentation::parse(&["x", "y"], &["x*y*(y - x)"]).unwrap();
        let (p, q) = (lines.parse_poly("2*x*y").unwrap(), lines.parse_poly("x + y").unwrap());
        let c = conductor(&lines, &p, &q, 2).unwrap();
        assert!(c.contains(&q).unwrap());
        assert!(c.contains(&lines.parse_poly("x*y").unwrap()).unwrap());
        assert!(!c.contains(&one).unwrap());
    }

    #[test]
    fn conductor_requires_integrality() {
        let a1 = VarietyPresentation::parse(&["x"], &[]).unwrap();
        let (p, q) = (a1.ring().one(), a1.parse_poly("x").unwrap());
        assert_eq!(conductor(&a1, &p, &q, 3).unwrap_err(), Error::NotIntegral(3));
    }

    #[test]
    fn zero_extension_on_components() {
        let r = Ring::new(["x", "y"]).unwrap();
        let x = VarietyPresentation::new(Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        let (p, q) = (r.parse("y").unwrap(), r.parse("x").unwrap());
        assert_eq!(graph_ideal(&x, &p, &q).unwrap_err(), Error::ReducibleAmbiguity);
        let comps = vec![Ideal::parse(&r, &["x"]).unwrap(), Ideal::parse(&r, &["y"]).unwrap()];
        let x = x.with_components(comps).unwrap();
        let g = graph_ideal(&x, &p, &q).unwrap();
        // y/x vanishes on the y = 0 line and is 0 on x = 0 by convention
        let t = g.ring().var("t").unwrap();
        assert!(g.contains(&t).unwrap());
    }

    #[test]
    fn polynomial_graph_is_plain() {
        let cusp = VarietyPresentation::parse(&["x", "y"], &["y^2 - x^3"]).unwrap();
        let p = cusp.parse_poly("x*y + 1").unwrap();
        let g = graph_ideal(&cusp, &p, &cusp.ring().one()).unwrap();
        let e = ExtensionPresentation::from_ideal(cusp, g).unwrap();
        assert_eq!(e.adjoined_in_base(0).unwrap(), Some(p));
    }
}
