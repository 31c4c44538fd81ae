//! Independent oracles for the integration tests: point counting over a
//! prime field and a degree-bounded linear-algebra membership test.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use snk_core::{groebner, Ideal, Monomial, MonomialOrder, Polynomial, Rational, Ring};

pub const P: u64 = 10007;

// ---------- dense univariate polynomials over F_p, lowest degree first ----------

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    trim(&mut r);
    r
}

fn prem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lead = inv(*m.last().unwrap(), p);
    while r.len() >= m.len() {
        let c = r.last().unwrap() * lead % p;
        let shift = r.len() - m.len();
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = prem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&l) = a.last() {
        let li = inv(l, p);
        for c in a.iter_mut() {
            *c = *c * li % p;
        }
    }
    a
}

fn deriv(a: &[u64], p: u64) -> Vec<u64> {
    let mut d: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * (i as u64 % p) % p)
        .collect();
    trim(&mut d);
    d
}

/// `t^p - t` modulo `m`, then the gcd with `m`: the product of the distinct linear factors.
fn split_part(m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = prem(&[0, 1], m, p);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = prem(&pmul(&acc, &base, p), m, p);
        }
        base = prem(&pmul(&base, &base, p), m, p);
        e >>= 1;
    }
    acc.resize(acc.len().max(2), 0);
    acc[1] = (acc[1] + p - 1) % p;
    trim(&mut acc);
    pgcd(m, &acc, p)
}

fn powmod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = prem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = prem(&pmul(&acc, &b, p), m, p);
        }
        b = prem(&pmul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Splits a monic product of distinct linear factors into its roots.
fn split_linear(f: &[u64], p: u64, out: &mut Vec<u64>) {
    match f.len() {
        0 | 1 => {}
        2 => out.push((p - f[0]) % p),
        _ => {
            for delta in 0..p {
                let mut h = powmod_poly(&[delta, 1], (p - 1) / 2, f, p);
                h.resize(h.len().max(1), 0);
                h[0] = (h[0] + p - 1) % p;
                trim(&mut h);
                let g = pgcd(f, &h, p);
                if g.len() > 1 && g.len() < f.len() {
                    let q = pdiv(f, &g, p);
                    split_linear(&g, p, out);
                    split_linear(&q, p, out);
                    return;
                }
            }
            unreachable!("distinct linear factors always split");
        }
    }
}

fn pdiv(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let lead = inv(*m.last().unwrap(), p);
    let mut q = vec![0; r.len() + 1 - m.len()];
    while r.len() >= m.len() {
        let c = r.last().unwrap() * lead % p;
        let shift = r.len() - m.len();
        q[shift] = c;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    q
}

/// Roots in F_p of a nonzero polynomial.
fn roots(m: &[u64], p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    split_linear(&split_part(m, p), p, &mut out);
    out.sort_unstable();
    out
}

/// Number of distinct roots over the algebraic closure; `None` for the zero polynomial.
fn distinct_roots(a: &[u64], p: u64) -> Option<usize> {
    if a.is_empty() {
        return None;
    }
    let g = pgcd(a, &deriv(a, p), p);
    Some(a.len() - g.len())
}

// ---------- reduction of rational polynomials modulo p ----------

/// Coefficients reduced mod `p`; `None` when a denominator vanishes mod `p`.
pub fn reduce(f: &Polynomial, p: u64) -> Option<Vec<(Vec<u32>, u64)>> {
    let pb = BigInt::from(p);
    f.terms()
        .iter()
        .map(|(m, c)| {
            let num = c.numer().mod_floor(&pb).to_u64().unwrap();
            let den = c.denom().mod_floor(&pb).to_u64().unwrap();
            (den != 0).then(|| (m.exponents().to_vec(), num * inv(den, p) % p))
        })
        .collect()
}

/// Specialises all variables except `free` and returns a univariate polynomial in it.
fn specialise(f: &[(Vec<u32>, u64)], point: &[u64], free: usize, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for (e, c) in f {
        let mut v = *c;
        for (i, &k) in e.iter().enumerate() {
            if i != free {
                v = v * powmod(point[i], k as u64, p) % p;
            }
        }
        let d = e[free] as usize;
        if out.len() <= d {
            out.resize(d + 1, 0);
        }
        out[d] = (out[d] + v) % p;
    }
    trim(&mut out);
    out
}

/// Outcome of counting fibres of `V(graph) -> V(curve)` over F_p points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberCount {
    pub points: usize,
    pub bad_fibers: usize,
}

impl FiberCount {
    pub fn bijective(&self) -> bool {
        self.bad_fibers == 0
    }
}

/// Counts, for each point `(a, b)` of the plane curve `curve = 0` over F_p,
/// the distinct roots over the algebraic closure of the fibre of the graph
/// (variables `x, y, t`). `None` signals a bad prime.
pub fn fiber_count(curve: &Polynomial, graph: &[Polynomial], p: u64) -> Option<FiberCount> {
    assert_eq!(curve.nvars(), 2);
    let c = reduce(curve, p)?;
    let g: Vec<_> = graph.iter().map(|h| reduce(h, p)).collect::<Option<_>>()?;
    if c.is_empty() || g.iter().all(|h| h.is_empty()) {
        return None;
    }
    let mut count = FiberCount {
        points: 0,
        bad_fibers: 0,
    };
    for a in 0..p {
        let fy = specialise(&c, &[a, 0], 1, p);
        let ys: Vec<u64> = if fy.is_empty() { (0..p).collect() } else { roots(&fy, p) };
        for b in ys {
            count.points += 1;
            let mut fibre = Vec::new();
            for h in &g {
                fibre = pgcd(&fibre, &specialise(h, &[a, b, 0], 2, p), p);
            }
            // an identically zero fibre is a positive-dimensional one
            if distinct_roots(&fibre, p) != Some(1) {
                count.bad_fibers += 1;
            }
        }
    }
    Some(count)
}

pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| n > 1 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Fibre count at the first good prime `>= P`.
pub fn fiber_count_retrying(curve: &Polynomial, graph: &[Polynomial]) -> (u64, FiberCount) {
    primes_from(P)
        .take(20)
        .find_map(|p| fiber_count(curve, graph, p).map(|c| (p, c)))
        .expect("some prime is good")
}

// ---------- linear-algebra membership ----------

pub fn monomials_up_to(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == nvars {
            out.push(Monomial::from_exponents(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Whether `f` is a combination `Σ m_j g_i` with every product of degree `<= bound`.
pub fn bounded_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    if f.total_degree() > bound {
        return false;
    }
    let n = f.nvars();
    let monos = monomials_up_to(n, bound);
    let index = |m: &Monomial| monos.iter().position(|x| x == m).unwrap();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree();
        if dg > bound {
            continue;
        }
        for m in monomials_up_to(n, bound - dg) {
            let mut row = vec![Rational::zero(); monos.len()];
            for (gm, c) in g.terms() {
                row[index(&gm.mul(&m))] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank_without = rank(rows.clone());
    let mut target = vec![Rational::zero(); monos.len()];
    for (m, c) in f.terms() {
        target[index(m)] = c.clone();
    }
    rows.push(target);
    rank(rows) == rank_without
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let lead = rows[r][col].clone();
        let pivot: Vec<Rational> = rows[r].iter().map(|x| x / &lead).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let k = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x -= &k * y;
                    }
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

// ---------- random inputs ----------

/// Random polynomial of total degree `<= degree` with small integer coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, degree: u32, terms: usize) -> Polynomial {
    let monos = monomials_up_to(nvars, degree);
    let mut out = Vec::new();
    for _ in 0..terms {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        let c: i64 = rng.gen_range(-3..=3);
        out.push((m, Rational::from_integer(c.into())));
    }
    Polynomial::from_unsorted(nvars, out)
}

/// Random homogeneous polynomial of the given degree.
pub fn random_form(rng: &mut ChaCha8Rng, nvars: usize, degree: u32, terms: usize) -> Polynomial {
    let monos: Vec<Monomial> = monomials_up_to(nvars, degree)
        .into_iter()
        .filter(|m| m.degree() == degree)
        .collect();
    let mut out = Vec::new();
    for _ in 0..terms {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        let c: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        out.push((m, Rational::from_integer(c.into())));
    }
    Polynomial::from_unsorted(nvars, out)
}

/// Random instances: generators of degree <= 3 in at most three variables.
pub fn instance(rng: &mut ChaCha8Rng, homogeneous: bool) -> (Ring, Vec<Polynomial>, Vec<Polynomial>) {
    let n = rng.gen_range(1..=3);
    let ring = Ring::new(["x", "y", "z"].into_iter().take(n)).unwrap();
    let k = rng.gen_range(1..=n.min(2));
    let gens: Vec<Polynomial> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            if homogeneous {
                random_form(rng, n, d, 3)
            } else {
                random_poly(rng, n, d, 3)
            }
        })
        .filter(|g| !g.is_zero())
        .collect();
    let mut probes = Vec::new();
    // members by construction
    for _ in 0..2 {
        let mut f = Polynomial::zero(n);
        for g in &gens {
            let slack = 6 - g.total_degree();
            let h = if homogeneous {
                random_form(rng, n, slack.min(2), 2)
            } else {
                random_poly(rng, n, slack.min(2), 2)
            };
            f = &f + &(&h * g);
        }
        probes.push(f);
    }
    // arbitrary polynomials, mostly non-members
    for _ in 0..2 {
        let d = rng.gen_range(0..=3);
        probes.push(if homogeneous {
            random_form(rng, n, d, 3)
        } else {
            random_poly(rng, n, d, 3)
        });
    }
    (ring, gens, probes)
}

/// Returns (probes checked, probes in the ideal, disagreements).
pub fn random_membership_agreement(count: usize, seed: u64) -> (usize, usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0;
    let mut checked = 0;
    let mut members = 0;
    for i in 0..count {
        let (ring, gens, probes) = instance(&mut rng, i % 2 == 0);
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(ring, gens.clone()).unwrap();
        let ord = MonomialOrder::grevlex();
        let gb = groebner(&gens, &ord).unwrap();
        assert_eq!(groebner(&gb, &ord).unwrap(), gb);
        for f in &probes {
            checked += 1;
            let inside = ideal.contains(f).unwrap();
            members += inside as usize;
            if inside != bounded_member(f, &gens, 6) {
                disagreements += 1;
            }
        }
    }
    (checked, members, disagreements)
}
