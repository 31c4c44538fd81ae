//! Certificate files: a schema-versioned, line-oriented record of a run
//! that a separate pass can re-check by polynomial division alone.

use snk_core::{MonomialOrder, Polynomial, Ring};

use crate::problem::Task;
use crate::CliError;

pub const SCHEMA: &str = "snk-certificate 1";

/// Term orders that can be written into a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Lex,
    Grevlex,
    /// Elimination order for the named variables.
    Block(Vec<String>),
}

impl OrderSpec {
    pub fn resolve(&self, ring: &Ring) -> Result<MonomialOrder, CliError> {
        Ok(match self {
            OrderSpec::Lex => MonomialOrder::lex(),
            OrderSpec::Grevlex => MonomialOrder::grevlex(),
            OrderSpec::Block(names) => {
                let idx = names
                    .iter()
                    .map(|n| {
                        ring.index_of(n)
                            .ok_or_else(|| CliError::Certificate(format!("order names unknown variable `{n}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                MonomialOrder::block(&idx)
            }
        })
    }

    fn emit(&self) -> String {
        match self {
            OrderSpec::Lex => "lex".into(),
            OrderSpec::Grevlex => "grevlex".into(),
            OrderSpec::Block(names) => format!("block {}", names.join(", ")),
        }
    }

    fn parse(src: &str) -> Result<Self, CliError> {
        match src {
            "lex" => Ok(OrderSpec::Lex),
            "grevlex" => Ok(OrderSpec::Grevlex),
            _ => match src.strip_prefix("block ") {
                Some(rest) => Ok(OrderSpec::Block(
                    rest.split(',').map(|s| s.trim().to_string()).collect(),
                )),
                None => Err(CliError::Certificate(format!("unknown order `{src}`"))),
            },
        }
    }
}

/// `basis` is a Groebner basis of `<gens>` and `basis[k] = Σ rows[k][i] gens[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisClaim {
    pub label: String,
    pub ring: Ring,
    pub order: OrderSpec,
    pub gens: Vec<Polynomial>,
    pub basis: Vec<Polynomial>,
    pub rows: Vec<Vec<Polynomial>>,
}

/// `target^power = Σ cofactors[i] gens[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityClaim {
    pub label: String,
    pub ring: Ring,
    pub target: Polynomial,
    pub power: u32,
    pub gens: Vec<Polynomial>,
    pub cofactors: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    Basis(BasisClaim),
    Identity(IdentityClaim),
}

impl Claim {
    pub fn label(&self) -> &str {
        match self {
            Claim::Basis(b) => &b.label,
            Claim::Identity(i) => &i.label,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BudgetLine {
    pub limit: u64,
    pub pairs: u64,
    pub bases: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub engine: String,
    pub timestamp: u64,
    pub task: Task,
    pub verdict: String,
    pub budget: BudgetLine,
    /// Canonical problem text.
    pub problem: String,
    pub results: Vec<(String, String)>,
    pub claims: Vec<Claim>,
}

fn polys_block(out: &mut String, key: &str, ring: &Ring, ps: &[Polynomial]) {
    out.push_str(&format!("{key}: {}\n", ps.len()));
    for p in ps {
        out.push_str(&ring.format(p));
        out.push('\n');
    }
}

impl Certificate {
    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(SCHEMA);
        out.push('\n');
        out.push_str(&format!("engine: {}\n", self.engine));
        out.push_str(&format!("timestamp: {}\n", self.timestamp));
        out.push_str(&format!("task: {}\n", self.task));
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out.push_str(&format!(
            "budget: limit {}, pairs {}, bases {}\n",
            self.budget.limit, self.budget.pairs, self.budget.bases
        ));
        out.push_str("begin problem\n");
        for line in self.problem.lines() {
            out.push('|');
            if !line.is_empty() {
                out.push(' ');
                out.push_str(line);
            }
            out.push('\n');
        }
        out.push_str("end problem\nbegin result\n");
        for (k, v) in &self.results {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str("end result\n");
        for claim in &self.claims {
            match claim {
                Claim::Basis(b) => {
                    out.push_str(&format!("begin basis {}\n", b.label));
                    out.push_str(&format!("ring: {}\n", b.ring.vars().join(", ")));
                    out.push_str(&format!("order: {}\n", b.order.emit()));
                    polys_block(&mut out, "gens", &b.ring, &b.gens);
                    polys_block(&mut out, "basis", &b.ring, &b.basis);
                    out.push_str(&format!("rows: {}\n", b.rows.len()));
                    for row in &b.rows {
                        let cells: Vec<String> = row.iter().map(|p| b.ring.format(p)).collect();
                        out.push_str(&cells.join(" ; "));
                        out.push('\n');
                    }
                    out.push_str("end basis\n");
                }
                Claim::Identity(i) => {
                    out.push_str(&format!("begin identity {}\n", i.label));
                    out.push_str(&format!("ring: {}\n", i.ring.vars().join(", ")));
                    out.push_str(&format!("target: {}\n", i.ring.format(&i.target)));
                    out.push_str(&format!("power: {}\n", i.power));
                    polys_block(&mut out, "gens", &i.ring, &i.gens);
                    polys_block(&mut out, "cofactors", &i.ring, &i.cofactors);
                    out.push_str("end identity\n");
                }
            }
        }
        out.push_str("end certificate\n");
        out
    }

    pub fn parse(src: &str) -> Result<Certificate, CliError> {
        let mut r = Reader {
            lines: src.lines().collect(),
            pos: 0,
        };
        r.exact(SCHEMA)?;
        let engine = r.field("engine")?.to_string();
        let timestamp = r.number("timestamp")?;
        let task: Task = r.field("task")?.parse().map_err(|m| r.error(m))?;
        let verdict = r.field("verdict")?.to_string();
        let budget = {
            let b = r.field("budget")?;
            let nums: Vec<u64> = b
                .split(", ")
                .zip(["limit ", "pairs ", "bases "])
                .filter_map(|(part, key)| part.strip_prefix(key)?.parse().ok())
                .collect();
            if nums.len() != 3 {
                return Err(r.error("malformed budget line"));
            }
            BudgetLine {
                limit: nums[0],
                pairs: nums[1],
                bases: nums[2],
            }
        };
        r.exact("begin problem")?;
        let mut problem = String::new();
        loop {
            let line = r.next()?;
            if line == "end problem" {
                break;
            }
            let body = match line {
                "|" => "",
                _ => line
                    .strip_prefix("| ")
                    .ok_or_else(|| r.error("problem lines start with `|`"))?,
            };
            problem.push_str(body);
            problem.push('\n');
        }
        r.exact("begin result")?;
        let mut results = Vec::new();
        loop {
            let line = r.next()?;
            if line == "end result" {
                break;
            }
            let (k, v) = line.split_once(": ").ok_or_else(|| r.error("expected `key: value`"))?;
            results.push((k.to_string(), v.to_string()));
        }
        let mut claims = Vec::new();
        loop {
            let line = r.next()?;
            if line == "end certificate" {
                break;
            }
            if let Some(label) = line.strip_prefix("begin basis ") {
                let ring = r.ring()?;
                let order = OrderSpec::parse(r.field("order")?)?;
                let gens = r.polys("gens", &ring)?;
                let basis = r.polys("basis", &ring)?;
                let n = r.number("rows")? as usize;
                let mut rows = Vec::with_capacity(n);
                for _ in 0..n {
                    let line = r.next()?;
                    let row = if gens.is_empty() {
                        if !line.is_empty() {
                            return Err(r.error("expected an empty row"));
                        }
                        Vec::new()
                    } else {
                        line.split(" ; ")
                            .map(|c| r.poly(&ring, c))
                            .collect::<Result<Vec<_>, _>>()?
                    };
                    if row.len() != gens.len() {
                        return Err(r.error("row length differs from the number of generators"));
                    }
                    rows.push(row);
                }
                r.exact("end basis")?;
                claims.push(Claim::Basis(BasisClaim {
                    label: label.to_string(),
                    ring,
                    order,
                    gens,
                    basis,
                    rows,
                }));
            } else if let Some(label) = line.strip_prefix("begin identity ") {
                let ring = r.ring()?;
                let target = r.poly(&ring, r.peek_field("target")?)?;
                r.pos += 1;
                let power = r.number("power")? as u32;
                let gens = r.polys("gens", &ring)?;
                let cofactors = r.polys("cofactors", &ring)?;
                r.exact("end identity")?;
                claims.push(Claim::Identity(IdentityClaim {
                    label: label.to_string(),
                    ring,
                    target,
                    power,
                    gens,
                    cofactors,
                }));
            } else {
                return Err(r.error(format!("unexpected line `{line}`")));
            }
        }
        if r.pos != r.lines.len() {
            return Err(r.error("trailing text after `end certificate`"));
        }
        Ok(Certificate {
            engine,
            timestamp,
            task,
            verdict,
            budget,
            problem,
            results,
            claims,
        })
    }
}

struct Reader<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn error(&self, message: impl Into<String>) -> CliError {
        CliError::Certificate(format!("line {}: {}", self.pos.max(1), message.into()))
    }

    fn next(&mut self) -> Result<&'a str, CliError> {
        let line = *self
            .lines
            .get(self.pos)
            .ok_or_else(|| CliError::Certificate("unexpected end of certificate".into()))?;
        self.pos += 1;
        Ok(line)
    }

    fn exact(&mut self, want: &str) -> Result<(), CliError> {
        let got = self.next()?;
        if got != want {
            return Err(self.error(format!("expected `{want}`")));
        }
        Ok(())
    }

    fn peek_field(&self, key: &str) -> Result<&'a str, CliError> {
        self.lines
            .get(self.pos)
            .and_then(|l| l.strip_prefix(key)?.strip_prefix(": "))
            .ok_or_else(|| CliError::Certificate(format!("line {}: expected `{key}:`", self.pos + 1)))
    }

    fn field(&mut self, key: &str) -> Result<&'a str, CliError> {
        let v = self.peek_field(key)?;
        self.pos += 1;
        Ok(v)
    }

    fn number(&mut self, key: &str) -> Result<u64, CliError> {
        let v = self.field(key)?;
        v.parse()
            .map_err(|_| self.error(format!("expected a number, found `{v}`")))
    }

    fn ring(&mut self) -> Result<Ring, CliError> {
        let v = self.field("ring")?;
        Ring::new(v.split(", ")).map_err(|e| self.error(e.to_string()))
    }

    fn poly(&self, ring: &Ring, src: &str) -> Result<Polynomial, CliError> {
        ring.parse(src).map_err(|e| self.error(e.to_string()))
    }

    fn polys(&mut self, key: &str, ring: &Ring) -> Result<Vec<Polynomial>, CliError> {
        let n = self.number(key)? as usize;
        (0..n)
            .map(|_| {
                let line = self.next()?;
                self.poly(ring, line)
            })
            .collect()
    }
}
