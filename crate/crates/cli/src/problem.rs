//! Problem files: a `key: value` header, a blank line, then one ideal
//! generator per line.

use std::fmt;
use std::str::FromStr;

use snk_core::{Error, Fraction, Polynomial, Ring};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Task {
    Gb,
    Member,
    RadicalMember,
    Eliminate,
    Saturate,
    RegulousCheck,
    SubintegralCheck,
    SwanCheck,
    SwanScan,
    Conductor,
    Seminormalize,
    Nullstellensatz,
}

impl Task {
    pub const ALL: [Task; 12] = [
        Task::Gb,
        Task::Member,
        Task::RadicalMember,
        Task::Eliminate,
        Task::Saturate,
        Task::RegulousCheck,
        Task::SubintegralCheck,
        Task::SwanCheck,
        Task::SwanScan,
        Task::Conductor,
        Task::Seminormalize,
        Task::Nullstellensatz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::Gb => "gb",
            Task::Member => "member",
            Task::RadicalMember => "radical-member",
            Task::Eliminate => "eliminate",
            Task::Saturate => "saturate",
            Task::RegulousCheck => "regulous-check",
            Task::SubintegralCheck => "subintegral-check",
            Task::SwanCheck => "swan-check",
            Task::SwanScan => "swan-scan",
            Task::Conductor => "conductor",
            Task::Seminormalize => "seminormalize",
            Task::Nullstellensatz => "nullstellensatz",
        }
    }

    /// Header keys the task accepts besides `task`, `vars` and `order`.
    fn keys(self) -> &'static [Key] {
        use Key::*;
        match self {
            Self::Gb => &[],
            Self::Member | Self::RadicalMember => &[Target],
            Self::Eliminate => &[Eliminate],
            Self::Saturate => &[By],
            Self::RegulousCheck => &[Adjoined, Fraction, Relation],
            Self::SubintegralCheck => &[Adjoined, Relation],
            Self::SwanCheck => &[P, Q],
            Self::SwanScan => &[Degree, Coefficients],
            Self::Conductor => &[Fraction, Degree],
            Self::Seminormalize => &[Candidate],
            Self::Nullstellensatz => &[Candidate, Target, Generator, Bound],
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown task `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrderChoice {
    Lex,
    Grevlex,
}

impl OrderChoice {
    pub fn name(self) -> &'static str {
        match self {
            OrderChoice::Lex => "lex",
            OrderChoice::Grevlex => "grevlex",
        }
    }
}

impl FromStr for OrderChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(OrderChoice::Lex),
            "grevlex" => Ok(OrderChoice::Grevlex),
            _ => Err(format!("unknown order `{s}` (expected lex or grevlex)")),
        }
    }
}

/// Header keys in canonical emission order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Task,
    Vars,
    Order,
    Adjoined,
    Fraction,
    Relation,
    Target,
    By,
    Eliminate,
    P,
    Q,
    Degree,
    Coefficients,
    Candidate,
    Generator,
    Bound,
}

impl Key {
    const ALL: [Key; 16] = [
        Key::Task,
        Key::Vars,
        Key::Order,
        Key::Adjoined,
        Key::Fraction,
        Key::Relation,
        Key::Target,
        Key::By,
        Key::Eliminate,
        Key::P,
        Key::Q,
        Key::Degree,
        Key::Coefficients,
        Key::Candidate,
        Key::Generator,
        Key::Bound,
    ];

    fn name(self) -> &'static str {
        match self {
            Key::Task => "task",
            Key::Vars => "vars",
            Key::Order => "order",
            Key::Adjoined => "adjoined",
            Key::Fraction => "fraction",
            Key::Relation => "relation",
            Key::Target => "target",
            Key::By => "by",
            Key::Eliminate => "eliminate",
            Key::P => "p",
            Key::Q => "q",
            Key::Degree => "degree",
            Key::Coefficients => "coefficients",
            Key::Candidate => "candidate",
            Key::Generator => "generator",
            Key::Bound => "bound",
        }
    }

    fn repeatable(self) -> bool {
        matches!(self, Key::Fraction | Key::Relation | Key::Candidate | Key::Generator)
    }
}

/// A parsed problem. Polynomials live in the ring their key refers to:
/// the base ring, the base ring with `adjoined`, or the tower ring with
/// `t1..tk` for `k` candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub task: Task,
    pub vars: Vec<String>,
    pub order: Option<OrderChoice>,
    pub adjoined: Vec<String>,
    pub fractions: Vec<Fraction>,
    pub relations: Vec<Polynomial>,
    pub target: Option<Polynomial>,
    pub by: Option<Polynomial>,
    pub eliminate: Vec<String>,
    pub p: Option<Polynomial>,
    pub q: Option<Polynomial>,
    pub degree: Option<u32>,
    pub coefficients: Vec<i64>,
    pub candidates: Vec<Fraction>,
    pub generators: Vec<Polynomial>,
    pub bound: Option<u32>,
    pub ideal: Vec<Polynomial>,
}

fn at(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn shift(e: Error, line: usize, offset: usize) -> CliError {
    match e {
        Error::Parse { column, message, .. } => at(line, column + offset, message),
        other => at(line, offset + 1, other.to_string()),
    }
}

fn names(src: &str) -> Vec<String> {
    src.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

impl Problem {
    pub fn ring(&self) -> Ring {
        Ring::new(self.vars.iter().cloned()).expect("validated when parsed")
    }

    /// Base ring extended by the `adjoined` names.
    pub fn extended_ring(&self) -> Ring {
        self.ring()
            .extended(self.adjoined.iter().cloned())
            .expect("validated when parsed")
    }

    /// Base ring extended by `t1..tk`, one per candidate.
    pub fn tower_ring(&self) -> Ring {
        self.ring()
            .extended((1..=self.candidates.len()).map(|k| format!("t{k}")))
            .expect("validated when parsed")
    }

    pub fn parse(src: &str) -> Result<Problem, CliError> {
        let lines: Vec<&str> = src.lines().collect();
        let split = lines.iter().position(|l| l.trim().is_empty()).unwrap_or(lines.len());
        let mut header: Vec<(Key, String, usize, usize)> = Vec::new();
        for (i, line) in lines[..split].iter().enumerate() {
            let n = i + 1;
            let Some((k, v)) = line.split_once(':') else {
                return Err(at(n, 1, "expected `key: value`"));
            };
            let key = Key::ALL
                .into_iter()
                .find(|key| key.name() == k.trim())
                .ok_or_else(|| at(n, 1, format!("unknown key `{}`", k.trim())))?;
            if !key.repeatable() && header.iter().any(|h| h.0 == key) {
                return Err(at(n, 1, format!("duplicate key `{}`", key.name())));
            }
            let offset = k.len() + 1 + (v.len() - v.trim_start().len());
            header.push((key, v.trim().to_string(), n, offset));
        }
        let find = |key: Key| header.iter().find(|h| h.0 == key);
        let (_, task_src, tline, toff) = find(Key::Task).ok_or_else(|| at(1, 1, "missing key `task`"))?;
        let task: Task = task_src.parse().map_err(|m| at(*tline, toff + 1, m))?;
        let (_, vars_src, vline, voff) = find(Key::Vars).ok_or_else(|| at(1, 1, "missing key `vars`"))?;
        let vars = names(vars_src);
        let base = Ring::new(vars.iter().cloned()).map_err(|e| shift(e, *vline, *voff))?;
        for (key, _, n, _) in &header {
            if !matches!(key, Key::Task | Key::Vars | Key::Order) && !task.keys().contains(key) {
                return Err(at(
                    *n,
                    1,
                    format!("key `{}` does not apply to task `{}`", key.name(), task),
                ));
            }
        }
        let mut prob = Problem {
            task,
            vars,
            order: None,
            adjoined: Vec::new(),
            fractions: Vec::new(),
            relations: Vec::new(),
            target: None,
            by: None,
            eliminate: Vec::new(),
            p: None,
            q: None,
            degree: None,
            coefficients: Vec::new(),
            candidates: Vec::new(),
            generators: Vec::new(),
            bound: None,
            ideal: Vec::new(),
        };
        if let Some((_, v, n, off)) = find(Key::Adjoined) {
            prob.adjoined = names(v);
            base.extended(prob.adjoined.iter().cloned())
                .map_err(|e| shift(e, *n, *off))?;
        }
        let extended = prob.extended_ring();
        prob.candidates = header
            .iter()
            .filter(|h| h.0 == Key::Candidate)
            .map(|(_, v, n, off)| Fraction::parse(&base, v).map_err(|e| shift(e, *n, *off)))
            .collect::<Result<_, _>>()?;
        let tower = prob.tower_ring();
        let int = |v: &str, n: usize, off: usize| -> Result<u32, CliError> {
            v.parse()
                .map_err(|_| at(n, off + 1, format!("expected a non-negative integer, found `{v}`")))
        };
        for (key, v, n, off) in &header {
            let (n, off) = (*n, *off);
            let poly = |ring: &Ring| ring.parse(v).map_err(|e| shift(e, n, off));
            match key {
                Key::Task | Key::Vars | Key::Adjoined | Key::Candidate => {}
                Key::Order => prob.order = Some(v.parse().map_err(|m| at(n, off + 1, m))?),
                Key::Fraction => prob
                    .fractions
                    .push(Fraction::parse(&base, v).map_err(|e| shift(e, n, off))?),
                Key::Relation => prob.relations.push(poly(&extended)?),
                Key::Target => {
                    let ring = if task == Task::Nullstellensatz { &tower } else { &base };
                    prob.target = Some(poly(ring)?);
                }
                Key::Generator => prob.generators.push(poly(&tower)?),
                Key::By => prob.by = Some(poly(&base)?),
                Key::P => prob.p = Some(poly(&base)?),
                Key::Q => prob.q = Some(poly(&base)?),
                Key::Eliminate => {
                    prob.eliminate = names(v);
                    if let Some(bad) = prob.eliminate.iter().find(|x| base.index_of(x).is_none()) {
                        return Err(at(n, off + 1, format!("unknown variable `{bad}`")));
                    }
                }
                Key::Degree => prob.degree = Some(int(v, n, off)?),
                Key::Bound => prob.bound = Some(int(v, n, off)?),
                Key::Coefficients => {
                    prob.coefficients = v
                        .split(',')
                        .map(|c| {
                            c.trim()
                                .parse::<i64>()
                                .map_err(|_| at(n, off + 1, format!("expected an integer, found `{}`", c.trim())))
                        })
                        .collect::<Result<_, _>>()?;
                }
            }
        }
        for (i, line) in lines.iter().enumerate().skip(split + 1) {
            if line.trim().is_empty() {
                continue;
            }
            prob.ideal.push(base.parse(line).map_err(|e| shift(e, i + 1, 0))?);
        }
        prob.check_required()?;
        Ok(prob)
    }

    fn check_required(&self) -> Result<(), CliError> {
        let missing = |what: &str| Err(at(1, 1, format!("task `{}` requires `{what}`", self.task)));
        match self.task {
            Task::Member | Task::RadicalMember | Task::Nullstellensatz if self.target.is_none() => missing("target"),
            Task::Eliminate if self.eliminate.is_empty() => missing("eliminate"),
            Task::Saturate if self.by.is_none() => missing("by"),
            Task::RegulousCheck | Task::Conductor if self.fractions.is_empty() => missing("fraction"),
            Task::RegulousCheck if self.relations.is_empty() && self.fractions.len() > 1 => Err(at(
                1,
                1,
                "several fractions need a graph system given by `relation` lines",
            )),
            Task::RegulousCheck if !self.relations.is_empty() && self.adjoined.len() != 1 => {
                Err(at(1, 1, "a graph system needs exactly one `adjoined` variable"))
            }
            Task::SubintegralCheck if self.adjoined.is_empty() => missing("adjoined"),
            Task::SwanCheck if self.p.is_none() || self.q.is_none() => missing("p and q"),
            Task::SwanScan if self.degree.is_none() || self.coefficients.is_empty() => {
                missing("degree and coefficients")
            }
            Task::Conductor if self.degree.is_none() => missing("degree"),
            Task::Nullstellensatz if self.generators.is_empty() => missing("generator"),
            _ => Ok(()),
        }
    }

    /// Canonical text; `parse(emit(p)) == p` and `emit` is a fixed point.
    pub fn emit(&self) -> String {
        let base = self.ring();
        let ext = self.extended_ring();
        let tower = self.tower_ring();
        let mut out = String::new();
        let mut put = |k: Key, v: String| {
            out.push_str(k.name());
            out.push_str(": ");
            out.push_str(&v);
            out.push('\n');
        };
        put(Key::Task, self.task.name().into());
        put(Key::Vars, self.vars.join(", "));
        if let Some(o) = self.order {
            put(Key::Order, o.name().into());
        }
        if !self.adjoined.is_empty() {
            put(Key::Adjoined, self.adjoined.join(", "));
        }
        for f in &self.fractions {
            put(Key::Fraction, format_fraction(&base, f));
        }
        for r in &self.relations {
            put(Key::Relation, ext.format(r));
        }
        if let Some(t) = &self.target {
            let ring = if self.task == Task::Nullstellensatz {
                &tower
            } else {
                &base
            };
            put(Key::Target, ring.format(t));
        }
        if let Some(b) = &self.by {
            put(Key::By, base.format(b));
        }
        if !self.eliminate.is_empty() {
            put(Key::Eliminate, self.eliminate.join(", "));
        }
        if let Some(p) = &self.p {
            put(Key::P, base.format(p));
        }
        if let Some(q) = &self.q {
            put(Key::Q, base.format(q));
        }
        if let Some(d) = self.degree {
            put(Key::Degree, d.to_string());
        }
        if !self.coefficients.is_empty() {
            put(
                Key::Coefficients,
                self.coefficients
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(", "),
            );
        }
        for c in &self.candidates {
            put(Key::Candidate, format_fraction(&base, c));
        }
        for g in &self.generators {
            put(Key::Generator, tower.format(g));
        }
        if let Some(b) = self.bound {
            put(Key::Bound, b.to_string());
        }
        out.push('\n');
        for g in &self.ideal {
            out.push_str(&base.format(g));
            out.push('\n');
        }
        out
    }
}

/// `p / q` with parentheses only around multi-term parts.
pub fn format_fraction(ring: &Ring, f: &Fraction) -> String {
    let part = |p: &Polynomial| {
        let s = ring.format(p);
        if p.len() > 1 {
            format!("({s})")
        } else {
            s
        }
    };
    if f.q.is_one() {
        return ring.format(&f.p);
    }
    format!("{} / {}", part(&f.p), part(&f.q))
}
