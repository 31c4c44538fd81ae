//! Problem files in, verdicts and checkable certificates out.
//!
//! [`run`] decides a problem with the engine, then replays the decision in
//! certified form; [`verify`] re-checks a certificate by polynomial
//! division alone.

pub mod cert;
pub mod check;
pub mod engine;
pub mod problem;
pub mod protocol;

use std::time::{SystemTime, UNIX_EPOCH};

use snk_core::ideal::budget;

use crate::cert::{BudgetLine, Certificate};
use crate::check::{Checker, Recorder};
use crate::problem::{OrderChoice, Problem};
use crate::protocol::{certify, Status};

pub const ENGINE: &str = concat!("snk ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] snk_core::Error),
    #[error("malformed certificate: {0}")]
    Certificate(String),
    #[error("certificate rejected: {0}")]
    Rejected(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Process exit codes.
pub mod exit {
    pub const DEFINITIVE: i32 = 0;
    pub const INPUT_ERROR: i32 = 1;
    pub const UNDECIDED: i32 = 2;
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub order: Option<OrderChoice>,
    /// S-pair ceiling for every Groebner computation of the run.
    pub budget: Option<u64>,
    /// Fixed timestamp (seconds); the current time when absent.
    pub timestamp: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub certificate: Certificate,
    pub exit: i32,
}

impl RunOutput {
    pub fn summary(&self) -> String {
        let mut s = format!("verdict: {}\n", self.certificate.verdict);
        for (k, v) in &self.certificate.results {
            s.push_str(&format!("{k}: {v}\n"));
        }
        s
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Decides `problem` and builds its certificate. Input errors are `Err`;
/// running out of budget is an `Undecided` certificate with exit code 2.
pub fn run(problem: &Problem, opts: &RunOptions) -> Result<RunOutput, CliError> {
    let mut problem = problem.clone();
    if opts.order.is_some() {
        problem.order = opts.order;
    }
    let limit = opts.budget.unwrap_or_else(budget::pair_budget);
    budget::with_pair_budget(limit, || {
        budget::reset_stats();
        let outcome = decide_and_certify(&problem);
        let stats = budget::stats();
        let (verdict, results, claims, status) = match outcome {
            Ok(x) => x,
            Err(e) if engine::is_undecided(&e) => (
                "Undecided".to_string(),
                vec![("reason".to_string(), e.to_string())],
                Vec::new(),
                Status::Undecided,
            ),
            Err(e) => return Err(e),
        };
        let certificate = Certificate {
            engine: ENGINE.into(),
            timestamp: opts.timestamp.unwrap_or_else(now),
            task: problem.task,
            verdict,
            budget: BudgetLine {
                limit,
                pairs: stats.pairs,
                bases: stats.bases,
            },
            problem: problem.emit(),
            results,
            claims,
        };
        let exit = match status {
            Status::Definitive => exit::DEFINITIVE,
            Status::Undecided => exit::UNDECIDED,
        };
        Ok(RunOutput { certificate, exit })
    })
}

type Decided = (String, Vec<(String, String)>, Vec<cert::Claim>, Status);

fn decide_and_certify(problem: &Problem) -> Result<Decided, CliError> {
    let decided = engine::decide(problem)?;
    let mut recorder = Recorder::default();
    let outcome = certify(problem, &decided.hints, &mut recorder)?;
    if outcome.verdict != decided.verdict {
        return Err(CliError::Internal(format!(
            "engine says {}, certified replay says {}",
            decided.verdict, outcome.verdict
        )));
    }
    if let Some((k, v)) = decided.hints.iter().find(|h| !outcome.results.contains(h)) {
        return Err(CliError::Internal(format!(
            "certified replay does not confirm `{k}: {v}`"
        )));
    }
    Ok((outcome.verdict, outcome.results, recorder.claims, outcome.status))
}

/// Re-checks a certificate. `Ok(())` means accepted.
pub fn verify(text: &str) -> Result<(), CliError> {
    let cert = Certificate::parse(text)?;
    let problem = Problem::parse(&cert.problem).map_err(|e| CliError::Certificate(format!("problem echo: {e}")))?;
    if problem.emit() != cert.problem {
        return Err(CliError::Certificate("problem echo is not in canonical form".into()));
    }
    if problem.task != cert.task {
        return Err(CliError::Rejected("task line disagrees with the problem".into()));
    }
    if cert.verdict == "Undecided" && cert.claims.is_empty() {
        return match cert.results.as_slice() {
            [(k, _)] if k == "reason" => Ok(()),
            _ => Err(CliError::Rejected(
                "an undecided certificate carries only a reason".into(),
            )),
        };
    }
    let mut checker = Checker::new(cert.claims.clone());
    let outcome = certify(&problem, &cert.results, &mut checker)?;
    if outcome.verdict != cert.verdict {
        return Err(CliError::Rejected(format!(
            "claims support {}, certificate says {}",
            outcome.verdict, cert.verdict
        )));
    }
    if outcome.results != cert.results {
        return Err(CliError::Rejected(
            "result lines differ from what the claims support".into(),
        ));
    }
    checker.finish()
}
