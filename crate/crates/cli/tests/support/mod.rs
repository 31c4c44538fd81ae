#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use snk_cli::problem::Problem;
use snk_cli::{run, RunOptions, RunOutput};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixture_dir().join(format!("{name}.problem"))
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture(name: &str) -> Problem {
    Problem::parse(&fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.ok()?.path();
            (p.extension()? == "problem").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names
}

pub fn solve(name: &str) -> RunOutput {
    let opts = RunOptions {
        timestamp: Some(0),
        ..Default::default()
    };
    run(&fixture(name), &opts).unwrap_or_else(|e| panic!("{name}: {e}"))
}

const VERDICTS: [&str; 20] = [
    "Regulous",
    "NotRegulous",
    "Subintegral",
    "NotSubintegral",
    "Member",
    "NotMember",
    "InRadical",
    "NotInRadical",
    "Computed",
    "NotIntegral",
    "NotAPair",
    "InRing",
    "ProperlyRegulous",
    "Found",
    "NoneFound",
    "Tower",
    "Witness",
    "NotFoundWithinBound",
    "Undecided",
    "Rejected",
];

/// Metadata lines that the checker does not read.
fn unchecked(line: &str) -> bool {
    line.starts_with("snk-certificate")
        || line.starts_with("engine:")
        || line.starts_with("timestamp:")
        || line.starts_with("budget:")
}

/// One editable token: byte range within the text and its replacement.
#[derive(Clone, Debug)]
pub struct Tamper {
    pub start: usize,
    pub end: usize,
    pub replacement: String,
}

impl Tamper {
    pub fn apply(&self, text: &str) -> String {
        format!("{}{}{}", &text[..self.start], self.replacement, &text[self.end..])
    }
}

fn variables(text: &str) -> Vec<String> {
    let mut vars = Vec::new();
    for line in text.lines() {
        let line = line.trim_start_matches("| ");
        let Some(rest) = line.strip_prefix("ring: ").or_else(|| line.strip_prefix("vars: ")) else {
            continue;
        };
        for v in rest.split(',').map(str::trim) {
            if !vars.iter().any(|w| w == v) {
                vars.push(v.to_string());
            }
        }
    }
    vars
}

/// Every single-token edit of numbers, variable names and the verdict
/// outside the unchecked metadata lines.
pub fn tamperings(text: &str) -> Vec<Tamper> {
    let vars = variables(text);
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let base = offset;
        offset += line.len();
        if unchecked(line) {
            continue;
        }
        let body_from = match line.trim_start_matches("| ").find(':') {
            Some(i) => i + 1 + (line.len() - line.trim_start_matches("| ").len()),
            None => 0,
        };
        let is_verdict = line.starts_with("verdict:");
        let bytes = line.as_bytes();
        let mut i = body_from;
        while i < line.len() {
            let c = bytes[i] as char;
            if !(c.is_ascii_alphanumeric() || c == '_') {
                i += 1;
                continue;
            }
            let j = (i..line.len())
                .find(|&j| !((bytes[j] as char).is_ascii_alphanumeric() || bytes[j] == b'_'))
                .unwrap_or(line.len());
            let tok = &line[i..j];
            let replacement = if tok.bytes().all(|b| b.is_ascii_digit()) {
                Some((tok.parse::<u64>().unwrap() + 1).to_string())
            } else if is_verdict {
                VERDICTS.iter().find(|v| **v != tok).map(|v| v.to_string())
            } else if let Some(k) = vars.iter().position(|v| v == tok) {
                (vars.len() > 1).then(|| vars[(k + 1) % vars.len()].clone())
            } else {
                None
            };
            if let Some(replacement) = replacement {
                out.push(Tamper {
                    start: base + i,
                    end: base + j,
                    replacement,
                });
            }
            i = j;
        }
    }
    out
}

/// `count` tamperings drawn across `certs`, round-robin.
pub fn sample_tamperings<R: Rng>(certs: &[(String, String)], count: usize, rng: &mut R) -> Vec<(String, Tamper)> {
    (0..count)
        .map(|k| {
            let (name, text) = &certs[k % certs.len()];
            let all = tamperings(text);
            (name.clone(), all[rng.gen_range(0..all.len())].clone())
        })
        .collect()
}

/// Drops the timestamp line.
pub fn without_timestamp(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with("timestamp:"))
        .map(|l| format!("{l}\n"))
        .collect()
}
