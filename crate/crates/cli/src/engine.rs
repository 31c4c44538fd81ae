//! Runs a problem through the engine proper and reports its verdict, plus
//! the data the certified replay needs as hints.

use snk_core::extension::conductor;
use snk_core::regulous::{check_graph_system, is_regulous, swan_pair_solve, SwanOutcome};
use snk_core::seminorm::{nullstellensatz_witness, seminormalize_with_candidates, swan_scan, DEFAULT_WITNESS_BOUND};
use snk_core::{
    Error, ExtensionPresentation, Ideal, MonomialOrder, Polynomial, StratifiedFraction, VarietyPresentation,
};

use crate::problem::{OrderChoice, Problem, Task};
use crate::protocol::status_line;
use crate::CliError;

pub struct EngineVerdict {
    pub verdict: String,
    pub hints: Vec<(String, String)>,
}

fn verdict(v: &str) -> EngineVerdict {
    EngineVerdict {
        verdict: v.to_string(),
        hints: Vec::new(),
    }
}

fn variety(problem: &Problem) -> Result<VarietyPresentation, Error> {
    VarietyPresentation::new(Ideal::new(problem.ring(), problem.ideal.clone())?)
}

pub fn decide(problem: &Problem) -> Result<EngineVerdict, Error> {
    let ring = problem.ring();
    let ideal = || Ideal::new(ring.clone(), problem.ideal.clone());
    match problem.task {
        Task::Gb | Task::Eliminate | Task::Saturate => {
            // the computation itself is the certified replay; run it here too
            let i = ideal()?;
            match problem.task {
                Task::Gb => {
                    let ord = match problem.order {
                        Some(OrderChoice::Lex) => MonomialOrder::lex(),
                        _ => MonomialOrder::grevlex(),
                    };
                    i.gb(&ord)?;
                }
                Task::Eliminate => {
                    let drop: Vec<usize> = problem.eliminate.iter().map(|v| ring.index_of(v).unwrap()).collect();
                    i.eliminate_in_place(&drop)?;
                }
                _ => {
                    i.saturate(problem.by.as_ref().unwrap())?;
                }
            }
            Ok(verdict("Computed"))
        }
        Task::Member => {
            let i = ideal()?;
            let inside = i.contains(problem.target.as_ref().unwrap())?;
            Ok(verdict(if inside { "Member" } else { "NotMember" }))
        }
        Task::RadicalMember => {
            let inside = ideal()?.radical_contains(problem.target.as_ref().unwrap())?;
            Ok(verdict(if inside { "InRadical" } else { "NotInRadical" }))
        }
        Task::RegulousCheck => {
            let x = variety(problem)?;
            let v = if problem.relations.is_empty() {
                is_regulous(&x, &problem.fractions[0])?
            } else {
                let sf = StratifiedFraction::new(problem.fractions.clone())?;
                check_graph_system(&x, &problem.adjoined[0], &sf, &problem.relations)?
            };
            if let Some(reason) = v.reason {
                return Err(reason);
            }
            Ok(verdict(&v.verdict.to_string()))
        }
        Task::SubintegralCheck => {
            let x = variety(problem)?;
            let relations = Ideal::new(problem.extended_ring(), problem.relations.clone())?;
            let mut ideal_gens: Vec<Polynomial> = relations.gens().to_vec();
            let n = problem.extended_ring().nvars();
            ideal_gens.extend(problem.ideal.iter().map(|g| g.extend(n)));
            let ext = ExtensionPresentation::from_ideal(x, Ideal::new(problem.extended_ring(), ideal_gens)?)?;
            let holds = ext.subintegral_report()?.holds();
            Ok(verdict(if holds { "Subintegral" } else { "NotSubintegral" }))
        }
        Task::SwanCheck => {
            let x = variety(problem)?;
            let out = swan_pair_solve(&x, problem.p.as_ref().unwrap(), problem.q.as_ref().unwrap())?;
            Ok(match out {
                SwanOutcome::NotAPair => verdict("NotAPair"),
                SwanOutcome::InRing(h) => EngineVerdict {
                    verdict: "InRing".into(),
                    hints: vec![("value".into(), ring.format(&h))],
                },
                SwanOutcome::ProperlyRegulous(_) => verdict("ProperlyRegulous"),
            })
        }
        Task::SwanScan => {
            let x = variety(problem)?;
            let pairs = swan_scan(&x, problem.degree.unwrap(), &problem.coefficients)?;
            Ok(EngineVerdict {
                verdict: if pairs.is_empty() { "NoneFound" } else { "Found" }.into(),
                hints: pairs
                    .iter()
                    .map(|pr| {
                        (
                            "pair".into(),
                            format!("{} ; {}", ring.format(&pr.p), ring.format(&pr.q)),
                        )
                    })
                    .collect(),
            })
        }
        Task::Conductor => {
            let x = variety(problem)?;
            let f = &problem.fractions[0];
            match conductor(&x, &f.p, &f.q, problem.degree.unwrap() as usize) {
                Ok(c) => Ok(EngineVerdict {
                    verdict: "Computed".into(),
                    hints: c
                        .basis()?
                        .iter()
                        .map(|g| ("generator".into(), ring.format(g)))
                        .collect(),
                }),
                Err(Error::NotIntegral(_)) | Err(Error::NotFinite) => Ok(verdict("NotIntegral")),
                Err(e) => Err(e),
            }
        }
        Task::Seminormalize | Task::Nullstellensatz => {
            let x = variety(problem)?;
            let (tower, report) = seminormalize_with_candidates(&x, &problem.candidates);
            let mut hints = Vec::new();
            let mut level = x.ring().clone();
            for status in &report {
                hints.push(("status".to_string(), status_line(&level, status)));
                if let snk_core::seminorm::CandidateStatus::Adjoined(name) = status {
                    level = level.extended([name.clone()])?;
                }
            }
            if problem.task == Task::Seminormalize {
                return Ok(EngineVerdict {
                    verdict: "Tower".into(),
                    hints,
                });
            }
            let top = tower.current().ring();
            let kept: Vec<usize> = (0..top.nvars()).collect();
            let down = |p: &Polynomial| {
                p.restrict(&kept)
                    .ok_or_else(|| Error::Input("target or generator uses a variable that was never adjoined".into()))
            };
            let target = down(problem.target.as_ref().unwrap())?;
            let gens: Vec<Polynomial> = problem.generators.iter().map(down).collect::<Result<_, _>>()?;
            let bound = problem.bound.unwrap_or(DEFAULT_WITNESS_BOUND);
            match nullstellensatz_witness(&tower, &target, &gens, bound) {
                Ok(w) => {
                    hints.push(("power".into(), w.n.to_string()));
                    Ok(EngineVerdict {
                        verdict: "Witness".into(),
                        hints,
                    })
                }
                Err(Error::NotInRadical) => Ok(EngineVerdict {
                    verdict: "NotInRadical".into(),
                    hints,
                }),
                Err(Error::NotFoundWithinBound(_)) => Ok(EngineVerdict {
                    verdict: "NotFoundWithinBound".into(),
                    hints,
                }),
                Err(e) => Err(e),
            }
        }
    }
}

/// Engine errors that mean "no verdict within the limits" rather than bad input.
pub fn is_undecided(e: &CliError) -> bool {
    matches!(e, CliError::Engine(err) if err.is_budget() || *err == Error::ReducibleAmbiguity)
}
