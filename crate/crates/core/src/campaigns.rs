//! Monte Carlo verification campaigns.
//!
//! Sample `k` of a campaign is drawn from stream `k / PARTITION` of the seed,
//! so results do not depend on the number of worker threads.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coherence::{convex_roof_l1_search, roof_report, triangle_check_l1};
use crate::concurrence::{
    component_concurrences, highdim_lower_bound, rank2_concurrence_2qubit, squared_concurrence_forms,
    triangle_check_concurrence, wootters_concurrence,
};
use crate::decompositions::{sample_with_identity, stream_rng};
use crate::error::Result;
use crate::linalg::{singular_pair_2x2, singular_values};
use crate::random::{random_ensemble, random_mixed_state, random_pure_state, random_symmetric_2x2};
use crate::report::InequalityReport;
use crate::statefile::{ensemble_to_json, matrix_to_json, pure_to_json};
use crate::states::BipartiteShape;
use crate::tolerances::{EQUALITY, FORMULA_AGREEMENT};

/// Samples per RNG stream.
pub const PARTITION: usize = 1024;

/// Violations kept verbatim in a summary; the count is always exact.
pub const MAX_RECORDED_FAILURES: usize = 20;

/// A failed check together with the inputs that reproduce it.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub sample: usize,
    pub inputs: Value,
    pub report: Option<InequalityReport>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignSummary {
    pub name: String,
    pub seed: u64,
    pub samples: usize,
    pub violations: usize,
    /// Smallest margin over all checks; negative values within the slack
    /// still pass.
    pub worst_margin: f64,
    pub failures: Vec<Violation>,
}

impl CampaignSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// `violations: k/N`
    pub fn summary_line(&self) -> String {
        format!("violations: {}/{}", self.violations, self.samples)
    }
}

/// Checks produced for one sample.
pub struct Outcome {
    pub inputs: Value,
    pub checks: Result<Vec<InequalityReport>>,
}

struct Partial {
    violations: usize,
    worst_margin: f64,
    failures: Vec<Violation>,
}

/// Runs `sample` for indices `0..samples` and merges the outcomes in order.
pub fn run_campaign<F>(name: &str, samples: usize, seed: u64, sample: F) -> CampaignSummary
where
    F: Fn(&mut ChaCha8Rng) -> Outcome + Sync,
{
    let partitions = samples.div_ceil(PARTITION);
    let partials: Vec<Partial> = (0..partitions)
        .into_par_iter()
        .map(|part| {
            let mut rng = stream_rng(seed, part as u64);
            let start = part * PARTITION;
            let end = (start + PARTITION).min(samples);
            let mut acc = Partial {
                violations: 0,
                worst_margin: f64::INFINITY,
                failures: Vec::new(),
            };
            for k in start..end {
                let Outcome { inputs, checks } = sample(&mut rng);
                match checks {
                    Ok(reports) => {
                        let mut failed = None;
                        for r in reports {
                            acc.worst_margin = acc.worst_margin.min(r.worst_margin());
                            if !r.pass && failed.is_none() {
                                failed = Some(r);
                            }
                        }
                        if let Some(r) = failed {
                            acc.violations += 1;
                            if acc.failures.len() < MAX_RECORDED_FAILURES {
                                acc.failures.push(Violation {
                                    sample: k,
                                    inputs,
                                    report: Some(r),
                                    error: None,
                                });
                            }
                        }
                    }
                    Err(err) => {
                        acc.violations += 1;
                        if acc.failures.len() < MAX_RECORDED_FAILURES {
                            acc.failures.push(Violation {
                                sample: k,
                                inputs,
                                report: None,
                                error: Some(err.to_string()),
                            });
                        }
                    }
                }
            }
            acc
        })
        .collect();

    let mut summary = CampaignSummary {
        name: name.to_string(),
        seed,
        samples,
        violations: 0,
        worst_margin: f64::INFINITY,
        failures: Vec::new(),
    };
    for p in partials {
        summary.violations += p.violations;
        summary.worst_margin = summary.worst_margin.min(p.worst_margin);
        for f in p.failures {
            if summary.failures.len() < MAX_RECORDED_FAILURES {
                summary.failures.push(f);
            }
        }
    }
    summary
}

/// `| |t11| - |t22| | ≤ σ1 - σ2` for complex symmetric `t` with entries in
/// the unit disc. The closed-form singular values must also agree with the
/// `t^dagger t` spectrum to `1e-8`.
pub fn lemma1(samples: usize, seed: u64) -> CampaignSummary {
    run_campaign("lemma1", samples, seed, |rng| {
        let t = random_symmetric_2x2(rng);
        let gap = (t[(0, 0)].norm() - t[(1, 1)].norm()).abs();
        let pair = singular_pair_2x2(&t);
        let sv = singular_values(&t);
        let deviation = (pair.sigma1 - sv[0]).abs().max((pair.sigma2 - sv[1]).abs());
        Outcome {
            inputs: json!({ "t": matrix_to_json(&t) }),
            checks: Ok(vec![
                InequalityReport::new("lemma1: ||t11|-|t22|| <= s1 - s2", gap, pair.gap(), None),
                InequalityReport::agreement("lemma1: closed-form vs eigenvalue singular values", deviation, EQUALITY),
            ]),
        }
    })
}

/// Both squared pure-concurrence formulas agree to `1e-9` on Haar-random
/// states of `shape`.
pub fn formula_agreement(shape: BipartiteShape, samples: usize, seed: u64) -> Result<CampaignSummary> {
    shape.require_bipartite()?;
    Ok(run_campaign(
        &format!("pure concurrence formulas {shape}"),
        samples,
        seed,
        |rng| {
            let psi = random_pure_state(shape, rng);
            let checks = squared_concurrence_forms(&psi).map(|f| {
                vec![InequalityReport::agreement(
                    "purity form vs generator sum",
                    (f.purity - f.generator).abs(),
                    FORMULA_AGREEMENT,
                )]
            });
            Outcome {
                inputs: pure_to_json(&psi),
                checks,
            }
        },
    ))
}

/// τ-gap concurrence against the spin-flip spectrum on random two-qubit
/// ensembles, to `1e-8`.
pub fn wootters_equivalence(samples: usize, seed: u64) -> CampaignSummary {
    run_campaign("wootters equivalence 2x2", samples, seed, |rng| {
        let e = random_ensemble(BipartiteShape::qubits(), rng);
        let checks = (|| {
            let tau = rank2_concurrence_2qubit(&e)?;
            let w = wootters_concurrence(&e.density()?)?;
            Ok(vec![InequalityReport::agreement(
                "|C_tau - C_wootters| <= 1e-8",
                (tau - w).abs(),
                EQUALITY,
            )])
        })();
        Outcome {
            inputs: ensemble_to_json(&e),
            checks,
        }
    })
}

/// `|C(Ψ1) - C(Ψ2)| ≤ C(ρ) ≤ C(Ψ1) + C(Ψ2)` on random two-qubit ensembles.
pub fn triangle_two_qubit(samples: usize, seed: u64) -> CampaignSummary {
    run_campaign("concurrence triangle 2x2", samples, seed, |rng| {
        let e = random_ensemble(BipartiteShape::qubits(), rng);
        Outcome {
            inputs: ensemble_to_json(&e),
            checks: triangle_check_concurrence(&e).map(|r| vec![r]),
        }
    })
}

/// `|C(Ψ1) - C(Ψ2)| ≤ sqrt(Σ C_mn²) ≤ min average over the given
/// decomposition and `remixes` Haar remixes`.
pub fn triangle_highdim(shape: BipartiteShape, samples: usize, remixes: usize, seed: u64) -> Result<CampaignSummary> {
    shape.require_bipartite()?;
    Ok(run_campaign(
        &format!("concurrence triangle {shape}"),
        samples,
        seed,
        |rng| {
            let e = random_ensemble(shape, rng);
            let remix_seed: u64 = rng.random();
            let checks = (|| {
                let [c1, c2] = component_concurrences(&e)?;
                let bound = highdim_lower_bound(&e)?;
                let draws = sample_with_identity(&e, remixes + 1, remix_seed)?;
                let min_avg = draws
                    .iter()
                    .filter_map(|d| d.avg_pure_concurrence)
                    .fold(f64::INFINITY, f64::min);
                Ok(vec![InequalityReport::new(
                    format!("concurrence {shape}: |C1-C2| <= sqrt(sum C_mn^2) <= min sampled average"),
                    (c1 - c2).abs(),
                    bound,
                    Some(min_avg),
                )])
            })();
            Outcome {
                inputs: json!({ "state": ensemble_to_json(&e), "remix_seed": remix_seed }),
                checks,
            }
        },
    ))
}

/// Concurrence triangle for any bipartite shape: exact for two qubits,
/// sandwiched otherwise.
pub fn triangle_concurrence(
    shape: BipartiteShape,
    samples: usize,
    remixes: usize,
    seed: u64,
) -> Result<CampaignSummary> {
    if shape.is_two_qubit() {
        Ok(triangle_two_qubit(samples, seed))
    } else {
        triangle_highdim(shape, samples, remixes, seed)
    }
}

/// `|C_l1(p1ρ1) - C_l1(p2ρ2)| ≤ C_l1(ρ) ≤ C_l1(p1ρ1) + C_l1(p2ρ2)` for
/// random mixed-state pairs of mixed rank.
pub fn l1_triangle(shape: BipartiteShape, samples: usize, seed: u64) -> CampaignSummary {
    run_campaign(&format!("l1 triangle dim {}", shape.dim()), samples, seed, |rng| {
        let rho1 = random_mixed_state(shape, rng);
        let rho2 = random_mixed_state(shape, rng);
        let p1 = loop {
            let p: f64 = rng.random();
            if p > 0.0 {
                break p;
            }
        };
        Outcome {
            inputs: json!({
                "p1": p1,
                "rho1": matrix_to_json(rho1.matrix()),
                "rho2": matrix_to_json(rho2.matrix()),
            }),
            checks: triangle_check_l1(&rho1, &rho2, p1).map(|r| vec![r]),
        }
    })
}

/// `|C_l1(Ψ1) - C_l1(Ψ2)| ≤ C_l1(ρ) ≤ roof estimate ≤ every sampled average
/// ≤ C_l1(Ψ1) + C_l1(Ψ2)`, with `roof_samples` decompositions per ensemble.
pub fn roof_sandwich(shape: BipartiteShape, samples: usize, roof_samples: usize, seed: u64) -> CampaignSummary {
    run_campaign(
        &format!("convex-roof l1 sandwich dim {}", shape.dim()),
        samples,
        seed,
        |rng| {
            let e = random_ensemble(shape, rng);
            let roof_seed: u64 = rng.random();
            let checks = convex_roof_l1_search(&e, roof_samples, roof_seed).map(|search| {
                let min_avg = search.sampled_averages.iter().copied().fold(f64::INFINITY, f64::min);
                vec![
                    roof_report(&e, &search),
                    InequalityReport::new("roof estimate <= every sampled average", search.estimate, min_avg, None)
                        .with_slack(0.0),
                ]
            });
            Outcome {
                inputs: json!({ "state": ensemble_to_json(&e), "roof_seed": roof_seed }),
                checks,
            }
        },
    )
}
