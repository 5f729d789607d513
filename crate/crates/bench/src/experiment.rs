//! Mean-CDS-size-versus-node-count experiment.
//!
//! For every node count `n` and trial `t` one connected topology is generated
//! with seed [`trial_seed`]`(base_seed, n, t)`, and every selected algorithm
//! runs on that same graph. Outputs are validated independently with
//! [`check_cds`] and aggregated per `(n, algorithm)`.

use std::collections::BTreeMap;
use std::time::Instant;

use cds_core::seed::trial_seed;
use cds_core::topology::{generate, GenSpec};
use cds_core::verify::{check_cds, exact_min_cds};
use cds_core::{Algorithm, Graph, Mcds2Rule};

use crate::config::ExperimentConfig;
use crate::error::Result;

pub const ORACLE_LABEL: &str = "oracle";

/// One algorithm configuration as it appears in the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Variant {
    pub algorithm: Algorithm,
    pub rule: Mcds2Rule,
}

impl Variant {
    pub fn label(&self) -> String {
        match (self.algorithm, self.rule) {
            (Algorithm::Mcds2, Mcds2Rule::Union) => "mcds2-union".to_string(),
            (a, _) => a.name().to_string(),
        }
    }
}

/// Variants selected by a config: one per algorithm, MCDS2 once per rule.
pub fn variants(cfg: &ExperimentConfig) -> Vec<Variant> {
    let mut out = Vec::new();
    for &algorithm in &cfg.algorithms {
        if algorithm == Algorithm::Mcds2 {
            out.extend(
                cfg.mcds2_rules
                    .iter()
                    .map(|&rule| Variant { algorithm, rule }),
            );
        } else {
            out.push(Variant {
                algorithm,
                rule: Mcds2Rule::default(),
            });
        }
    }
    out.sort_by_key(Variant::label);
    out.dedup();
    out
}

/// Per-trial measurement, one per algorithm and graph.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub algorithm: String,
    pub n: usize,
    pub trial: u32,
    pub seed: u64,
    pub graph_hash: u64,
    pub size: usize,
    pub valid: bool,
    pub repaired: bool,
    pub runtime_ns: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialFailure {
    pub n: usize,
    pub trial: u32,
    pub seed: u64,
    pub message: String,
}

/// Aggregate over all successful trials of one `(algorithm, n)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub algorithm: String,
    pub n: usize,
    pub trials: usize,
    pub mean_size: f64,
    pub stddev_size: f64,
    pub min_size: usize,
    pub max_size: usize,
    pub valid_fraction: f64,
    pub repaired_fraction: f64,
    pub mean_runtime_us: f64,
}

#[derive(Debug, Clone, Default)]
pub struct ExperimentOutcome {
    pub records: Vec<ExperimentRecord>,
    pub trials: Vec<TrialRecord>,
    pub failures: Vec<TrialFailure>,
}

fn timed<T>(record: bool, f: impl FnOnce() -> T) -> (T, u64) {
    if !record {
        return (f(), 0);
    }
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_nanos() as u64)
}

fn run_trial(
    cfg: &ExperimentConfig,
    variants: &[Variant],
    n: usize,
    trial: u32,
    seed: u64,
) -> std::result::Result<Vec<TrialRecord>, String> {
    let spec = GenSpec {
        n,
        area_side: cfg.area_side,
        radius: cfg.radius,
        seed,
        require_connected: true,
        max_retries: cfg.max_retries,
    };
    let graph: Graph = generate(&spec).map_err(|e| e.to_string())?.to_graph();
    let graph_hash = graph.fingerprint();
    let mut rows = Vec::with_capacity(variants.len() + 1);

    for v in variants {
        let (result, runtime_ns) = timed(cfg.record_runtime, || v.algorithm.run(&graph, v.rule));
        let result = result.map_err(|e| format!("{}: {e}", v.label()))?;
        let valid = check_cds(&graph, &result.cds)
            .map_err(|e| e.to_string())?
            .is_valid();
        rows.push(TrialRecord {
            algorithm: v.label(),
            n,
            trial,
            seed,
            graph_hash,
            size: result.size,
            valid,
            repaired: result.repaired,
            runtime_ns,
        });
    }

    if cfg.include_oracle && n <= cfg.oracle_limit {
        let (exact, runtime_ns) = timed(cfg.record_runtime, || {
            exact_min_cds(&graph, cfg.oracle_limit)
        });
        let exact = exact.map_err(|e| format!("{ORACLE_LABEL}: {e}"))?;
        rows.push(TrialRecord {
            algorithm: ORACLE_LABEL.to_string(),
            n,
            trial,
            seed,
            graph_hash,
            size: exact.min_size,
            valid: true,
            repaired: false,
            runtime_ns,
        });
    }
    Ok(rows)
}

/// Runs the whole experiment. Config errors abort before any work; a trial
/// whose topology cannot be generated is recorded in `failures` and skipped.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutcome> {
    cfg.validate()?;
    let variants = variants(cfg);
    let mut outcome = ExperimentOutcome::default();
    for &n in &cfg.n_values {
        for trial in 0..cfg.trials {
            let seed = trial_seed(cfg.base_seed, n, trial);
            match run_trial(cfg, &variants, n, trial, seed) {
                Ok(rows) => outcome.trials.extend(rows),
                Err(message) => outcome.failures.push(TrialFailure {
                    n,
                    trial,
                    seed,
                    message,
                }),
            }
        }
    }
    outcome.records = aggregate(&outcome.trials);
    Ok(outcome)
}

/// Groups trial rows by `(n, algorithm)` in ascending order and summarizes
/// them. `stddev_size` is the sample standard deviation (0 for one trial).
pub fn aggregate(trials: &[TrialRecord]) -> Vec<ExperimentRecord> {
    let mut groups: BTreeMap<(usize, &str), Vec<&TrialRecord>> = BTreeMap::new();
    for t in trials {
        groups
            .entry((t.n, t.algorithm.as_str()))
            .or_default()
            .push(t);
    }
    groups
        .into_iter()
        .map(|((n, algorithm), rows)| {
            let count = rows.len();
            let k = count as f64;
            let sizes: Vec<f64> = rows.iter().map(|r| r.size as f64).collect();
            let mean = sizes.iter().sum::<f64>() / k;
            let stddev = if count > 1 {
                (sizes.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (k - 1.0)).sqrt()
            } else {
                0.0
            };
            let fraction =
                |pred: fn(&TrialRecord) -> bool| rows.iter().filter(|r| pred(r)).count() as f64 / k;
            ExperimentRecord {
                algorithm: algorithm.to_string(),
                n,
                trials: count,
                mean_size: mean,
                stddev_size: stddev,
                min_size: rows.iter().map(|r| r.size).min().unwrap_or(0),
                max_size: rows.iter().map(|r| r.size).max().unwrap_or(0),
                valid_fraction: fraction(|r| r.valid),
                repaired_fraction: fraction(|r| r.repaired),
                mean_runtime_us: rows.iter().map(|r| r.runtime_ns as f64).sum::<f64>() / k / 1000.0,
            }
        })
        .collect()
}
