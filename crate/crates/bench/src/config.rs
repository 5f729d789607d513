//! Experiment configuration: a flat `key = value` file, overridable per key.

use std::str::FromStr;

use cds_core::topology::{DEFAULT_AREA_SIDE, DEFAULT_MAX_RETRIES, DEFAULT_RADIUS};
use cds_core::verify::DEFAULT_ORACLE_LIMIT;
use cds_core::{Algorithm, Mcds2Rule};

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n_values: Vec<usize>,
    pub trials: u32,
    pub area_side: f64,
    pub radius: f64,
    pub base_seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// MCDS2 coverage rules to run; `mcds2_rule = both` runs the two side by side.
    pub mcds2_rules: Vec<Mcds2Rule>,
    /// Adds exact-oracle rows for node counts up to `oracle_limit`.
    pub include_oracle: bool,
    pub oracle_limit: usize,
    pub max_retries: u32,
    /// When false, runtimes are reported as zero so output files are byte-stable.
    pub record_runtime: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            n_values: (20..=200).step_by(20).collect(),
            trials: 30,
            area_side: DEFAULT_AREA_SIDE,
            radius: DEFAULT_RADIUS,
            base_seed: 1,
            algorithms: Algorithm::ALL.to_vec(),
            mcds2_rules: vec![Mcds2Rule::Single],
            include_oracle: false,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            max_retries: DEFAULT_MAX_RETRIES,
            record_runtime: true,
        }
    }
}

fn config_err(msg: impl Into<String>) -> BenchError {
    BenchError::Config(msg.into())
}

fn scalar<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| config_err(format!("{key}: invalid value '{value}'")))
}

fn boolean(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(config_err(format!(
            "{key}: expected true or false, got '{value}'"
        ))),
    }
}

fn list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| scalar(key, s))
        .collect()
}

impl ExperimentConfig {
    /// Parses a config file body on top of the defaults. Blank lines and
    /// `#` comments are ignored; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| config_err(format!("line {}: expected key=value", i + 1)))?;
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "n_values" => self.n_values = list(key, value)?,
            "trials" => self.trials = scalar(key, value)?,
            "area_side" => self.area_side = scalar(key, value)?,
            "radius" => self.radius = scalar(key, value)?,
            "base_seed" => self.base_seed = scalar(key, value)?,
            "algorithms" => self.algorithms = list(key, value)?,
            "mcds2_rule" => {
                self.mcds2_rules = match value {
                    "both" => vec![Mcds2Rule::Single, Mcds2Rule::Union],
                    v => vec![scalar(key, v)?],
                }
            }
            "include_oracle" => self.include_oracle = boolean(key, value)?,
            "oracle_limit" => self.oracle_limit = scalar(key, value)?,
            "max_retries" => self.max_retries = scalar(key, value)?,
            "record_runtime" => self.record_runtime = boolean(key, value)?,
            _ => return Err(config_err(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() {
            return Err(config_err("n_values must not be empty"));
        }
        if self.n_values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(config_err("n_values must be strictly ascending"));
        }
        if self.n_values[0] == 0 {
            return Err(config_err("n_values must be positive"));
        }
        if self.trials == 0 {
            return Err(config_err("trials must be at least 1"));
        }
        if self.algorithms.is_empty() {
            return Err(config_err("algorithms must not be empty"));
        }
        if self.mcds2_rules.is_empty() {
            return Err(config_err("mcds2_rule must name a rule"));
        }
        if !(self.area_side > 0.0 && self.area_side.is_finite()) {
            return Err(config_err("area_side must be positive"));
        }
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(config_err("radius must be positive"));
        }
        if self.max_retries == 0 {
            return Err(config_err("max_retries must be at least 1"));
        }
        Ok(())
    }
}
