//! CSV, plot-data and raw per-trial writers.

use std::io::{self, Write};

use crate::experiment::{ExperimentRecord, TrialRecord};

pub const CSV_HEADER: &str = "algorithm,n,trials,mean_size,stddev_size,min_size,max_size,valid_fraction,repaired_fraction,mean_runtime_us";
pub const RAW_HEADER: &str = "algorithm,n,trial,seed,graph_hash,size,valid,repaired,runtime_ns";

pub fn emit_csv<W: Write>(records: &[ExperimentRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{:.6},{:.6},{},{},{:.6},{:.6},{:.6}",
            r.algorithm,
            r.n,
            r.trials,
            r.mean_size,
            r.stddev_size,
            r.min_size,
            r.max_size,
            r.valid_fraction,
            r.repaired_fraction,
            r.mean_runtime_us
        )?;
    }
    out.flush()
}

/// One block per algorithm (in order of first appearance): a `# name` line,
/// then `n mean_size` pairs in ascending `n`; blocks separated by a blank line.
pub fn emit_plot_data<W: Write>(records: &[ExperimentRecord], mut out: W) -> io::Result<()> {
    let mut names: Vec<&str> = Vec::new();
    for r in records {
        if !names.contains(&r.algorithm.as_str()) {
            names.push(&r.algorithm);
        }
    }
    for (i, name) in names.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        writeln!(out, "# {name}")?;
        let mut rows: Vec<&ExperimentRecord> =
            records.iter().filter(|r| r.algorithm == *name).collect();
        rows.sort_by_key(|r| r.n);
        for r in rows {
            writeln!(out, "{} {:.6}", r.n, r.mean_size)?;
        }
    }
    out.flush()
}

pub fn emit_raw<W: Write>(trials: &[TrialRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{RAW_HEADER}")?;
    for t in trials {
        writeln!(
            out,
            "{},{},{},{},{:016x},{},{},{},{}",
            t.algorithm,
            t.n,
            t.trial,
            t.seed,
            t.graph_hash,
            t.size,
            u8::from(t.valid),
            u8::from(t.repaired),
            t.runtime_ns
        )?;
    }
    out.flush()
}

/// Reads back a file written by [`emit_raw`].
pub fn parse_raw(text: &str) -> Result<Vec<TrialRecord>, String> {
    let mut lines = text.lines();
    if lines.next() != Some(RAW_HEADER) {
        return Err("missing raw header".into());
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let f: Vec<&str> = line.split(',').collect();
            let bad = || format!("raw line {}: malformed", i + 2);
            if f.len() != 9 {
                return Err(bad());
            }
            Ok(TrialRecord {
                algorithm: f[0].to_string(),
                n: f[1].parse().map_err(|_| bad())?,
                trial: f[2].parse().map_err(|_| bad())?,
                seed: f[3].parse().map_err(|_| bad())?,
                graph_hash: u64::from_str_radix(f[4], 16).map_err(|_| bad())?,
                size: f[5].parse().map_err(|_| bad())?,
                valid: f[6] == "1",
                repaired: f[7] == "1",
                runtime_ns: f[8].parse().map_err(|_| bad())?,
            })
        })
        .collect()
}
