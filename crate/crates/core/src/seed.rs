//! Per-trial seed derivation.
//!
//! `trial_seed(base, n, t) = base ^ splitmix64(n << 32 | t)`, where
//! `splitmix64` is the SplitMix64 output function (Steele, Lea & Flood) applied
//! to `x + 0x9E3779B97F4A7C15`. Each `(n, t)` pair gets its own seed, so
//! adding trials or node counts never changes the graphs of existing ones.

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_seed(base_seed: u64, n: usize, trial: u32) -> u64 {
    base_seed ^ splitmix64(((n as u64) << 32) | u64::from(trial))
}
