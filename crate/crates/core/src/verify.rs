//! Ground truth: CDS validity, an exhaustive minimum-CDS oracle for small
//! graphs, and the approximation ratio against it.

use alloc::vec::Vec;

use crate::error::{CdsError, Result};
use crate::graph::{Graph, NodeId, NodeSet};

pub const DEFAULT_ORACLE_LIMIT: usize = 12;

/// Outcome of checking the cover and connectivity properties of a node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub dominating: bool,
    pub connected: bool,
    /// Nodes neither in the set nor adjacent to it. Empty iff `dominating`.
    pub uncovered_nodes: NodeSet,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.dominating && self.connected
    }
}

/// Checks whether `set` dominates `g` and induces a connected subgraph.
///
/// The empty set is connected only on the empty graph, so it is never a CDS
/// of a graph with nodes.
pub fn check_cds(g: &Graph, set: &NodeSet) -> Result<ValidityReport> {
    for &u in set {
        g.check_node(u)?;
    }
    Ok(check_cds_unchecked(g, set))
}

pub(crate) fn check_cds_unchecked(g: &Graph, set: &NodeSet) -> ValidityReport {
    let uncovered_nodes: NodeSet = g
        .nodes()
        .filter(|u| !set.contains(u) && !g.adjacent(*u).iter().any(|v| set.contains(v)))
        .collect();
    let connected = if set.is_empty() {
        g.node_count() == 0
    } else {
        g.induced_connected_unchecked(set)
    };
    ValidityReport {
        dominating: uncovered_nodes.is_empty(),
        connected,
        uncovered_nodes,
    }
}

pub(crate) fn is_valid_cds(g: &Graph, set: &NodeSet) -> bool {
    check_cds_unchecked(g, set).is_valid()
}

/// Exact minimum connected dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub min_size: usize,
    pub witness: NodeSet,
    pub subsets_examined: u64,
}

/// Brute-force minimum CDS. Subsets are tried in order of size, and within a
/// size in lexicographic order of their sorted members, so the witness is the
/// first minimum CDS in that order.
pub fn exact_min_cds(g: &Graph, node_limit: usize) -> Result<OracleResult> {
    let n = g.node_count();
    if n > node_limit || n > 64 {
        return Err(CdsError::TooLarge {
            node_count: n,
            limit: node_limit.min(64),
        });
    }
    if !g.is_connected() {
        return Err(CdsError::Disconnected);
    }
    if n == 0 {
        return Ok(OracleResult {
            min_size: 0,
            witness: NodeSet::new(),
            subsets_examined: 1,
        });
    }

    let open: Vec<u64> = g
        .nodes()
        .map(|u| g.adjacent(u).iter().fold(0u64, |m, v| m | bit(v.index())))
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut examined = 0u64;
    for k in 1..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            examined += 1;
            let mask = combo.iter().fold(0u64, |m, &i| m | bit(i));
            if mask_is_cds(&open, full, mask) {
                return Ok(OracleResult {
                    min_size: k,
                    witness: combo.iter().map(|&i| NodeId::new(i)).collect(),
                    subsets_examined: examined,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full node set of a connected graph is a CDS")
}

fn bit(i: usize) -> u64 {
    1u64 << i
}

fn mask_is_cds(open: &[u64], full: u64, mask: u64) -> bool {
    let mut covered = mask;
    let mut m = mask;
    while m != 0 {
        covered |= open[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    if covered != full {
        return false;
    }
    // flood fill inside the mask
    let mut reached = mask & mask.wrapping_neg();
    loop {
        let mut next = reached;
        let mut m = reached;
        while m != 0 {
            next |= open[m.trailing_zeros() as usize] & mask;
            m &= m - 1;
        }
        if next == reached {
            return reached == mask;
        }
        reached = next;
    }
}

/// Advances `combo` (strictly increasing indices below `n`) to the next
/// combination in lexicographic order. Returns false after the last one.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Ratio `approx_size / exact_size` of an approximate CDS to the minimum one.
pub fn performance_ratio(approx_size: usize, exact_size: usize) -> Result<f64> {
    if exact_size == 0 {
        return Err(CdsError::InvalidSpec("exact size must be at least 1"));
    }
    if approx_size < exact_size {
        return Err(CdsError::OracleViolation {
            approx: approx_size,
            exact: exact_size,
        });
    }
    Ok(approx_size as f64 / exact_size as f64)
}
