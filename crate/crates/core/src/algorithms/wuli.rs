use alloc::vec::Vec;

use crate::algorithms::{
    connect_dominators, greedy_dominating_set, require_connected, Algorithm, CdsResult,
};
use crate::error::Result;
use crate::graph::{Graph, NodeId, NodeSet};
use crate::verify::is_valid_cds;

fn has_non_adjacent_neighbors(g: &Graph, v: NodeId) -> bool {
    let nb = g.adjacent(v);
    nb.iter()
        .enumerate()
        .any(|(i, &a)| nb[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
}

/// `N(v) ⊆ N[u]`
fn rule1_covers(g: &Graph, v: NodeId, u: NodeId) -> bool {
    g.adjacent(v).iter().all(|&x| x == u || g.has_edge(u, x))
}

/// `N(v) ⊆ N(u) ∪ N(w)`
fn rule2_covers(g: &Graph, v: NodeId, u: NodeId, w: NodeId) -> bool {
    g.adjacent(v)
        .iter()
        .all(|&x| g.has_edge(u, x) || g.has_edge(w, x))
}

/// Marking process: every node with two non-adjacent neighbors is marked.
pub(crate) fn marking_process(g: &Graph) -> Vec<bool> {
    g.nodes()
        .map(|v| has_non_adjacent_neighbors(g, v))
        .collect()
}

/// Applies both pruning rules to every marked node against the original marking.
pub(crate) fn apply_rules(g: &Graph, marked: &[bool]) -> NodeSet {
    let is_marked = |u: NodeId| marked[u.index()];
    g.nodes()
        .filter(|&v| is_marked(v))
        .filter(|&v| {
            let higher: Vec<NodeId> = g
                .adjacent(v)
                .iter()
                .copied()
                .filter(|&u| u > v && is_marked(u))
                .collect();
            let rule1 = higher.iter().any(|&u| rule1_covers(g, v, u));
            let rule2 = || {
                higher.iter().enumerate().any(|(i, &u)| {
                    higher[i + 1..]
                        .iter()
                        .any(|&w| g.has_edge(u, w) && rule2_covers(g, v, u, w))
                })
            };
            !(rule1 || rule2())
        })
        .collect()
}

/// Wu-Li marking process with Rule 1 and Rule 2 pruning.
///
/// If the surviving set is empty or not a valid CDS (complete graphs mark
/// nothing), the lowest-ID node is used when it alone is a CDS, otherwise the
/// greedy dominating set joined by connector paths. Either fallback sets
/// `repaired`.
pub fn wuli_mcds1(g: &Graph) -> Result<CdsResult> {
    require_connected(g)?;
    let marked = marking_process(g);
    let survivors = apply_rules(g, &marked);
    if !survivors.is_empty() && is_valid_cds(g, &survivors) {
        return Ok(CdsResult::new(
            Algorithm::Mcds1,
            g,
            survivors.clone(),
            &survivors,
            false,
        ));
    }

    let lowest: NodeSet = core::iter::once(NodeId::new(0)).collect();
    if is_valid_cds(g, &lowest) {
        return Ok(CdsResult::new(
            Algorithm::Mcds1,
            g,
            lowest.clone(),
            &lowest,
            true,
        ));
    }
    let dominators = greedy_dominating_set(g);
    let connection = connect_dominators(g, &dominators)?;
    let cds = &dominators | &connection.connectors;
    Ok(CdsResult::new(Algorithm::Mcds1, g, cds, &dominators, true))
}
