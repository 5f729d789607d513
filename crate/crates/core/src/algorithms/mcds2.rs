use alloc::vec;

use crate::algorithms::{connect_dominators, require_connected, Algorithm, CdsResult, Mcds2Rule};
use crate::error::Result;
use crate::graph::{Graph, NodeId, NodeSet};

/// True if the neighborhood of `i` is already covered by its neighbors under `rule`.
fn covered_by_neighbors(g: &Graph, i: NodeId, rule: Mcds2Rule) -> bool {
    let nb = g.adjacent(i);
    let single = || {
        nb.iter()
            .any(|&j| nb.iter().all(|&x| x == j || g.has_edge(j, x)))
    };
    match rule {
        Mcds2Rule::Single => single(),
        Mcds2Rule::Union => {
            single()
                || nb
                    .iter()
                    .all(|&x| nb.iter().any(|&j| j != x && g.has_edge(j, x)))
        }
    }
}

/// Greedily adds nodes until `set` dominates `g`: each step takes the node
/// whose closed neighborhood holds the most uncovered nodes, lowest ID on ties.
/// Returns the added nodes.
fn complete_domination(g: &Graph, set: &mut NodeSet) -> NodeSet {
    let mut covered = vec![false; g.node_count()];
    for &u in set.iter() {
        covered[u.index()] = true;
        for &v in g.adjacent(u) {
            covered[v.index()] = true;
        }
    }
    let gain = |covered: &[bool], c: NodeId| {
        usize::from(!covered[c.index()])
            + g.adjacent(c).iter().filter(|v| !covered[v.index()]).count()
    };

    let mut added = NodeSet::new();
    while covered.iter().any(|c| !c) {
        let best = g
            .nodes()
            .filter(|&c| !set.contains(&c))
            .map(|c| (gain(&covered, c), c))
            .filter(|&(gain, _)| gain > 0)
            .min_by_key(|&(gain, c)| (core::cmp::Reverse(gain), c))
            .map(|(_, c)| c)
            .expect("an uncovered node can cover itself");
        set.insert(best);
        added.insert(best);
        covered[best.index()] = true;
        for &v in g.adjacent(best) {
            covered[v.index()] = true;
        }
    }
    added
}

/// MCDS2: nodes are visited in BFS order from node 0, and node `i` joins
/// unless its neighborhood is covered by its neighbors (see [`Mcds2Rule`]).
///
/// The rule alone does not guarantee a connected dominating set. When the
/// selection falls short, missing coverage is added greedily and the result
/// is joined with [`connect_dominators`]; `repaired` records that this happened.
pub fn mcds2(g: &Graph, rule: Mcds2Rule) -> Result<CdsResult> {
    require_connected(g)?;
    let mut selected: NodeSet = g
        .bfs_order(NodeId::new(0))
        .into_iter()
        .filter(|&i| !covered_by_neighbors(g, i, rule))
        .collect();

    let added = complete_domination(g, &mut selected);
    let connection = connect_dominators(g, &selected)?;
    let repaired = !added.is_empty() || !connection.connectors.is_empty();
    let cds = &selected | &connection.connectors;
    Ok(CdsResult::new(
        Algorithm::Mcds2,
        g,
        cds,
        &selected,
        repaired,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete, cycle, path, star};
    use crate::graph::node_set;

    #[test]
    fn path3_center() {
        let g = path(3);
        // i=0: N(0)\{1} is empty, covered by 1. i=1: 0 and 2 do not cover each other.
        assert!(covered_by_neighbors(&g, NodeId::new(0), Mcds2Rule::Single));
        assert!(!covered_by_neighbors(&g, NodeId::new(1), Mcds2Rule::Single));
        let r = mcds2(&g, Mcds2Rule::Single).unwrap();
        assert_eq!(r.cds, node_set([1]));
        assert!(!r.repaired);
    }

    #[test]
    fn star_center() {
        let r = mcds2(&star(5), Mcds2Rule::Single).unwrap();
        assert_eq!(r.cds, node_set([0]));
        assert!(!r.repaired);
    }

    #[test]
    fn cycle4_keeps_all() {
        let g = cycle(4);
        for i in 0..4 {
            assert!(!covered_by_neighbors(&g, NodeId::new(i), Mcds2Rule::Single));
        }
        let r = mcds2(&g, Mcds2Rule::Single).unwrap();
        assert_eq!(r.cds, node_set([0, 1, 2, 3]));
        assert!(!r.repaired);
    }

    #[test]
    fn complete_graph_needs_repair() {
        // Every node is covered by any neighbor, so nothing is selected.
        let r = mcds2(&complete(4), Mcds2Rule::Single).unwrap();
        assert_eq!(r.cds, node_set([0]));
        assert!(r.repaired && r.is_valid_cds);
    }

    #[test]
    fn union_rule_prunes_more() {
        // Triangle 0-1-2 with pendant 3 on 2 and pendant 4 on 1.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 4)]).unwrap();
        // Node 1: N = {0,2,4}; 4 has no other neighbor inside N(1).
        assert!(!covered_by_neighbors(&g, NodeId::new(1), Mcds2Rule::Union));
        // Node 0: N = {1,2}, adjacent to each other.
        assert!(covered_by_neighbors(&g, NodeId::new(0), Mcds2Rule::Union));
        let r = mcds2(&g, Mcds2Rule::Union).unwrap();
        assert!(r.is_valid_cds && !r.repaired);
        assert_eq!(r.cds, node_set([1, 2]));
    }

    #[test]
    fn single_node() {
        for rule in [Mcds2Rule::Single, Mcds2Rule::Union] {
            assert_eq!(mcds2(&path(1), rule).unwrap().cds, node_set([0]));
        }
    }
}
