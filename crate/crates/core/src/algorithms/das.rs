use alloc::vec::Vec;

use crate::algorithms::{require_connected, Algorithm, CdsResult, EffectiveDegreeState};
use crate::error::Result;
use crate::graph::{Graph, NodeId, NodeSet};

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Centralized greedy CDS with weighted component joining.
///
/// Stage 1 repeatedly adds the node whose closed neighborhood holds the most
/// undominated nodes (lowest ID on ties) until everything is dominated; each
/// node remembers the first selected node that dominated it. Stage 2 treats
/// every `(u, dom(u))` star as a component and repeatedly joins two components
/// through the lightest link between them. A link weighs the number of its
/// endpoints not yet in the CDS; ties go to the lexicographically smallest
/// `(u, v)`. Both endpoints of a chosen link join the CDS.
pub fn das_cds(g: &Graph) -> Result<CdsResult> {
    require_connected(g)?;
    let n = g.node_count();

    let mut state = EffectiveDegreeState::new(g);
    let mut dom = alloc::vec![usize::MAX; n];
    while !state.all_marked() {
        let u = g
            .nodes()
            .filter(|&u| !state.in_set[u.index()])
            .max_by_key(|&u| (state.closed_weight(u), core::cmp::Reverse(u)))
            .expect("an unmarked node exists");
        for v in core::iter::once(u).chain(g.adjacent(u).iter().copied()) {
            if !state.marked[v.index()] {
                dom[v.index()] = u.index();
            }
        }
        state.add(g, u);
    }
    let dominators = state.members();

    let mut components = DisjointSets::new(n);
    for (v, &d) in dom.iter().enumerate() {
        components.union(v, d);
    }
    let mut remaining = (0..n).filter(|&v| components.find(v) == v).count();
    let mut in_cds = state.in_set;

    while remaining > 1 {
        let mut best: Option<(usize, NodeId, NodeId)> = None;
        for (x, y) in g.edges() {
            if components.find(x.index()) == components.find(y.index()) {
                continue;
            }
            let w = usize::from(!in_cds[x.index()]) + usize::from(!in_cds[y.index()]);
            if best.is_none_or(|(bw, _, _)| w < bw) {
                best = Some((w, x, y));
            }
        }
        let (_, x, y) = best.expect("connected graph has a link between components");
        in_cds[x.index()] = true;
        in_cds[y.index()] = true;
        components.union(x.index(), y.index());
        remaining -= 1;
    }

    let cds: NodeSet = g.nodes().filter(|u| in_cds[u.index()]).collect();
    Ok(CdsResult::new(Algorithm::Das, g, cds, &dominators, false))
}
