use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, NodeId, NodeSet};

/// Selection state shared by the greedy dominating-set builders.
///
/// A node is marked once it is in the set or adjacent to it, and `delta(u)`
/// counts the unmarked nodes of the open neighborhood of `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffectiveDegreeState {
    pub in_set: Vec<bool>,
    pub marked: Vec<bool>,
    pub delta: Vec<usize>,
    unmarked: usize,
}

impl EffectiveDegreeState {
    pub fn new(g: &Graph) -> Self {
        EffectiveDegreeState {
            in_set: vec![false; g.node_count()],
            marked: vec![false; g.node_count()],
            delta: g.nodes().map(|u| g.degree(u)).collect(),
            unmarked: g.node_count(),
        }
    }

    pub fn all_marked(&self) -> bool {
        self.unmarked == 0
    }

    /// Unmarked nodes in the closed neighborhood of `u`.
    pub fn closed_weight(&self, u: NodeId) -> usize {
        self.delta[u.index()] + usize::from(!self.marked[u.index()])
    }

    /// True while adding `u` would still mark something.
    pub fn is_candidate(&self, u: NodeId) -> bool {
        !self.in_set[u.index()] && self.closed_weight(u) > 0
    }

    /// Adds `u` to the set, marking its closed neighborhood.
    pub fn add(&mut self, g: &Graph, u: NodeId) {
        self.in_set[u.index()] = true;
        self.mark(g, u);
        for &v in g.adjacent(u) {
            self.mark(g, v);
        }
    }

    fn mark(&mut self, g: &Graph, u: NodeId) {
        if core::mem::replace(&mut self.marked[u.index()], true) {
            return;
        }
        self.unmarked -= 1;
        for &w in g.adjacent(u) {
            self.delta[w.index()] -= 1;
        }
    }

    pub fn members(&self) -> NodeSet {
        self.in_set
            .iter()
            .enumerate()
            .filter(|(_, &x)| x)
            .map(|(i, _)| NodeId::new(i))
            .collect()
    }
}

/// Round-based greedy dominating set.
///
/// In every round each candidate (a node outside the set whose closed
/// neighborhood still holds an unmarked node) joins iff it beats every other
/// candidate in its two-hop neighborhood: larger `delta`, or equal `delta` and
/// smaller ID. All winners of a round join together. Rounds repeat until every
/// node is marked; the globally best candidate always wins, so each round makes
/// progress. Disconnected graphs are fine; isolated nodes join on their own.
pub fn greedy_dominating_set(g: &Graph) -> NodeSet {
    let two_hop: Vec<NodeSet> = g
        .nodes()
        .map(|u| g.two_hop_neighborhood(u).expect("node in range"))
        .collect();
    let mut state = EffectiveDegreeState::new(g);

    while !state.all_marked() {
        let beats = |u: NodeId, v: NodeId| {
            let (du, dv) = (state.delta[u.index()], state.delta[v.index()]);
            du > dv || (du == dv && u < v)
        };
        let winners: Vec<NodeId> = g
            .nodes()
            .filter(|&u| state.is_candidate(u))
            .filter(|&u| {
                two_hop[u.index()]
                    .iter()
                    .filter(|&&v| state.is_candidate(v))
                    .all(|&v| beats(u, v))
            })
            .collect();
        debug_assert!(!winners.is_empty());
        for u in winners {
            state.add(g, u);
        }
    }
    state.members()
}
