//! Immutable simple undirected graphs over dense node IDs.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{CdsError, Result};

/// Dense node identifier in `[0, n)`. The total order on IDs drives every tie-break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub const fn new(index: usize) -> Self {
        NodeId(index as u32)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for NodeId {
    fn from(v: u32) -> Self {
        NodeId(v)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type NodeSet = BTreeSet<NodeId>;

/// Builds a `NodeSet` from plain indices.
pub fn node_set<I: IntoIterator<Item = usize>>(ids: I) -> NodeSet {
    ids.into_iter().map(NodeId::new).collect()
}

/// Simple undirected graph. Adjacency lists are sorted and free of
/// self-loops and duplicates; the value is never mutated after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` isolated nodes.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an undirected edge list. Endpoint order within an
    /// edge and edge order within the list do not matter; self-loops, repeated
    /// edges and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(CdsError::InvalidNode {
                        node: x,
                        node_count: n,
                    });
                }
            }
            if u == v {
                return Err(CdsError::SelfLoop(u));
            }
            adjacency[u].push(NodeId::new(v));
            adjacency[v].push(NodeId::new(u));
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0].index();
                return Err(CdsError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    /// Builds a graph from a symmetric predicate evaluated on every unordered pair.
    pub(crate) fn from_pair_predicate<F>(n: usize, mut linked: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if linked(u, v) {
                    adjacency[u].push(NodeId::new(v));
                    adjacency[v].push(NodeId::new(u));
                    edge_count += 1;
                }
            }
        }
        Graph {
            adjacency,
            edge_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Maximum node degree (0 for graphs without edges).
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.node_count()).map(NodeId::new)
    }

    /// All edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = NodeId::new(u);
            list.iter().filter(move |&&v| u < v).map(move |&v| (u, v))
        })
    }

    pub fn check_node(&self, u: NodeId) -> Result<()> {
        if u.index() < self.node_count() {
            Ok(())
        } else {
            Err(CdsError::InvalidNode {
                node: u.index(),
                node_count: self.node_count(),
            })
        }
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: NodeId) -> Result<&[NodeId]> {
        self.check_node(u)?;
        Ok(&self.adjacency[u.index()])
    }

    /// Unchecked variant of [`Graph::neighbors`]; panics when `u` is out of range.
    pub fn adjacent(&self, u: NodeId) -> &[NodeId] {
        &self.adjacency[u.index()]
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.adjacency[u.index()].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency
            .get(u.index())
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// All nodes at distance 1 or 2 from `u`, excluding `u` itself.
    pub fn two_hop_neighborhood(&self, u: NodeId) -> Result<NodeSet> {
        self.check_node(u)?;
        let mut out = NodeSet::new();
        for &v in self.adjacent(u) {
            out.insert(v);
            out.extend(self.adjacent(v).iter().copied());
        }
        out.remove(&u);
        Ok(out)
    }

    /// BFS hop distances from `source`; `None` marks unreachable nodes.
    pub fn distances_from(&self, source: NodeId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count()];
        let mut queue = VecDeque::new();
        dist[source.index()] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u.index()].unwrap_or(0);
            for &v in self.adjacent(u) {
                if dist[v.index()].is_none() {
                    dist[v.index()] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Nodes in BFS order from `source`, visiting neighbors in ascending ID order.
    pub fn bfs_order(&self, source: NodeId) -> Vec<NodeId> {
        let mut seen = vec![false; self.node_count()];
        let mut order = Vec::with_capacity(self.node_count());
        let mut queue = VecDeque::new();
        seen[source.index()] = true;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in self.adjacent(u) {
                if !seen[v.index()] {
                    seen[v.index()] = true;
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// True iff every node is reachable from node 0. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        match self.node_count() {
            0 => true,
            n => self.bfs_order(NodeId::new(0)).len() == n,
        }
    }

    /// True iff the subgraph induced by `set` is connected. Sets with at most
    /// one member count as connected.
    pub fn induced_connected(&self, set: &NodeSet) -> Result<bool> {
        for &u in set {
            self.check_node(u)?;
        }
        Ok(self.induced_connected_unchecked(set))
    }

    pub(crate) fn induced_connected_unchecked(&self, set: &NodeSet) -> bool {
        let Some(&start) = set.iter().next() else {
            return true;
        };
        let mut member = vec![false; self.node_count()];
        for &u in set {
            member[u.index()] = true;
        }
        self.induced_component_size(&member, start) == set.len()
    }

    /// Size of the component containing `start` within the subgraph induced by `member`.
    pub(crate) fn induced_component_size(&self, member: &[bool], start: NodeId) -> usize {
        let mut seen = vec![false; self.node_count()];
        let mut stack = vec![start];
        seen[start.index()] = true;
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for &v in self.adjacent(u) {
                if member[v.index()] && !seen[v.index()] {
                    seen[v.index()] = true;
                    stack.push(v);
                }
            }
        }
        count
    }

    /// Shortest `u -> v` path with at most `max_hops` edges (`None` = unbounded).
    /// Among equally short paths the lexicographically smallest node sequence wins.
    pub fn shortest_path(
        &self,
        u: NodeId,
        v: NodeId,
        max_hops: Option<usize>,
    ) -> Result<Option<Vec<NodeId>>> {
        self.check_node(u)?;
        self.check_node(v)?;
        let to_target = self.distances_from(v);
        let Some(len) = to_target[u.index()] else {
            return Ok(None);
        };
        if max_hops.is_some_and(|limit| len > limit) {
            return Ok(None);
        }
        // Walk forward from u, always stepping to the smallest neighbor one hop closer to v.
        let mut path = Vec::with_capacity(len + 1);
        let mut cur = u;
        path.push(cur);
        while cur != v {
            let want = to_target[cur.index()].map(|d| d - 1);
            cur = *self
                .adjacent(cur)
                .iter()
                .find(|w| to_target[w.index()] == want)
                .expect("BFS layer has a predecessor");
            path.push(cur);
        }
        Ok(Some(path))
    }

    /// FNV-1a hash over the node count and sorted edge list. Two graphs with the
    /// same fingerprint were, for all practical purposes, built from the same edges.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.node_count() as u64);
        for (u, v) in self.edges() {
            feed(u.index() as u64);
            feed(v.index() as u64);
        }
        h
    }
}
