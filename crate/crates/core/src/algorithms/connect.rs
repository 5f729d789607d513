use alloc::vec;
use alloc::vec::Vec;

use crate::error::{CdsError, Result};
use crate::graph::{Graph, NodeId, NodeSet};

/// Connector nodes chosen by [`connect_dominators`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Connection {
    pub connectors: NodeSet,
    /// True if the unrestricted fallback join had to run after the 3-hop pass.
    pub repaired: bool,
}

const MAX_CONNECT_HOPS: usize = 3;

/// Component label per node of the subgraph induced by `member`; non-members get `None`.
fn component_labels(g: &Graph, member: &[bool]) -> (Vec<Option<usize>>, usize) {
    let mut label = vec![None; g.node_count()];
    let mut count = 0;
    for start in g.nodes() {
        if !member[start.index()] || label[start.index()].is_some() {
            continue;
        }
        label[start.index()] = Some(count);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in g.adjacent(u) {
                if member[v.index()] && label[v.index()].is_none() {
                    label[v.index()] = Some(count);
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Joins `dominators` into one connected subgraph by adding path interiors.
///
/// Dominator pairs `(a, b)`, `a < b`, are visited in lexicographic order. When
/// `a` and `b` are at most three hops apart and still in different components
/// of the subgraph induced by the dominators plus the connectors chosen so far,
/// the interior of the canonical shortest `a`-`b` path becomes connectors.
///
/// For a dominating set this pass always ends with a single component. If it
/// does not (the input was not dominating), the closest pair of members in
/// different components is joined by an unrestricted shortest path until one
/// component remains, and the result is flagged `repaired`.
pub fn connect_dominators(g: &Graph, dominators: &NodeSet) -> Result<Connection> {
    for &u in dominators {
        g.check_node(u)?;
    }
    if !g.is_connected() {
        return Err(CdsError::Disconnected);
    }

    let mut member = vec![false; g.node_count()];
    for &u in dominators {
        member[u.index()] = true;
    }
    let doms: Vec<NodeId> = dominators.iter().copied().collect();
    let mut connection = Connection::default();
    let (mut label, mut components) = component_labels(g, &member);

    for (i, &a) in doms.iter().enumerate() {
        if components <= 1 {
            break;
        }
        let dist = g.distances_from(a);
        for &b in &doms[i + 1..] {
            if label[a.index()] == label[b.index()] {
                continue;
            }
            if !dist[b.index()].is_some_and(|d| d <= MAX_CONNECT_HOPS) {
                continue;
            }
            let path = g
                .shortest_path(a, b, Some(MAX_CONNECT_HOPS))?
                .expect("distance already checked");
            add_interior(&path, &mut member, &mut connection.connectors);
            (label, components) = component_labels(g, &member);
        }
    }

    while components > 1 {
        connection.repaired = true;
        let (a, b) = closest_cross_pair(g, &member, &label);
        let path = g
            .shortest_path(a, b, None)?
            .expect("connected graph has a path");
        add_interior(&path, &mut member, &mut connection.connectors);
        (label, components) = component_labels(g, &member);
    }

    Ok(connection)
}

fn add_interior(path: &[NodeId], member: &mut [bool], connectors: &mut NodeSet) {
    if path.len() <= 2 {
        return;
    }
    for &x in &path[1..path.len() - 1] {
        if !member[x.index()] {
            member[x.index()] = true;
            connectors.insert(x);
        }
    }
}

/// Pair `(a, b)`, `a < b`, of members in different components at minimum hop
/// distance; ties go to the lexicographically smallest pair.
fn closest_cross_pair(g: &Graph, member: &[bool], label: &[Option<usize>]) -> (NodeId, NodeId) {
    let mut best: Option<(usize, NodeId, NodeId)> = None;
    for a in g.nodes().filter(|a| member[a.index()]) {
        let dist = g.distances_from(a);
        for b in g.nodes().skip(a.index() + 1) {
            if !member[b.index()] || label[a.index()] == label[b.index()] {
                continue;
            }
            if let Some(d) = dist[b.index()] {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, a, b));
                }
            }
        }
    }
    let (_, a, b) = best.expect("at least two components");
    (a, b)
}
