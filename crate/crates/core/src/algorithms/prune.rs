use alloc::vec;

use crate::error::{CdsError, Result};
use crate::graph::{Graph, NodeSet};
use crate::verify::is_valid_cds;

/// Removes redundant members of a valid CDS, visiting members in ascending ID.
///
/// A member is dropped when the remaining set still dominates the graph and
/// still induces a connected subgraph. Removals take effect immediately and the
/// last member is never removed, so the output is 1-minimal.
pub fn prune_cds(g: &Graph, cds: &NodeSet) -> Result<NodeSet> {
    for &u in cds {
        g.check_node(u)?;
    }
    if !is_valid_cds(g, cds) {
        return Err(CdsError::NotValidCds);
    }

    // cover[v] = |N[v] ∩ set|
    let mut cover = vec![0usize; g.node_count()];
    for &u in cds {
        cover[u.index()] += 1;
        for &v in g.adjacent(u) {
            cover[v.index()] += 1;
        }
    }

    let mut set = cds.clone();
    for &x in cds {
        if set.len() <= 1 {
            break;
        }
        let still_dominating =
            cover[x.index()] > 1 && g.adjacent(x).iter().all(|v| cover[v.index()] > 1);
        if !still_dominating {
            continue;
        }
        set.remove(&x);
        if g.induced_connected_unchecked(&set) {
            cover[x.index()] -= 1;
            for &v in g.adjacent(x) {
                cover[v.index()] -= 1;
            }
        } else {
            set.insert(x);
        }
    }
    Ok(set)
}
