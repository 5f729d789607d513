use crate::algorithms::{
    connect_dominators, greedy_dominating_set, prune_cds, require_connected, Algorithm, CdsResult,
};
use crate::error::Result;
use crate::graph::Graph;

/// Modified MCDS: greedy dominating set, then connector paths between
/// dominators at most three hops apart, then ascending-ID pruning.
pub fn mmcds(g: &Graph) -> Result<CdsResult> {
    require_connected(g)?;
    let dominators = greedy_dominating_set(g);
    let connection = connect_dominators(g, &dominators)?;
    let full = &dominators | &connection.connectors;
    let cds = prune_cds(g, &full)?;
    Ok(CdsResult::new(
        Algorithm::Mmcds,
        g,
        cds,
        &dominators,
        connection.repaired,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::NodeRole;
    use crate::error::CdsError;
    use crate::fixtures::{path, star};
    use crate::graph::node_set;

    #[test]
    fn small_paths() {
        let r = mmcds(&path(3)).unwrap();
        assert_eq!(r.cds, node_set([1]));
        assert!(r.is_valid_cds && !r.repaired);

        let r = mmcds(&path(5)).unwrap();
        assert_eq!(r.cds, node_set([1, 2, 3]));
        assert_eq!(
            r.roles,
            [
                NodeRole::Dominatee,
                NodeRole::Dominator,
                NodeRole::Dominator,
                NodeRole::Dominator,
                NodeRole::Dominatee
            ]
        );
    }

    #[test]
    fn single_node() {
        assert_eq!(mmcds(&path(1)).unwrap().cds, node_set([0]));
    }

    #[test]
    fn star_center() {
        let r = mmcds(&star(6)).unwrap();
        assert_eq!(r.cds, node_set([0]));
        assert_eq!(r.size, 1);
    }

    #[test]
    fn rejects_disconnected() {
        assert_eq!(mmcds(&Graph::empty(2)), Err(CdsError::Disconnected));
    }
}
