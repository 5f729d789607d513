//! Connected dominating set constructors.
//!
//! * [`mmcds`]: greedy two-hop dominating set, 3-hop connector paths, then
//!   ascending-ID pruning.
//! * [`mcds2`]: per-node neighborhood-coverage rule with a validity repair pass.
//! * [`wuli_mcds1`]: Wu-Li marking process with the two pruning rules.
//! * [`das_cds`]: centralized greedy set plus lightest-link component joining.
//!
//! Every constructor is a pure function of the graph and rejects disconnected input.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use core::time::Duration;

use crate::error::{CdsError, Result};
use crate::graph::{Graph, NodeSet};
use crate::verify::is_valid_cds;

mod connect;
mod das;
mod greedy;
mod mcds2;
mod mmcds;
mod prune;
mod wuli;

pub use connect::{connect_dominators, Connection};
pub use das::das_cds;
pub use greedy::{greedy_dominating_set, EffectiveDegreeState};
pub use mcds2::mcds2;
pub use mmcds::mmcds;
pub use prune::prune_cds;
pub use wuli::wuli_mcds1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeRole {
    Dominator,
    Dominatee,
    Connector,
}

impl NodeRole {
    pub fn in_cds(self) -> bool {
        !matches!(self, NodeRole::Dominatee)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Mmcds,
    Mcds1,
    Mcds2,
    Das,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Das,
        Algorithm::Mcds1,
        Algorithm::Mcds2,
        Algorithm::Mmcds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mmcds => "mmcds",
            Algorithm::Mcds1 => "mcds1",
            Algorithm::Mcds2 => "mcds2",
            Algorithm::Das => "das",
        }
    }

    pub fn run(self, g: &Graph, mcds2_rule: Mcds2Rule) -> Result<CdsResult> {
        match self {
            Algorithm::Mmcds => mmcds(g),
            Algorithm::Mcds1 => wuli_mcds1(g),
            Algorithm::Mcds2 => mcds2(g, mcds2_rule),
            Algorithm::Das => das_cds(g),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownName;

impl fmt::Display for UnknownName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown name")
    }
}

impl core::error::Error for UnknownName {}

impl FromStr for Algorithm {
    type Err = UnknownName;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "mmcds" => Ok(Algorithm::Mmcds),
            "mcds1" => Ok(Algorithm::Mcds1),
            "mcds2" => Ok(Algorithm::Mcds2),
            "das" => Ok(Algorithm::Das),
            _ => Err(UnknownName),
        }
    }
}

/// How MCDS2 decides that a node's neighborhood is already covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Mcds2Rule {
    /// Node `i` is dropped if one neighbor `j` has `N(i) \ {j} ⊆ N(j)`.
    #[default]
    Single,
    /// Node `i` is also dropped if every neighbor of `i` is adjacent to some
    /// other neighbor of `i`, i.e. the neighbors jointly cover each other.
    Union,
}

impl Mcds2Rule {
    pub fn name(self) -> &'static str {
        match self {
            Mcds2Rule::Single => "single",
            Mcds2Rule::Union => "union",
        }
    }
}

impl fmt::Display for Mcds2Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mcds2Rule {
    type Err = UnknownName;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s {
            "single" => Ok(Mcds2Rule::Single),
            "union" => Ok(Mcds2Rule::Union),
            _ => Err(UnknownName),
        }
    }
}

/// Output of one constructor run.
#[derive(Debug, Clone, PartialEq)]
pub struct CdsResult {
    pub algorithm: Algorithm,
    pub cds: NodeSet,
    /// Role of every node, indexed by node ID.
    pub roles: Vec<NodeRole>,
    /// A fallback or repair pass ran beyond the algorithm's own rules.
    pub repaired: bool,
    pub is_valid_cds: bool,
    pub size: usize,
    /// Filled in by callers that time the run; the constructors leave it empty.
    pub wall_time: Option<Duration>,
}

impl CdsResult {
    /// Assembles a result; members of `dominators` become dominators, the rest
    /// of `cds` connectors, everything else dominatees.
    pub(crate) fn new(
        algorithm: Algorithm,
        g: &Graph,
        cds: NodeSet,
        dominators: &NodeSet,
        repaired: bool,
    ) -> Self {
        let mut roles = vec![NodeRole::Dominatee; g.node_count()];
        for &u in &cds {
            roles[u.index()] = if dominators.contains(&u) {
                NodeRole::Dominator
            } else {
                NodeRole::Connector
            };
        }
        CdsResult {
            algorithm,
            is_valid_cds: is_valid_cds(g, &cds),
            size: cds.len(),
            cds,
            roles,
            repaired,
            wall_time: None,
        }
    }
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.node_count() == 0 {
        return Err(CdsError::InvalidSpec("graph has no nodes"));
    }
    if !g.is_connected() {
        return Err(CdsError::Disconnected);
    }
    Ok(())
}
