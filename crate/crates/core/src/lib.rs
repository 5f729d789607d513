//! Connected dominating set (virtual backbone) construction for wireless
//! ad-hoc network graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`graph`]: immutable undirected graphs with BFS-based queries,
//! * [`topology`]: seeded random unit-disk topologies,
//! * [`algorithms`]: four CDS constructors and their building blocks,
//! * [`verify`]: validity checks and an exhaustive minimum-CDS oracle,
//! * [`seed`]: per-trial seed derivation for experiments.

#![no_std]

extern crate alloc;

pub mod algorithms;
pub mod error;
pub mod graph;
pub mod seed;
pub mod topology;
pub mod verify;

#[cfg(test)]
pub(crate) mod fixtures;

pub use algorithms::{Algorithm, CdsResult, Mcds2Rule, NodeRole};
pub use error::{CdsError, Result};
pub use graph::{Graph, NodeId, NodeSet};
