//! Influential-seed identification on static networks.
//!
//! [`graph`] loads edge lists into compact adjacency. [`centrality`] scores
//! nodes with classic measures, [`seedselect`] picks spread-out seed sets,
//! [`diffusion`] estimates their independent-cascade reach and [`metrics`]
//! compares selections. [`experiment`] drives whole campaigns and writes CSV.

pub mod centrality;
pub mod diffusion;
pub mod error;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod seedselect;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId, View};

#[cfg(test)]
mod fixtures;
