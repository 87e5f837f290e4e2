//! Hybrid evolving clique networks.
//!
//! Networks grow by attaching complete cliques to existing nodes, chosen by
//! preferential attachment with probability `p` and uniformly otherwise.
//! The crate grows such networks, measures their structure (degree
//! distribution, path length, clustering, clustering spectrum), computes
//! their communicability and Estrada index, and drives ensemble experiments
//! that write the results as CSV.
//!
//! ```
//! use cliquenet::generator::{evolve, CliqueNetConfig};
//! use cliquenet::metrics::clustering::global_clustering;
//!
//! let cfg = CliqueNetConfig::new(5, 2, 0.5).target_nodes(500).seed(7);
//! let g = evolve(&cfg).unwrap();
//! assert_eq!(g.node_count(), 500);
//! assert!(global_clustering(&g) > 0.5);
//! ```

pub mod baselines;
pub mod communicability;
pub mod edgelist;
pub mod error;
pub mod experiment;
pub mod generator;
pub mod graph;
pub mod metrics;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId};
