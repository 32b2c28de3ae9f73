//! Edge-deletion machinery for λ-edge-connected graphs and digraphs.
//!
//! Given a λ-connected (di)graph, this crate classifies edges as deletable or
//! undeletable, searches for a set of k edges whose removal keeps the graph
//! λ-connected (optionally maximizing total weight), and reduces the
//! parameterized minimum-equivalent-digraph problem to per-component λ = 1
//! searches. Small instances can be cross-checked against a brute-force
//! oracle, and seeded generators produce reproducible test families.
//!
//! ```
//! use lambda_ecs::graph::Graph;
//! use lambda_ecs::pipeline::{find_deletion_set, SolveConfig};
//!
//! // an 8-cycle: any single edge can go, no pair can
//! let g = Graph::new(8, (0..8).map(|i| (i, (i + 1) % 8)).collect(), false).unwrap();
//! let cfg = SolveConfig::default();
//! assert!(find_deletion_set(&g, 1, 1, &cfg).unwrap().is_some());
//! assert!(find_deletion_set(&g, 1, 2, &cfg).unwrap().is_none());
//! ```
//!
//! The `examples/` directory has one runnable program per capability:
//! classification, decision search, weighted search, cut chains, the
//! minimum-equivalent-digraph front-end, instance generation, and oracle
//! cross-checks. The `lambda-ecs` binary exposes the same operations over a
//! DIMACS-style file format; see the README for the format and exit codes.

pub mod chain;
pub mod classify;
pub mod cli;
pub mod error;
pub mod flow;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod solver;

pub use error::{Error, Result};
