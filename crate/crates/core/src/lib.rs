//! Minimum edge-colored clustering (MinECC) on edge-colored hypergraphs.
//!
//! Given a hypergraph whose edges carry colors and nonnegative weights,
//! color the nodes so that the total weight of edges not entirely in their
//! own color is minimal. Equivalently, delete a minimum-weight set of edges
//! so that no node keeps edges of two colors.
//!
//! Solvers:
//!
//! * [`colorpair::colorpair_flow`]: `(2 - 2/k)`-approximation. Solves the
//!   vertex-cover LP with a single min-cut on a network whose size is linear
//!   in the hypergraph for fixed `k`, then rounds the half-integral optimum.
//! * [`vcflow::vc_flow`]: same LP and rounding, but over the explicit
//!   bad-pair graph. A baseline that scales with the number of bad pairs.
//! * [`localratio::local_ratio_ecc`]: deterministic linear-time
//!   2-approximation.
//! * [`exact`]: exhaustive oracles for small instances.

pub mod colorpair;
pub mod error;
pub mod exact;
pub mod hypergraph;
pub mod localratio;
pub mod maxflow;
pub mod report;
pub mod solve;
pub mod vcflow;

pub use error::{Error, Result};
pub use hypergraph::{
    generate_random, parse_hypergraph, parse_hypergraph_str, BadPair, Color, ColoredHypergraph,
    EdgeDeletionSet, EdgeId, EdgeSpec, GeneratorParams, HyperEdge, HypergraphStats, NodeColoring,
    NodeId, Weight,
};
pub use solve::{solve, Algorithm, SolveOptions, SolveResult};
