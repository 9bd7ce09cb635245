//! Graph models built from random overlapping communities.
//!
//! A graph is generated as the union of many relatively dense random
//! subgraphs ("communities"): each round selects a random vertex subset and
//! sprinkles edges inside it. Community size `s` and internal density `q`
//! control the triangle-to-edge ratio, the four-cycle-to-edge ratio, and the
//! clustering coefficient of the result, independently of the overall edge
//! density. The crate provides:
//!
//! - [`graph`]: an immutable simple undirected graph with edge-list I/O,
//! - [`generators`]: seeded, reproducible samplers for the community models
//!   and the baseline/fixture graphs they are compared against,
//! - [`motifs`]: exact triangle/four-cycle counting and clustering
//!   coefficients, plus brute-force oracles,
//! - [`analysis`]: closed-form predictors, the ratio-based parameter fitter,
//!   connectivity threshold reports, and the community-graph construction,
//! - [`acceptance`]: the end-to-end verification suite with pinned seeds.
//!
//! All generators are pure functions of `(params, seed)` and produce
//! bit-identical output regardless of thread count; see [`rng`] for the
//! substream discipline.

pub mod acceptance;
pub mod analysis;
pub mod edgelist;
pub mod error;
pub mod generators;
pub mod graph;
pub mod motifs;
pub mod rng;

pub use error::{Error, Result};
pub use graph::Graph;
