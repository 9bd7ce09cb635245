//! Baseline and fixture generators: independent pairs, block model,
//! hypercube, and repeated random triangles.

use rand::Rng;

use super::BlockModelSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::substream;

/// Samples the independent-pairs random graph: each of the `C(n, 2)` vertex
/// pairs is an edge with probability `p`.
///
/// Non-edges are skipped geometrically, so the cost is proportional to the
/// number of edges drawn rather than to `n^2`.
pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must be in [0, 1], got {p}"
        )));
    }
    let total_pairs = (n as u64) * (n as u64 - u64::from(n > 0)) / 2;
    if p == 0.0 || total_pairs == 0 {
        return Ok(Graph::from_normalized(n, Vec::new()));
    }
    let mut edges = Vec::new();
    if p == 1.0 {
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
        return Ok(Graph::from_normalized(n, edges));
    }

    let mut rng = substream(seed, 0);
    let ln_skip = (1.0 - p).ln();
    let mut idx: u64 = 0;
    loop {
        let u: f64 = rng.random();
        let gap = ((1.0 - u).ln() / ln_skip).floor();
        idx = idx.saturating_add(if gap >= u64::MAX as f64 {
            u64::MAX
        } else {
            gap as u64
        });
        if idx >= total_pairs {
            break;
        }
        edges.push(decode_pair(n as u64, idx));
        idx += 1;
    }
    Ok(Graph::from_normalized(n, edges))
}

/// Maps a lexicographic pair index to `(u, v)` with `u < v`.
fn decode_pair(n: u64, idx: u64) -> (u32, u32) {
    // pairs before row u: S(u) = u*(2n - u - 1)/2
    let s = |u: u64| u * (2 * n - u - 1) / 2;
    let mut u = (n as f64 - 0.5 - ((n as f64 - 0.5).powi(2) - 2.0 * idx as f64).sqrt())
        .floor()
        .max(0.0) as u64;
    while s(u + 1) <= idx {
        u += 1;
    }
    while s(u) > idx {
        u -= 1;
    }
    let v = u + 1 + (idx - s(u));
    (u as u32, v as u32)
}

/// Samples a graph with independent edges at per-pair probabilities given by
/// a symmetric matrix.
pub fn gen_block_model(spec: &BlockModelSpec, seed: u64) -> Graph {
    let n = spec.n();
    let m = spec.matrix();
    let mut rng = substream(seed, 0);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < m[(i, j)] {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_normalized(n, edges)
}

/// The `dim`-dimensional hypercube: vertices are bit strings, adjacent when
/// they differ in exactly one bit. Deterministic fixture.
pub fn gen_hypercube(dim: u32) -> Result<Graph> {
    if !(1..=24).contains(&dim) {
        return Err(Error::InvalidParameter(format!(
            "hypercube dimension must be in [1, 24], got {dim}"
        )));
    }
    let n: u32 = 1 << dim;
    let mut edges = Vec::with_capacity((n as usize * dim as usize) / 2);
    for v in 0..n {
        for b in 0..dim {
            if v & (1 << b) == 0 {
                edges.push((v, v | (1 << b)));
            }
        }
    }
    Ok(Graph::from_normalized(n as usize, edges))
}

/// Builds a graph by `t` rounds of adding a triangle on three distinct
/// uniformly random vertices.
pub fn gen_just_add_triangles(n: usize, t: u64, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "triangle placement needs at least 3 vertices, got {n}"
        )));
    }
    if t == 0 {
        return Err(Error::InvalidParameter(
            "at least one triangle round is required".into(),
        ));
    }
    let mut rng = substream(seed, 0);
    let mut edges = Vec::with_capacity(3 * t as usize);
    for _ in 0..t {
        let picks = rand::seq::index::sample(&mut rng, n, 3);
        let (a, b, c) = (
            picks.index(0) as u32,
            picks.index(1) as u32,
            picks.index(2) as u32,
        );
        edges.push(norm(a, b));
        edges.push(norm(a, c));
        edges.push(norm(b, c));
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_normalized(n, edges))
}

fn norm(a: u32, b: u32) -> (u32, u32) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}
