//! Seeded, reproducible graph samplers.
//!
//! The community models build a graph as a union of rounds: each round picks
//! a random vertex subset ("community") and adds random edges inside it.
//! Every round draws from its own substream (see [`crate::rng`]), rounds may
//! run in parallel, and the union is a set, so output is bit-identical for a
//! fixed `(params, seed)` regardless of thread count.

mod droc;
mod power_law;
mod roc;
mod simple;

pub use droc::{cap_targets, gen_droc};
pub use power_law::sample_power_law;
pub use roc::{gen_roc, gen_roc_fixed};
pub use simple::{gen_block_model, gen_er, gen_hypercube, gen_just_add_triangles};

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Binomial, Distribution};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SubstreamRng;

/// Parameters of the overlapping-communities model.
///
/// `n` vertices, target expected degree `d`, expected community size `s`,
/// and within-community edge probability `q`. Each of the
/// [`community_rounds`](Self::community_rounds) rounds selects every vertex
/// independently with probability `s/n` and joins each selected pair with
/// probability `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RocParams {
    pub n: usize,
    pub d: f64,
    pub s: f64,
    pub q: f64,
}

impl RocParams {
    pub fn new(n: usize, d: f64, s: f64, q: f64) -> Result<Self> {
        if !q.is_finite() || q <= 0.0 || q > 1.0 {
            return Err(Error::InvalidParameter(format!(
                "community density q must be in (0, 1], got {q}"
            )));
        }
        if !s.is_finite() || s < 2.0 || s > n as f64 {
            return Err(Error::InvalidParameter(format!(
                "community size s must satisfy 2 <= s <= n = {n}, got {s}"
            )));
        }
        if !d.is_finite() || d <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "expected degree d must be positive, got {d}"
            )));
        }
        Ok(RocParams { n, d, s, q })
    }

    /// Number of community rounds: `d*n / (q*s*(s-1))` rounded to nearest,
    /// at least 1.
    pub fn community_rounds(&self) -> u64 {
        let raw = self.d * self.n as f64 / (self.q * self.s * (self.s - 1.0));
        (raw.round() as u64).max(1)
    }

    /// `s*q`, the expected within-community degree scale.
    pub fn sq(&self) -> f64 {
        self.s * self.q
    }
}

/// Parameters of the degree-targeted community model.
///
/// Vertex `i` aims at expected degree `targets[i]`; within a community the
/// pair `(i, j)` is joined with probability `q*t_i*t_j / (s*d)` where `d` is
/// the mean target.
#[derive(Debug, Clone, PartialEq)]
pub struct DrocSpec {
    n: usize,
    targets: Vec<f64>,
    s: f64,
    q: f64,
    mean_target: f64,
}

impl DrocSpec {
    pub fn new(n: usize, targets: Vec<f64>, s: f64, q: f64) -> Result<Self> {
        if targets.len() != n {
            return Err(Error::InvalidParameter(format!(
                "expected {n} targets, got {}",
                targets.len()
            )));
        }
        if !q.is_finite() || q <= 0.0 || q > 1.0 {
            return Err(Error::InvalidParameter(format!(
                "community density q must be in (0, 1], got {q}"
            )));
        }
        if !s.is_finite() || s < 2.0 || s > n as f64 {
            return Err(Error::InvalidParameter(format!(
                "community size s must satisfy 2 <= s <= n = {n}, got {s}"
            )));
        }
        for (i, &t) in targets.iter().enumerate() {
            if !t.is_finite() || t <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "target degree of vertex {i} must be positive, got {t}"
                )));
            }
        }
        let mean_target = targets.iter().sum::<f64>() / n as f64;
        // per-pair probability q*t_i*t_j/(s*d) must not exceed 1
        let (worst, &t_max) = targets
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("targets nonempty");
        if t_max * t_max > s * mean_target / q {
            return Err(Error::InvalidParameter(format!(
                "target at vertex {worst} violates max t^2 <= s*d/q: \
                 t = {t_max}, bound = {:.6}",
                (s * mean_target / q).sqrt()
            )));
        }
        Ok(DrocSpec {
            n,
            targets,
            s,
            q,
            mean_target,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// Mean of the target degrees.
    pub fn mean_target(&self) -> f64 {
        self.mean_target
    }

    /// Number of rounds: `n / ((s-1)*q)` rounded to nearest, at least 1.
    pub fn rounds(&self) -> u64 {
        let raw = self.n as f64 / ((self.s - 1.0) * self.q);
        (raw.round() as u64).max(1)
    }
}

/// Symmetric edge-probability matrix for the independent-pairs model.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockModelSpec {
    matrix: DMatrix<f64>,
}

impl BlockModelSpec {
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::InvalidParameter(format!(
                "probability matrix must be square, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        for i in 0..matrix.nrows() {
            for j in 0..matrix.ncols() {
                let x = matrix[(i, j)];
                if !(0.0..=1.0).contains(&x) {
                    return Err(Error::InvalidParameter(format!(
                        "entry ({i}, {j}) = {x} is outside [0, 1]"
                    )));
                }
                if matrix[(i, j)] != matrix[(j, i)] {
                    return Err(Error::InvalidParameter(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(BlockModelSpec { matrix })
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Largest row sum; bounds the expected degree of every vertex.
    pub fn max_row_sum(&self) -> f64 {
        (0..self.matrix.nrows())
            .map(|i| self.matrix.row(i).sum())
            .fold(0.0, f64::max)
    }
}

/// Which vertices each generation round selected, in round order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityLog {
    communities: Vec<Vec<u32>>,
}

impl CommunityLog {
    pub(crate) fn new(communities: Vec<Vec<u32>>) -> Self {
        CommunityLog { communities }
    }

    /// Number of logged rounds.
    pub fn len(&self) -> usize {
        self.communities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.communities.is_empty()
    }

    /// Sorted member list of each community, in round order.
    pub fn communities(&self) -> &[Vec<u32>] {
        &self.communities
    }
}

/// Serializes a community log: header `communities K`, then one line per
/// community of space-separated sorted vertex indices.
pub fn write_community_log(log: &CommunityLog) -> Vec<u8> {
    let mut out = String::new();
    out.push_str(&format!("communities {}\n", log.len()));
    for members in log.communities() {
        let line: Vec<String> = members.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}

/// Parses the community-log format written by [`write_community_log`].
pub fn read_community_log(bytes: &[u8]) -> Result<CommunityLog> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 0,
        message: format!("input is not UTF-8: {e}"),
    })?;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing \"communities K\" header".into(),
    })?;
    let count: usize = header
        .strip_prefix("communities ")
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or(Error::Parse {
            line: 1,
            message: format!("malformed header {header:?}"),
        })?;
    let mut communities = Vec::with_capacity(count);
    for _ in 0..count {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: text.lines().count(),
            message: format!("expected {count} community lines, input ended early"),
        })?;
        let mut members = Vec::new();
        for tok in line.split_ascii_whitespace() {
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("malformed vertex index {tok:?}"),
            })?;
            members.push(v);
        }
        communities.push(members);
    }
    Ok(CommunityLog::new(communities))
}

/// One generated round: selected members (sorted) and the edges added.
pub(crate) struct Round {
    pub members: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
}

/// Selects each of `n` vertices independently with probability `p`,
/// returning a sorted list.
///
/// Sampled as a binomial count followed by a uniform distinct draw, which
/// has the same joint law as per-vertex coin flips.
pub(crate) fn sample_members(rng: &mut SubstreamRng, n: usize, p: f64) -> Vec<u32> {
    let count = Binomial::new(n as u64, p)
        .expect("membership probability is validated")
        .sample(rng) as usize;
    let mut members: Vec<u32> = rand::seq::index::sample(rng, n, count)
        .iter()
        .map(|i| i as u32)
        .collect();
    members.sort_unstable();
    members
}

/// Draws each pair of `members` (sorted) with probability `pair_prob(i, j)`.
pub(crate) fn sample_pairs<F>(
    rng: &mut SubstreamRng,
    members: &[u32],
    mut pair_prob: F,
) -> Vec<(u32, u32)>
where
    F: FnMut(u32, u32) -> f64,
{
    let mut edges = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if rng.random::<f64>() < pair_prob(u, v) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Unions rounds into a graph, logging memberships in round order.
pub(crate) fn union_rounds(n: usize, rounds: Vec<Round>) -> (Graph, CommunityLog) {
    let mut all_edges = Vec::with_capacity(rounds.iter().map(|r| r.edges.len()).sum());
    let mut log = Vec::with_capacity(rounds.len());
    for round in rounds {
        all_edges.extend(round.edges);
        log.push(round.members);
    }
    all_edges.sort_unstable();
    all_edges.dedup();
    (Graph::from_normalized(n, all_edges), CommunityLog::new(log))
}
