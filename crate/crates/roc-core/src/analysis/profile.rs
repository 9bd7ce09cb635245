//! Degree-binned clustering profile against the inverse law `s*q^2 / r`.

use serde::Serialize;

use crate::graph::Graph;
use crate::motifs::triangle_counts;

/// Binning policy: unit-width bins up to `unit_width_max`, then bins growing
/// by `log_factor`.
#[derive(Debug, Clone)]
pub struct ProfileBinning {
    pub unit_width_max: usize,
    pub log_factor: f64,
}

impl Default for ProfileBinning {
    fn default() -> Self {
        ProfileBinning {
            unit_width_max: 50,
            log_factor: 2.0,
        }
    }
}

/// One degree bin of the profile.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileRow {
    pub degree_lo: usize,
    /// Inclusive upper edge.
    pub degree_hi: usize,
    pub samples: usize,
    pub mean_cc: f64,
    /// Mean of `s*q^2 / r` over the samples in the bin.
    pub predicted_cc: f64,
}

/// Pools the per-vertex clustering of `graphs` into degree bins and tabulates
/// the observed mean against `s*q^2 / r`.
///
/// Only degrees `r >= max(2, 2*s*q)` are profiled, matching the regime in
/// which the inverse law applies. Pass `s = 0, q = 0` to profile every
/// degree from 2 up with a zero reference column (flat baselines).
pub fn degree_cc_profile<I, G>(
    graphs: I,
    s: f64,
    q: f64,
    binning: &ProfileBinning,
) -> Vec<ProfileRow>
where
    I: IntoIterator<Item = G>,
    G: std::borrow::Borrow<Graph>,
{
    let law = s * q * q;
    let min_degree = (2.0f64).max((2.0 * s * q).ceil()) as usize;
    let mut cc_sum: Vec<f64> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();

    for g in graphs {
        let g = g.borrow();
        let per_vertex = triangle_counts(g).per_vertex;
        for v in 0..g.n() as u32 {
            let deg = g.degree(v);
            if deg < min_degree {
                continue;
            }
            if deg >= cc_sum.len() {
                cc_sum.resize(deg + 1, 0.0);
                counts.resize(deg + 1, 0);
            }
            let pairs = (deg * (deg - 1) / 2) as f64;
            cc_sum[deg] += per_vertex[v as usize] as f64 / pairs;
            counts[deg] += 1;
        }
    }
    if cc_sum.is_empty() {
        return Vec::new();
    }

    let max_degree = cc_sum.len() - 1;
    let mut rows = Vec::new();
    let mut emit = |lo: usize, hi: usize| {
        let mut samples = 0usize;
        let mut cc = 0.0f64;
        let mut predicted = 0.0f64;
        for r in lo..=hi.min(max_degree) {
            samples += counts[r];
            cc += cc_sum[r];
            predicted += counts[r] as f64 * law / r as f64;
        }
        if samples > 0 {
            rows.push(ProfileRow {
                degree_lo: lo,
                degree_hi: hi,
                samples,
                mean_cc: cc / samples as f64,
                predicted_cc: predicted / samples as f64,
            });
        }
    };

    let unit_top = binning.unit_width_max.min(max_degree);
    for r in min_degree..=unit_top {
        emit(r, r);
    }
    let mut lo = unit_top.max(min_degree.saturating_sub(1)) + 1;
    while lo <= max_degree {
        let hi = ((lo as f64 * binning.log_factor).ceil() as usize - 1).max(lo);
        emit(lo, hi);
        lo = hi + 1;
    }
    rows
}
