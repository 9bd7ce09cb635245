//! Degree-targeted overlapping communities.

use rayon::prelude::*;

use super::{sample_members, sample_pairs, union_rounds, CommunityLog, DrocSpec, Round};
use crate::graph::Graph;
use crate::rng::substream;

/// Samples a graph whose vertex `i` has expected degree close to
/// `targets[i]`.
///
/// Runs [`DrocSpec::rounds`] rounds of Bernoulli(`s/n`) membership; a
/// selected pair `(i, j)` is joined with probability `q*t_i*t_j/(s*d)`.
/// Deterministic in `(spec, seed)` and thread-count independent.
pub fn gen_droc(spec: &DrocSpec, seed: u64) -> (Graph, CommunityLog) {
    let n = spec.n();
    let rounds = spec.rounds();
    let member_prob = spec.s() / n as f64;
    // pair probability factors as w_i * w_j
    let scale = (spec.q() / (spec.s() * spec.mean_target())).sqrt();
    let weights: Vec<f64> = spec.targets().iter().map(|t| t * scale).collect();

    let produced: Vec<Round> = (0..rounds)
        .into_par_iter()
        .map(|r| {
            let mut rng = substream(seed, r);
            let members = sample_members(&mut rng, n, member_prob);
            let edges = sample_pairs(&mut rng, &members, |u, v| {
                weights[u as usize] * weights[v as usize]
            });
            Round { members, edges }
        })
        .collect();
    union_rounds(n, produced)
}

/// Clamps `targets` in place until `max t^2 <= s*mean(t)/q` holds, so the
/// per-pair probabilities stay at most 1.
///
/// Values above the bound are cut to the largest integer below it; clamping
/// lowers the mean, so the bound is re-evaluated until it stabilizes.
pub fn cap_targets(targets: &mut [f64], s: f64, q: f64) {
    assert!(!targets.is_empty());
    loop {
        let mean = targets.iter().sum::<f64>() / targets.len() as f64;
        let cap = (s * mean / q).sqrt().floor().max(1.0);
        let mut changed = false;
        for t in targets.iter_mut() {
            if *t > cap {
                *t = cap;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}
