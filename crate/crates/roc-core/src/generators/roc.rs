//! The overlapping-communities samplers.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::{sample_members, sample_pairs, union_rounds, CommunityLog, RocParams, Round};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{substream, AUX_STREAM};

/// Samples a graph from the overlapping-communities model.
///
/// Runs [`RocParams::community_rounds`] rounds; each round selects every
/// vertex independently with probability `s/n` and joins each selected pair
/// with probability `q`, unioning with previously added edges. Rounds draw
/// from per-round substreams and may execute in parallel; the result is a
/// pure function of `(params, seed)`.
pub fn gen_roc(params: &RocParams, seed: u64) -> (Graph, CommunityLog) {
    let rounds = params.community_rounds();
    let member_prob = params.s / params.n as f64;
    let q = params.q;
    let produced: Vec<Round> = (0..rounds)
        .into_par_iter()
        .map(|r| {
            let mut rng = substream(seed, r);
            let members = sample_members(&mut rng, params.n, member_prob);
            let edges = sample_pairs(&mut rng, &members, |_, _| q);
            Round { members, edges }
        })
        .collect();
    union_rounds(params.n, produced)
}

/// Samples the fixed-membership variant: every vertex belongs to exactly
/// `d/(s*q)` communities and every community has exactly `s` members.
///
/// Requires integral `s` and integral `d/(s*q)`. Membership is assigned by
/// shuffling `n * d/(sq)` vertex slots and cutting them into consecutive
/// groups of `s`; a group containing the same vertex twice is repaired by
/// swapping a duplicated slot with a random slot of another group when the
/// swap leaves both groups duplicate-free (up to 100 attempts per group).
/// When `n * d/(sq)` is not divisible by `s`, the final short group is
/// merged into the last full community.
pub fn gen_roc_fixed(params: &RocParams, seed: u64) -> Result<(Graph, CommunityLog)> {
    let s_int = integral(params.s).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "fixed membership requires an integral community size, got s = {}",
            params.s
        ))
    })? as usize;
    let per_vertex = params.d / (params.s * params.q);
    let k = integral(per_vertex).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "memberships per vertex d/(s*q) = {per_vertex} is not a positive integer"
        ))
    })? as usize;
    if k == 0 {
        return Err(Error::InvalidParameter(
            "memberships per vertex d/(s*q) must be at least 1".into(),
        ));
    }

    let n = params.n;
    let total_slots = n * k;
    // group sizes: full groups of s, remainder merged into the last one
    let full_groups = total_slots / s_int;
    let remainder = total_slots % s_int;
    let mut sizes = vec![s_int; full_groups];
    if remainder > 0 {
        *sizes.last_mut().expect("s <= n*k so at least one group") += remainder;
    }

    let mut rng = substream(seed, AUX_STREAM);
    let mut slots: Vec<u32> = (0..n as u32)
        .flat_map(|v| std::iter::repeat_n(v, k))
        .collect();
    slots.shuffle(&mut rng);

    let mut bounds = Vec::with_capacity(sizes.len() + 1);
    bounds.push(0usize);
    for &size in &sizes {
        bounds.push(bounds.last().unwrap() + size);
    }
    for g in 0..sizes.len() {
        repair_group(&mut slots, &bounds, g, &mut rng);
    }

    let mut communities: Vec<Vec<u32>> = Vec::with_capacity(sizes.len());
    for g in 0..sizes.len() {
        let mut members = slots[bounds[g]..bounds[g + 1]].to_vec();
        members.sort_unstable();
        members.dedup();
        communities.push(members);
    }

    let mut all_edges = Vec::new();
    for members in &communities {
        all_edges.extend(sample_pairs(&mut rng, members, |_, _| params.q));
    }
    all_edges.sort_unstable();
    all_edges.dedup();
    Ok((
        Graph::from_normalized(n, all_edges),
        CommunityLog::new(communities),
    ))
}

/// Swaps duplicated slots of group `g` with random slots of other groups
/// until the group holds distinct vertices; a swap is applied only when it
/// leaves both touched groups duplicate-free. Gives up after 100 attempts
/// (the output is then deduplicated, shrinking that community).
fn repair_group(slots: &mut [u32], bounds: &[usize], g: usize, rng: &mut crate::rng::SubstreamRng) {
    let (start, end) = (bounds[g], bounds[g + 1]);
    let outside = slots.len() - (end - start);
    if outside == 0 {
        return;
    }
    let mut attempts = 0;
    while attempts < 100 {
        let Some(p1) = first_duplicate_position(&slots[start..end]).map(|off| start + off) else {
            return;
        };
        attempts += 1;
        let r = rng.random_range(0..outside);
        let p2 = if r < start { r } else { r + (end - start) };
        let (v_in, v_out) = (slots[p1], slots[p2]);
        if v_in == v_out {
            continue;
        }
        let h = match bounds.binary_search(&p2) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let g_has_v_out = slots[start..end]
            .iter()
            .enumerate()
            .any(|(off, &x)| start + off != p1 && x == v_out);
        let (hs, he) = (bounds[h], bounds[h + 1]);
        let h_has_v_in = slots[hs..he]
            .iter()
            .enumerate()
            .any(|(off, &x)| hs + off != p2 && x == v_in);
        if !g_has_v_out && !h_has_v_in {
            slots.swap(p1, p2);
        }
    }
}

fn first_duplicate_position(group: &[u32]) -> Option<usize> {
    let mut seen = std::collections::HashSet::with_capacity(group.len());
    group.iter().position(|&v| !seen.insert(v))
}

/// Returns `x` as an integer when it is one up to fp round-off.
fn integral(x: f64) -> Option<u64> {
    let rounded = x.round();
    let tol = 1e-9 * x.abs().max(1.0);
    ((x - rounded).abs() <= tol && rounded >= 0.0 && rounded <= u64::MAX as f64)
        .then_some(rounded as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motifs::motif_stats;

    #[test]
    fn log_length_equals_round_count() {
        let params = RocParams::new(500, 8.0, 15.0, 0.3).unwrap();
        let (_, log) = gen_roc(&params, 11);
        assert_eq!(log.len() as u64, params.community_rounds());
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let params = RocParams::new(400, 6.0, 12.0, 0.4).unwrap();
        let (g1, log1) = gen_roc(&params, 99);
        let (g2, log2) = gen_roc(&params, 99);
        assert_eq!(g1, g2);
        assert_eq!(log1, log2);
        let (g3, _) = gen_roc(&params, 100);
        assert_ne!(g1, g3);
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let params = RocParams::new(2000, 10.0, 20.0, 0.3).unwrap();
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| gen_roc(&params, 7))
        };
        let (g1, log1) = run(1);
        let (g4, log4) = run(4);
        assert_eq!(g1, g4);
        assert_eq!(log1, log4);
    }

    #[test]
    fn single_full_community_matches_bernoulli_pairs() {
        // s = n selects everyone; d chosen so exactly one round runs, which
        // reduces the model to independent pairs at probability q.
        let n = 30;
        let q = 0.3;
        let d = q * 30.0 * 29.0 / 30.0; // one round exactly
        let params = RocParams::new(n, d, n as f64, q).unwrap();
        assert_eq!(params.community_rounds(), 1);

        let seeds = 3000u64;
        let mut total_edges = 0usize;
        for seed in 0..seeds {
            let (g, log) = gen_roc(&params, seed);
            assert_eq!(log.len(), 1);
            assert_eq!(log.communities()[0].len(), n);
            total_edges += g.m();
        }
        let mean = total_edges as f64 / seeds as f64;
        let expect = 435.0 * q;
        let sd_per_graph = (435.0 * q * (1.0 - q)).sqrt();
        let band = 4.0 * sd_per_graph / (seeds as f64).sqrt();
        assert!(
            (mean - expect).abs() < band,
            "mean edges {mean} vs {expect} (band {band})"
        );
    }

    #[test]
    fn small_n_pair_marginal_matches_closed_form() {
        // pair adjacency probability is 1 - (1 - (s/n)^2 q)^K
        let n = 20;
        let params = RocParams::new(n, 9.0, 10.0, 0.5).unwrap();
        let rounds = params.community_rounds();
        assert_eq!(rounds, 4);
        let per_pair = 1.0 - (1.0 - (0.5f64 * 0.5) * 0.5).powi(rounds as i32);

        let seeds = 4000u64;
        let mut total_edges = 0usize;
        let mut sq_sum = 0.0f64;
        for seed in 0..seeds {
            let m = gen_roc(&params, seed).0.m() as f64;
            total_edges += m as usize;
            sq_sum += m * m;
        }
        let mean = total_edges as f64 / seeds as f64;
        let expect = 190.0 * per_pair;
        let var = sq_sum / seeds as f64 - mean * mean;
        let band = 4.0 * (var / seeds as f64).sqrt();
        assert!(
            (mean - expect).abs() < band,
            "mean edges {mean} vs {expect} (band {band})"
        );
    }

    #[test]
    fn fixed_membership_counts_and_sizes() {
        // d/(sq) = 24/6 = 4 memberships per vertex; 40000 slots cut into
        // 1332 communities of 30 plus a final merged one of 40.
        let params = RocParams::new(10_000, 24.0, 30.0, 0.2).unwrap();
        let (g, log) = gen_roc_fixed(&params, 5).unwrap();
        assert_eq!(log.len(), 1333);
        let sizes: Vec<usize> = log.communities().iter().map(|c| c.len()).collect();
        assert!(sizes[..1332].iter().all(|&s| s == 30));
        assert_eq!(sizes[1332], 40);

        let mut membership = vec![0usize; 10_000];
        for c in log.communities() {
            for &v in c {
                membership[v as usize] += 1;
            }
        }
        assert!(membership.iter().all(|&k| k == 4));
        assert!(g.n() == 10_000);
    }

    #[test]
    fn fixed_membership_exact_division() {
        // 120 * 4 = 480 slots cut into 16 communities of exactly 30
        let params = RocParams::new(120, 24.0, 30.0, 0.2).unwrap();
        let (_, log) = gen_roc_fixed(&params, 2).unwrap();
        assert_eq!(log.len(), 16);
        assert!(log.communities().iter().all(|c| c.len() == 30));
    }

    #[test]
    fn fixed_membership_rejects_fractional_assignment() {
        // 25 / (30 * 0.2) = 25/6 is not an integer
        let params = RocParams::new(100, 25.0, 30.0, 0.2).unwrap();
        let err = gen_roc_fixed(&params, 0).unwrap_err();
        assert!(err.to_string().contains("d/(s*q)"), "{err}");
    }

    #[test]
    fn roc_graphs_have_expected_motif_scale() {
        // sanity on ratios at moderate size: r3 near s*q^2/3 within 25%
        let params = RocParams::new(20_000, 15.0, 30.0, 0.3).unwrap();
        let mut r3 = 0.0;
        let seeds = 3;
        for seed in 0..seeds {
            let (g, _) = gen_roc(&params, seed);
            r3 += motif_stats(&g).r3.unwrap();
        }
        r3 /= seeds as f64;
        let predicted = 30.0 * 0.09 / 3.0;
        assert!(
            (r3 - predicted).abs() / predicted < 0.25,
            "r3 {r3} vs {predicted}"
        );
    }
}
