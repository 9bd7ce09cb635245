//! Exact motif counting: triangles, four-cycles, clustering coefficients.
//!
//! The fast counters are validated against brute-force enumeration oracles
//! (`brute_force_cycles`) on small graphs. All counters are read-only on an
//! immutable [`Graph`] and parallelize internally with deterministic integer
//! reductions, so totals are independent of thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Upper bound on `n` accepted by the brute-force oracles.
pub const BRUTE_FORCE_MAX_N: usize = 12;

/// Edge, cycle, and clustering summary of a graph.
///
/// `r3 = c3/m` and `r4 = c4/m` are `None` when the graph has no edges.
/// `avg_clustering` averages the local clustering coefficient over vertices
/// of degree at least two and is `None` when no such vertex exists.
#[derive(Debug, Clone, Serialize)]
pub struct MotifStats {
    pub n: usize,
    pub m: u64,
    pub c3: u64,
    pub c4: u64,
    pub r3: Option<f64>,
    pub r4: Option<f64>,
    pub avg_clustering: Option<f64>,
    /// `(degree, frequency)` pairs in increasing degree order.
    pub degree_histogram: Vec<(usize, usize)>,
    /// Number of triangles through each vertex.
    #[serde(skip)]
    pub per_vertex_triangles: Vec<u64>,
}

/// Triangle totals with the per-vertex breakdown.
#[derive(Debug, Clone)]
pub struct TriangleCounts {
    pub total: u64,
    /// `per_vertex[v]` counts triangles containing `v`; sums to `3 * total`.
    pub per_vertex: Vec<u64>,
}

/// Counts triangles by degree-ordered neighbor intersection.
///
/// Each triangle is found exactly once, at its lowest-rank vertex, where
/// rank orders vertices by `(degree, id)`.
pub fn triangle_counts(g: &Graph) -> TriangleCounts {
    let n = g.n();
    // rank[v] = position of v in the (degree, id) ordering
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_unstable_by_key(|&v| (g.degree(v), v));
    let mut rank = vec![0u32; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v as usize] = r as u32;
    }
    // forward lists hold ranks of higher-rank neighbors, sorted
    let fwd: Vec<Vec<u32>> = (0..n as u32)
        .map(|v| {
            let rv = rank[v as usize];
            let mut list: Vec<u32> = g
                .neighbors(v)
                .iter()
                .map(|&w| rank[w as usize])
                .filter(|&rw| rw > rv)
                .collect();
            list.sort_unstable();
            list
        })
        .collect();

    let (total, per_vertex) = (0..n)
        .into_par_iter()
        .with_min_len(512)
        .fold(
            || (0u64, vec![0u64; n]),
            |(mut total, mut per), u| {
                let fu = &fwd[u];
                for &rv in fu {
                    let v = order[rv as usize] as usize;
                    let fv = &fwd[v];
                    let (mut i, mut j) = (0usize, 0usize);
                    while i < fu.len() && j < fv.len() {
                        match fu[i].cmp(&fv[j]) {
                            std::cmp::Ordering::Less => i += 1,
                            std::cmp::Ordering::Greater => j += 1,
                            std::cmp::Ordering::Equal => {
                                let w = order[fu[i] as usize] as usize;
                                total += 1;
                                per[u] += 1;
                                per[v] += 1;
                                per[w] += 1;
                                i += 1;
                                j += 1;
                            }
                        }
                    }
                }
                (total, per)
            },
        )
        .reduce(
            || (0u64, vec![0u64; n]),
            |(t1, mut p1), (t2, p2)| {
                for (a, b) in p1.iter_mut().zip(p2) {
                    *a += b;
                }
                (t1 + t2, p1)
            },
        );
    TriangleCounts { total, per_vertex }
}

/// Number of triangles in `g`.
pub fn count_triangles(g: &Graph) -> u64 {
    triangle_counts(g).total
}

/// Counts simple four-cycles (as unlabeled subgraphs; a K4 contains 3).
///
/// Uses the codegree identity: every four-cycle has two antipodal vertex
/// pairs, so `2 * C4` equals the sum over unordered pairs of
/// `C(codegree, 2)`. Wedges are accumulated per low endpoint, which
/// restricts the sum to pairs at distance <= 2.
pub fn count_four_cycles(g: &Graph) -> u64 {
    let n = g.n();
    let twice: u64 = (0..n as u32)
        .into_par_iter()
        .with_min_len(128)
        .map_init(
            || (vec![0u32; n], Vec::<u32>::new()),
            |(counts, touched), u| {
                for &w in g.neighbors(u) {
                    let nbrs = g.neighbors(w);
                    let start = nbrs.partition_point(|&x| x <= u);
                    for &v in &nbrs[start..] {
                        if counts[v as usize] == 0 {
                            touched.push(v);
                        }
                        counts[v as usize] += 1;
                    }
                }
                let mut local = 0u64;
                for &v in touched.iter() {
                    let c = counts[v as usize] as u64;
                    local += c * (c - 1) / 2;
                    counts[v as usize] = 0;
                }
                touched.clear();
                local
            },
        )
        .sum();
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

/// Local clustering coefficient of `v`, or `None` when `deg(v) < 2`.
pub fn local_clustering(g: &Graph, v: u32) -> Option<f64> {
    let nbrs = g.neighbors(v);
    let deg = nbrs.len();
    if deg < 2 {
        return None;
    }
    let mut links = 0u64;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                links += 1;
            }
        }
    }
    Some(links as f64 / ((deg * (deg - 1) / 2) as f64))
}

/// Mean local clustering over vertices of degree >= 2.
pub fn average_clustering(g: &Graph) -> Option<f64> {
    average_clustering_from(g, &triangle_counts(g).per_vertex)
}

/// Same, from precomputed per-vertex triangle counts.
fn average_clustering_from(g: &Graph, per_vertex: &[u64]) -> Option<f64> {
    let mut sum = 0.0f64;
    let mut count = 0usize;
    for v in 0..g.n() as u32 {
        let deg = g.degree(v);
        if deg >= 2 {
            let pairs = (deg * (deg - 1) / 2) as f64;
            sum += per_vertex[v as usize] as f64 / pairs;
            count += 1;
        }
    }
    (count > 0).then(|| sum / count as f64)
}

/// Assembles the full motif summary of a graph.
pub fn motif_stats(g: &Graph) -> MotifStats {
    let triangles = triangle_counts(g);
    let c4 = count_four_cycles(g);
    let m = g.m() as u64;
    let avg_clustering = average_clustering_from(g, &triangles.per_vertex);
    let mut histogram = std::collections::BTreeMap::new();
    for v in 0..g.n() as u32 {
        *histogram.entry(g.degree(v)).or_insert(0usize) += 1;
    }
    MotifStats {
        n: g.n(),
        m,
        c3: triangles.total,
        c4,
        r3: (m > 0).then(|| triangles.total as f64 / m as f64),
        r4: (m > 0).then(|| c4 as f64 / m as f64),
        avg_clustering,
        degree_histogram: histogram.into_iter().collect(),
        per_vertex_triangles: triangles.per_vertex,
    }
}

/// Exhaustive cycle enumeration for validation; `k` must be 3 or 4 and
/// `n` at most [`BRUTE_FORCE_MAX_N`].
pub fn brute_force_cycles(g: &Graph, k: usize) -> Result<u64> {
    if g.n() > BRUTE_FORCE_MAX_N {
        return Err(Error::BruteForceGuard {
            n: g.n(),
            max: BRUTE_FORCE_MAX_N,
        });
    }
    match k {
        3 => Ok(brute_force_triangles_unguarded(g)),
        4 => Ok(brute_force_four_cycles_unguarded(g)),
        other => Err(Error::InvalidParameter(format!(
            "brute-force cycle length must be 3 or 4, got {other}"
        ))),
    }
}

pub(crate) fn brute_force_triangles_unguarded(g: &Graph) -> u64 {
    let n = g.n() as u32;
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

pub(crate) fn brute_force_four_cycles_unguarded(g: &Graph) -> u64 {
    let n = g.n() as u32;
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    // the three distinct cyclic orderings of {a,b,c,d}
                    let orders = [[a, b, c, d], [a, b, d, c], [a, c, b, d]];
                    for cycle in orders {
                        if g.has_edge(cycle[0], cycle[1])
                            && g.has_edge(cycle[1], cycle[2])
                            && g.has_edge(cycle[2], cycle[3])
                            && g.has_edge(cycle[3], cycle[0])
                        {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, Graph};

    #[test]
    fn triangle_examples() {
        assert_eq!(count_triangles(&complete_graph(4)), 4);
        assert_eq!(count_triangles(&cycle_graph(5)), 0);
    }

    #[test]
    fn four_cycle_examples() {
        assert_eq!(count_four_cycles(&cycle_graph(4)), 1);
        assert_eq!(count_four_cycles(&complete_graph(4)), 3);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_cycles(&complete_graph(4), 4).unwrap(), 3);
        assert_eq!(brute_force_cycles(&cycle_graph(5), 4).unwrap(), 0);
        assert_eq!(brute_force_cycles(&complete_graph(5), 3).unwrap(), 10);
    }

    #[test]
    fn brute_force_guards() {
        let big = complete_graph(13);
        assert!(matches!(
            brute_force_cycles(&big, 3),
            Err(Error::BruteForceGuard { n: 13, .. })
        ));
        assert!(matches!(
            brute_force_cycles(&complete_graph(4), 5),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn local_clustering_examples() {
        let k4 = complete_graph(4);
        for v in 0..4 {
            assert_eq!(local_clustering(&k4, v), Some(1.0));
        }
        // star K_{1,5}: hub 0
        let star = Graph::from_edges(6, (1..6).map(|v| (0, v))).unwrap();
        assert_eq!(local_clustering(&star, 0), Some(0.0));
        assert_eq!(local_clustering(&star, 1), None);
    }

    #[test]
    fn k4_stats() {
        let stats = motif_stats(&complete_graph(4));
        assert_eq!(stats.m, 6);
        assert_eq!(stats.c3, 4);
        assert_eq!(stats.c4, 3);
        assert!((stats.r3.unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((stats.r4.unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(stats.avg_clustering, Some(1.0));
        assert_eq!(stats.degree_histogram, vec![(3, 4)]);
    }

    #[test]
    fn empty_graph_stats() {
        let stats = motif_stats(&Graph::from_edges(3, []).unwrap());
        assert_eq!(stats.m, 0);
        assert_eq!(stats.r3, None);
        assert_eq!(stats.r4, None);
        assert_eq!(stats.avg_clustering, None);
        assert_eq!(stats.degree_histogram, vec![(0, 3)]);
    }

    #[test]
    fn complete_graph_closed_forms() {
        for n in 4..=9usize {
            let g = complete_graph(n);
            let choose = |n: usize, k: usize| -> u64 {
                let mut num = 1u64;
                let mut den = 1u64;
                for i in 0..k {
                    num *= (n - i) as u64;
                    den *= (i + 1) as u64;
                }
                num / den
            };
            assert_eq!(count_triangles(&g), choose(n, 3));
            assert_eq!(count_four_cycles(&g), 3 * choose(n, 4));
        }
    }

    #[test]
    fn even_cycles_are_triangle_free() {
        for n in [4usize, 6, 8, 10] {
            assert_eq!(count_triangles(&cycle_graph(n)), 0);
        }
    }

    #[test]
    fn counts_are_thread_count_independent() {
        let g = crate::generators::gen_er(800, 0.05, 42).unwrap();
        let count_in = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| (count_triangles(&g), count_four_cycles(&g)))
        };
        assert_eq!(count_in(1), count_in(4));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (2..=max_n).prop_flat_map(|n| {
                let pair = (0..n as u32, 0..n as u32).prop_filter("no self-loop", |(a, b)| a != b);
                proptest::collection::vec(pair, 0..(n * n))
                    .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
            })
        }

        proptest! {
            #[test]
            fn counters_match_brute_force(g in arb_graph(9)) {
                prop_assert_eq!(count_triangles(&g), brute_force_cycles(&g, 3).unwrap());
                prop_assert_eq!(count_four_cycles(&g), brute_force_cycles(&g, 4).unwrap());
            }

            #[test]
            fn per_vertex_triangles_sum(g in arb_graph(10)) {
                let counts = triangle_counts(&g);
                let sum: u64 = counts.per_vertex.iter().sum();
                prop_assert_eq!(sum, 3 * counts.total);
            }

            #[test]
            fn local_clustering_matches_per_vertex(g in arb_graph(8)) {
                let counts = triangle_counts(&g);
                for v in 0..g.n() as u32 {
                    let deg = g.degree(v);
                    match local_clustering(&g, v) {
                        None => prop_assert!(deg < 2),
                        Some(c) => {
                            let pairs = (deg * (deg - 1) / 2) as f64;
                            let expect = counts.per_vertex[v as usize] as f64 / pairs;
                            prop_assert!((c - expect).abs() < 1e-12);
                        }
                    }
                }
            }
        }
    }
}
