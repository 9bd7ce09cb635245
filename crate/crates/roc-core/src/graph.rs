//! Simple undirected graph: immutable after construction, with sorted
//! adjacency lists.
//!
//! Vertices are dense indices `0..n`; isolated vertices are representable.
//! Edges are stored once, normalized to `u < v`, and deduplicated (union
//! semantics on repeated insertion). Adjacency lists are kept sorted so that
//! codegree and motif counting can use linear merges.

use crate::error::{Error, Result};

/// Immutable simple undirected graph.
///
/// After construction the graph never changes, so it can be shared freely
/// across threads; all queries are read-only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    /// CSR offsets, length `n + 1`.
    offsets: Vec<usize>,
    /// Concatenated sorted neighbor lists, length `2m`.
    neighbors: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list.
    ///
    /// Pairs are normalized to `u < v` and deduplicated; the input order is
    /// irrelevant to the result. Out-of-range indices and self-loops are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a as usize >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a as u64,
                    n,
                });
            }
            if b as usize >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: b as u64,
                    n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a as u64));
            }
            list.push(if a < b { (a, b) } else { (b, a) });
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_normalized(n, list))
    }

    /// Builds from edges already normalized (`u < v`), sorted, and distinct.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(u32, u32)>) -> Self {
        let m = edges.len();
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut neighbors = vec![0u32; 2 * m];
        for &(u, v) in &edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph {
            n,
            m,
            offsets,
            neighbors,
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Degree of vertex `v`.
    pub fn degree(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Adjacency test by binary search in the smaller list.
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n as u32).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of common neighbors of `u` and `v`, by sorted-list merge.
    pub fn codegree(&self, u: u32, v: u32) -> Result<usize> {
        if u as usize >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u as u64,
                n: self.n,
            });
        }
        if v as usize >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v as u64,
                n: self.n,
            });
        }
        if u == v {
            return Err(Error::InvalidParameter(
                "codegree requires two distinct vertices".into(),
            ));
        }
        Ok(intersection_size(self.neighbors(u), self.neighbors(v)))
    }

    /// Labels vertices by connected component.
    ///
    /// Components are numbered in order of their smallest vertex, so the
    /// labeling is deterministic.
    pub fn connected_components(&self) -> ComponentLabels {
        const UNSEEN: u32 = u32::MAX;
        let mut labels = vec![UNSEEN; self.n];
        let mut count = 0u32;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n as u32 {
            if labels[start as usize] != UNSEEN {
                continue;
            }
            labels[start as usize] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if labels[w as usize] == UNSEEN {
                        labels[w as usize] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        ComponentLabels {
            labels,
            count: count as usize,
        }
    }

    /// Degrees of all vertices.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n as u32).map(|v| self.degree(v)).collect()
    }

    /// Number of vertices with no incident edge.
    pub fn isolated_vertex_count(&self) -> usize {
        (0..self.n as u32).filter(|&v| self.degree(v) == 0).count()
    }
}

/// Partition of vertices into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabels {
    /// `labels[v]` is the component id of vertex `v`.
    pub labels: Vec<u32>,
    /// Number of components.
    pub count: usize,
}

/// Size of the intersection of two sorted slices.
pub(crate) fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    let mut i = 0;
    let mut j = 0;
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// The complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_normalized(n, edges)
}

/// The simple cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|u| (u, u + 1)).collect();
    edges.push((0, n as u32 - 1));
    Graph::from_edges(n, edges).expect("cycle edges are valid")
}

/// The path on `n` vertices.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::from_normalized(n, edges)
}
