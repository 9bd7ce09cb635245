//! The community graph: one vertex per generation round, adjacent when two
//! communities share a member.

use crate::error::{Error, Result};
use crate::generators::CommunityLog;
use crate::graph::Graph;

/// Builds the community graph of a log over `n` base vertices and reports
/// how many communities are isolated (share no vertex with any other).
pub fn community_graph(log: &CommunityLog, n: usize) -> Result<(Graph, usize)> {
    let communities = log.communities();
    let k = communities.len();
    let mut owners: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (c, members) in communities.iter().enumerate() {
        for &v in members {
            if v as usize >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n,
                });
            }
            owners[v as usize].push(c as u32);
        }
    }
    let mut edges = Vec::new();
    for list in &owners {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                if a != b {
                    edges.push(if a < b { (a, b) } else { (b, a) });
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::from_normalized(k, edges);
    let isolated = graph.isolated_vertex_count();
    Ok((graph, isolated))
}
