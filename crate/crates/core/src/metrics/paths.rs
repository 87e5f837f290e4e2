//! Average shortest-path length by breadth-first search.
//!
//! Every BFS row contributes an integer distance sum, so totals are exact
//! and independent of how sources are scheduled across worker threads.

use std::collections::VecDeque;

use rand::seq::index;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generator::seeded_rng;
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sources {
    All,
    /// `count` distinct sources drawn uniformly with the given seed.
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathStats {
    pub mean_length: f64,
    pub source_count: usize,
    pub exact: bool,
    /// Ordered pairs the mean is taken over.
    pub pair_count: u64,
    pub distance_sum: u64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Row {
    distance_sum: u64,
    reached: usize,
    first_unreached: Option<NodeId>,
}

fn bfs_row(g: &Graph, source: NodeId, dist: &mut [u32], queue: &mut VecDeque<NodeId>) -> Row {
    dist.fill(u32::MAX);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    let mut row = Row::default();
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        row.distance_sum += u64::from(du);
        row.reached += 1;
        for &v in g.neighbors(u) {
            if dist[v] == u32::MAX {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
    if row.reached < g.node_count() {
        row.first_unreached = dist.iter().position(|&d| d == u32::MAX);
    }
    row
}

fn source_list(g: &Graph, sources: Sources) -> Vec<NodeId> {
    let n = g.node_count();
    match sources {
        Sources::All => (0..n).collect(),
        Sources::Sample { count, seed } if count < n => {
            let mut picked = index::sample(&mut seeded_rng(seed), n, count).into_vec();
            picked.sort_unstable();
            picked
        }
        Sources::Sample { .. } => (0..n).collect(),
    }
}

fn rows(g: &Graph, sources: &[NodeId]) -> Vec<(NodeId, Row)> {
    let n = g.node_count();
    sources
        .par_iter()
        .map_init(
            || (vec![u32::MAX; n], VecDeque::with_capacity(n)),
            |(dist, queue), &s| (s, bfs_row(g, s, dist, queue)),
        )
        .collect()
}

fn check_size(g: &Graph) -> Result<()> {
    if g.node_count() < 2 {
        return Err(Error::InvalidArgument(format!(
            "path length needs at least 2 nodes, got {}",
            g.node_count()
        )));
    }
    Ok(())
}

/// Mean geodesic distance over all ordered pairs of distinct nodes.
///
/// With [`Sources::Sample`] the mean runs over pairs whose first node is a
/// sampled source, which is an unbiased estimate of the full mean. Fails on
/// disconnected graphs, where some distances are undefined.
pub fn average_shortest_path_length(g: &Graph, sources: Sources) -> Result<PathStats> {
    check_size(g)?;
    let n = g.node_count();
    let list = source_list(g, sources);
    let mut distance_sum = 0u64;
    for (s, row) in rows(g, &list) {
        if let Some(target) = row.first_unreached {
            return Err(Error::Unreachable { from: s, target });
        }
        distance_sum += row.distance_sum;
    }
    let pair_count = (list.len() * (n - 1)) as u64;
    Ok(PathStats {
        mean_length: distance_sum as f64 / pair_count as f64,
        source_count: list.len(),
        exact: list.len() == n,
        pair_count,
        distance_sum,
    })
}

/// Mean geodesic distance over ordered pairs that are connected by a path.
/// On a connected graph this equals [`average_shortest_path_length`].
pub fn average_reachable_path_length(g: &Graph, sources: Sources) -> Result<PathStats> {
    check_size(g)?;
    let n = g.node_count();
    let list = source_list(g, sources);
    let (distance_sum, pair_count) = rows(g, &list)
        .into_iter()
        .fold((0u64, 0u64), |(d, p), (_, row)| {
            (d + row.distance_sum, p + (row.reached - 1) as u64)
        });
    if pair_count == 0 {
        return Err(Error::InvalidArgument("graph has no connected pairs".into()));
    }
    Ok(PathStats {
        mean_length: distance_sum as f64 / pair_count as f64,
        source_count: list.len(),
        exact: list.len() == n,
        pair_count,
        distance_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{evolve, CliqueNetConfig};

    fn complete(n: usize) -> Graph {
        let mut g = Graph::with_nodes(n);
        g.complete_subgraph(&(0..n).collect::<Vec<_>>()).unwrap();
        g
    }

    #[test]
    fn complete_graph_has_unit_length() {
        for n in 2..7 {
            let stats = average_shortest_path_length(&complete(n), Sources::All).unwrap();
            assert_eq!(stats.mean_length, 1.0);
            assert!(stats.exact);
            assert_eq!(stats.source_count, n);
        }
    }

    #[test]
    fn three_node_path() {
        // Four ordered pairs at distance 1, two at distance 2.
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let stats = average_shortest_path_length(&g, Sources::All).unwrap();
        assert_eq!(stats.distance_sum, 8);
        assert_eq!(stats.pair_count, 6);
        assert!((stats.mean_length - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn disconnected_graph_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            average_shortest_path_length(&g, Sources::All),
            Err(Error::Unreachable { from: 0, target: 2 })
        ));
        let reach = average_reachable_path_length(&g, Sources::All).unwrap();
        assert_eq!(reach.mean_length, 1.0);
        assert_eq!(reach.pair_count, 4);
        assert!(average_shortest_path_length(&Graph::with_nodes(1), Sources::All).is_err());
    }

    #[test]
    fn full_sample_matches_exact() {
        let g = evolve(&CliqueNetConfig::new(5, 2, 0.5).steps(200).seed(5)).unwrap();
        let exact = average_shortest_path_length(&g, Sources::All).unwrap();
        let full = average_shortest_path_length(
            &g,
            Sources::Sample {
                count: g.node_count(),
                seed: 99,
            },
        )
        .unwrap();
        assert_eq!(exact, full);
        assert_eq!(exact.mean_length.to_bits(), full.mean_length.to_bits());

        let sampled = average_shortest_path_length(&g, Sources::Sample { count: 150, seed: 1 }).unwrap();
        assert!(!sampled.exact);
        assert_eq!(sampled.source_count, 150);
        assert!((sampled.mean_length - exact.mean_length).abs() < 0.2);
        assert_eq!(
            average_reachable_path_length(&g, Sources::All).unwrap(),
            exact
        );
    }
}
