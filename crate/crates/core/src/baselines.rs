//! Erdős–Rényi baseline in the fixed-edge-count ensemble `G(N, M)`.

use rand::seq::index;

use crate::edgelist::Provenance;
use crate::error::{Error, Result};
use crate::generator::seeded_rng;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ErConfig {
    pub nodes: usize,
    pub edges: usize,
    pub seed: u64,
}

impl ErConfig {
    pub fn new(nodes: usize, edges: usize, seed: u64) -> Self {
        Self { nodes, edges, seed }
    }

    /// Edge count `round(n * mean_degree / 2)`.
    pub fn matched(nodes: usize, mean_degree: f64, seed: u64) -> Self {
        Self::new(nodes, (nodes as f64 * mean_degree / 2.0).round() as usize, seed)
    }

    pub fn max_edges(&self) -> usize {
        self.nodes * self.nodes.saturating_sub(1) / 2
    }

    pub fn validate(&self) -> Result<()> {
        if self.edges > self.max_edges() {
            return Err(Error::Config(format!(
                "{} edges requested but {} nodes allow at most {}",
                self.edges,
                self.nodes,
                self.max_edges()
            )));
        }
        Ok(())
    }

    pub fn provenance(&self) -> Provenance {
        Provenance::new()
            .with("model", "er")
            .with("n", self.nodes)
            .with("m_edges", self.edges)
            .with("seed", self.seed)
    }
}

/// Exactly `cfg.edges` distinct edges drawn uniformly without replacement
/// from all unordered node pairs.
pub fn er_random_graph(cfg: &ErConfig) -> Result<Graph> {
    cfg.validate()?;
    let n = cfg.nodes;
    let mut picked = index::sample(&mut seeded_rng(cfg.seed), cfg.max_edges(), cfg.edges).into_vec();
    picked.sort_unstable();

    // Pair indices enumerate the upper triangle row by row: row u holds
    // (u, u+1) .. (u, n-1).
    let mut g = Graph::with_nodes(n);
    let mut u = 0;
    let mut row_start = 0;
    for idx in picked {
        while idx >= row_start + (n - 1 - u) {
            row_start += n - 1 - u;
            u += 1;
        }
        let v = u + 1 + (idx - row_start);
        g.add_edge_if_absent(u, v)?;
    }
    debug_assert_eq!(g.edge_count(), cfg.edges);
    Ok(g)
}

/// Seed of the `attempt`-th redraw after a disconnected ER sample.
pub fn resample_seed(seed: u64, attempt: usize) -> u64 {
    seed.wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Draws until the graph is connected, trying at most `max_attempts` seeds.
/// Returns the graph and the seed that produced it.
pub fn connected_er_graph(cfg: &ErConfig, max_attempts: usize) -> Result<(Graph, u64)> {
    for attempt in 0..max_attempts {
        let seed = resample_seed(cfg.seed, attempt);
        let g = er_random_graph(&ErConfig { seed, ..*cfg })?;
        if g.is_connected() {
            return Ok((g, seed));
        }
    }
    Err(Error::ResampleLimit {
        attempts: max_attempts,
        n: cfg.nodes,
        edges: cfg.edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::clustering::global_clustering;

    #[test]
    fn forced_complete_graph() {
        let g = er_random_graph(&ErConfig::new(5, 10, 1)).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(g.degrees().all(|k| k == 4));
    }

    #[test]
    fn empty_draw() {
        let g = er_random_graph(&ErConfig::new(100, 0, 1)).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (100, 0));
        assert_eq!(global_clustering(&g), 0.0);
    }

    #[test]
    fn too_many_edges() {
        assert!(matches!(
            er_random_graph(&ErConfig::new(5, 11, 1)),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn exact_edge_count_and_determinism() {
        for seed in 0..5 {
            let cfg = ErConfig::matched(300, 6.66, seed);
            assert_eq!(cfg.edges, 999);
            let g = er_random_graph(&cfg).unwrap();
            g.validate().unwrap();
            assert_eq!(g.edge_count(), 999);
            assert_eq!(g.degrees().sum::<usize>(), 2 * 999);
            assert_eq!(g, er_random_graph(&cfg).unwrap());
        }
    }

    #[test]
    fn pairs_are_uniform() {
        // Every pair of K_4 should appear in about half of the 3-edge draws.
        let mut hits = [[0usize; 4]; 4];
        let draws = 20_000;
        for seed in 0..draws {
            let g = er_random_graph(&ErConfig::new(4, 3, seed)).unwrap();
            for (u, v) in g.edges() {
                hits[u][v] += 1;
            }
        }
        for (u, row) in hits.iter().enumerate() {
            for (v, &count) in row.iter().enumerate().skip(u + 1) {
                let f = count as f64 / draws as f64;
                assert!((f - 0.5).abs() < 0.02, "pair ({u},{v}) frequency {f}");
            }
        }
    }

    #[test]
    fn resampling() {
        let (g, _) = connected_er_graph(&ErConfig::new(30, 120, 4), 10).unwrap();
        assert!(g.is_connected());
        assert!(matches!(
            connected_er_graph(&ErConfig::new(30, 5, 4), 3),
            Err(Error::ResampleLimit { attempts: 3, .. })
        ));
    }
}
