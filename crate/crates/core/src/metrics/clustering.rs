//! Local clustering coefficients, their network mean, and the clustering
//! spectrum (mean clustering per degree class).

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::graph::{Graph, NodeId};

/// Per-node clustering `c_i = 2 e_i / (k_i (k_i - 1))`, where `e_i` counts
/// the edges among the neighbors of `i`. Nodes of degree below 2 get 0.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalClustering {
    pub c: Vec<f64>,
    neighbor_edges: Vec<usize>,
}

impl LocalClustering {
    pub fn neighbor_edges(&self) -> &[usize] {
        &self.neighbor_edges
    }

    pub fn mean(&self) -> f64 {
        if self.c.is_empty() {
            0.0
        } else {
            self.c.iter().sum::<f64>() / self.c.len() as f64
        }
    }
}

fn sorted_intersection_len(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

fn edges_among_neighbors(g: &Graph, u: NodeId) -> usize {
    let nbrs = g.neighbors(u);
    // each neighbor edge {v, w} is seen from both v and w
    nbrs.iter()
        .map(|&v| sorted_intersection_len(nbrs, g.neighbors(v)))
        .sum::<usize>()
        / 2
}

pub fn local_clustering(g: &Graph) -> LocalClustering {
    let neighbor_edges: Vec<usize> = (0..g.node_count())
        .into_par_iter()
        .map(|u| edges_among_neighbors(g, u))
        .collect();
    let c = neighbor_edges
        .iter()
        .enumerate()
        .map(|(u, &e)| {
            let k = g.degree(u);
            if k < 2 {
                0.0
            } else {
                2.0 * e as f64 / (k * (k - 1)) as f64
            }
        })
        .collect();
    LocalClustering { c, neighbor_edges }
}

/// Network clustering `C`, the arithmetic mean of all `c_i`.
pub fn global_clustering(g: &Graph) -> f64 {
    local_clustering(g).mean()
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct DegreeClass {
    sum: f64,
    count: usize,
}

/// Mean clustering of the nodes in each occupied degree class.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ClusteringSpectrum {
    classes: BTreeMap<usize, DegreeClass>,
}

impl ClusteringSpectrum {
    pub fn from_local(g: &Graph, local: &LocalClustering) -> Self {
        let mut spectrum = Self::default();
        for (u, &c) in local.c.iter().enumerate() {
            spectrum.add(g.degree(u), c);
        }
        spectrum
    }

    fn add(&mut self, k: usize, c: f64) {
        let class = self.classes.entry(k).or_default();
        class.sum += c;
        class.count += 1;
    }

    /// Pools another spectrum into this one, weighting every node equally.
    pub fn merge(&mut self, other: &ClusteringSpectrum) {
        for (&k, class) in &other.classes {
            let mine = self.classes.entry(k).or_default();
            mine.sum += class.sum;
            mine.count += class.count;
        }
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        self.classes.get(&k).map(|c| c.sum / c.count as f64)
    }

    pub fn count(&self, k: usize) -> usize {
        self.classes.get(&k).map_or(0, |c| c.count)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `(k, C(k), node count)` in ascending degree order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, f64, usize)> + '_ {
        self.classes
            .iter()
            .map(|(&k, c)| (k, c.sum / c.count as f64, c.count))
    }

    /// `(k, C(k))` for fitting.
    pub fn points(&self) -> Vec<(f64, f64)> {
        self.entries().map(|(k, c, _)| (k as f64, c)).collect()
    }
}

pub fn clustering_spectrum(g: &Graph) -> ClusteringSpectrum {
    ClusteringSpectrum::from_local(g, &local_clustering(g))
}
