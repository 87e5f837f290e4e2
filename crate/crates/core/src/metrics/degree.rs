use crate::graph::Graph;

/// Exact degree counts with the distribution `P(k)` and the inclusive
/// cumulative distribution `CP(k) = P(degree >= k)`.
///
/// Histograms of several graphs can be pooled with [`DegreeHistogram::merge`],
/// which weights every node equally.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DegreeHistogram {
    counts: Vec<usize>,
    // at_least[k] = number of nodes with degree >= k
    at_least: Vec<usize>,
    total: usize,
}

impl DegreeHistogram {
    pub fn from_graph(g: &Graph) -> Self {
        Self::from_degrees(g.degrees())
    }

    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut counts = Vec::new();
        for k in degrees {
            if k >= counts.len() {
                counts.resize(k + 1, 0);
            }
            counts[k] += 1;
        }
        Self::from_counts(counts)
    }

    fn from_counts(counts: Vec<usize>) -> Self {
        let mut at_least = vec![0; counts.len() + 1];
        for k in (0..counts.len()).rev() {
            at_least[k] = at_least[k + 1] + counts[k];
        }
        let total = at_least[0];
        Self {
            counts,
            at_least,
            total,
        }
    }

    pub fn merge(&mut self, other: &DegreeHistogram) {
        let mut counts = std::mem::take(&mut self.counts);
        if other.counts.len() > counts.len() {
            counts.resize(other.counts.len(), 0);
        }
        for (k, &c) in other.counts.iter().enumerate() {
            counts[k] += c;
        }
        *self = Self::from_counts(counts);
    }

    pub fn node_count(&self) -> usize {
        self.total
    }

    pub fn count(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn p(&self, k: usize) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.count(k) as f64 / self.total as f64
    }

    pub fn cp(&self, k: usize) -> f64 {
        if self.total == 0 {
            return 0.0;
        }
        self.at_least.get(k).copied().unwrap_or(0) as f64 / self.total as f64
    }

    /// Degrees with at least one node, ascending, with their counts.
    pub fn occupied(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k, c))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.occupied().next().map(|(k, _)| k)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.occupied().last().map(|(k, _)| k)
    }

    /// Most frequent degree; the smallest one on ties.
    pub fn mode(&self) -> Option<usize> {
        self.occupied()
            .fold(None, |best: Option<(usize, usize)>, (k, c)| match best {
                Some((_, bc)) if bc >= c => best,
                _ => Some((k, c)),
            })
            .map(|(k, _)| k)
    }

    /// Largest degree `k` with `CP(k) > fraction`: the highest degree left
    /// after dropping the top `fraction` of nodes.
    pub fn upper_tail_degree(&self, fraction: f64) -> Option<usize> {
        self.occupied()
            .filter(|&(k, _)| self.cp(k) > fraction)
            .last()
            .map(|(k, _)| k)
    }

    /// `(k, P(k))` for every occupied degree.
    pub fn p_points(&self) -> Vec<(f64, f64)> {
        self.occupied().map(|(k, _)| (k as f64, self.p(k))).collect()
    }

    /// `(k, CP(k))` for every occupied degree.
    pub fn cp_points(&self) -> Vec<(f64, f64)> {
        self.occupied().map(|(k, _)| (k as f64, self.cp(k))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{evolve, CliqueNetConfig};

    #[test]
    fn complete_graph() {
        let mut g = Graph::with_nodes(5);
        g.complete_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        let h = DegreeHistogram::from_graph(&g);
        assert_eq!(h.p(4), 1.0);
        for k in 0..=4 {
            assert_eq!(h.cp(k), 1.0);
        }
        assert_eq!(h.cp(5), 0.0);
        assert_eq!(h.mode(), Some(4));
    }

    #[test]
    fn star() {
        let g = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        let h = DegreeHistogram::from_graph(&g);
        assert!((h.p(1) - 0.8).abs() < 1e-15);
        assert!((h.p(4) - 0.2).abs() < 1e-15);
        assert!((h.cp(2) - 0.2).abs() < 1e-15);
        assert_eq!(h.cp(1), 1.0);
        assert_eq!(h.min_degree(), Some(1));
        assert_eq!(h.max_degree(), Some(4));
        assert_eq!(h.upper_tail_degree(0.5), Some(1));
        assert_eq!(h.upper_tail_degree(0.2), Some(1));
        assert_eq!(h.upper_tail_degree(0.1), Some(4));
    }

    #[test]
    fn merge_pools_nodes() {
        let mut a = DegreeHistogram::from_degrees([1, 1, 2]);
        let b = DegreeHistogram::from_degrees([2, 5]);
        a.merge(&b);
        assert_eq!(a, DegreeHistogram::from_degrees([1, 1, 2, 2, 5]));
        assert_eq!(a.node_count(), 5);
    }

    #[test]
    fn generated_graph_distribution_invariants() {
        for p in [0.0, 1.0] {
            let g = evolve(&CliqueNetConfig::new(5, 2, p).steps(500).seed(3)).unwrap();
            let h = DegreeHistogram::from_graph(&g);
            let total: f64 = h.p_points().iter().map(|&(_, p)| p).sum();
            assert!((total - 1.0).abs() < 1e-12);
            assert_eq!(h.cp(h.min_degree().unwrap()), 1.0);
            for k in 0..=h.max_degree().unwrap() + 1 {
                assert!(h.cp(k + 1) <= h.cp(k));
            }
        }
    }
}
