//! Structural observables of a single graph.

pub mod clustering;
pub mod degree;
pub mod fit;
pub mod paths;

use crate::error::Result;
use crate::graph::Graph;

use self::clustering::{local_clustering, ClusteringSpectrum};
use self::degree::DegreeHistogram;
use self::fit::{fit_loglog_slope, fit_semilog_slope, FitWindow, PowerLawFit};
use self::paths::{average_reachable_path_length, average_shortest_path_length, PathStats, Sources};

/// How unreachable pairs are treated when measuring path length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reachability {
    /// Every pair must be connected; disconnected graphs are an error.
    #[default]
    Strict,
    /// Average only over connected ordered pairs.
    ReachablePairs,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureOptions {
    pub path_length: bool,
    pub sources: Sources,
    pub reachability: Reachability,
}

impl Default for MeasureOptions {
    fn default() -> Self {
        Self {
            path_length: true,
            sources: Sources::All,
            reachability: Reachability::Strict,
        }
    }
}

/// Table-style summary of one graph plus the distributions it came from.
#[derive(Debug, Clone)]
pub struct MetricsSummary {
    pub nodes: usize,
    pub edges: usize,
    pub mean_degree: f64,
    pub path: Option<PathStats>,
    pub clustering: f64,
    pub degrees: DegreeHistogram,
    pub spectrum: ClusteringSpectrum,
    /// Log-log fit of `CP(k)` over the default window.
    pub cp_loglog: Option<PowerLawFit>,
    /// Semi-log fit of `CP(k)` over the default window.
    pub cp_semilog: Option<PowerLawFit>,
    /// Log-log fit of `C(k)` over the default window.
    pub spectrum_loglog: Option<PowerLawFit>,
}

impl MetricsSummary {
    pub fn path_length(&self) -> Option<f64> {
        self.path.as_ref().map(|p| p.mean_length)
    }
}

pub fn path_length(g: &Graph, sources: Sources, reachability: Reachability) -> Result<PathStats> {
    match reachability {
        Reachability::Strict => average_shortest_path_length(g, sources),
        Reachability::ReachablePairs => average_reachable_path_length(g, sources),
    }
}

pub fn summarize(g: &Graph, opts: &MeasureOptions) -> Result<MetricsSummary> {
    let path = if opts.path_length {
        Some(path_length(g, opts.sources, opts.reachability)?)
    } else {
        None
    };
    let local = local_clustering(g);
    let degrees = DegreeHistogram::from_graph(g);
    let spectrum = ClusteringSpectrum::from_local(g, &local);
    let window = FitWindow::default_for(&degrees);
    let cp = degrees.cp_points();
    Ok(MetricsSummary {
        nodes: g.node_count(),
        edges: g.edge_count(),
        mean_degree: g.mean_degree(),
        path,
        clustering: local.mean(),
        cp_loglog: fit_loglog_slope(&cp, window).ok(),
        cp_semilog: fit_semilog_slope(&cp, window).ok(),
        spectrum_loglog: fit_loglog_slope(&spectrum.points(), window).ok(),
        degrees,
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{evolve, CliqueNetConfig};

    #[test]
    fn summary_of_generated_graph() {
        let g = evolve(&CliqueNetConfig::new(5, 2, 0.5).steps(300).seed(1)).unwrap();
        let s = summarize(&g, &MeasureOptions::default()).unwrap();
        assert_eq!(s.nodes, 905);
        assert_eq!(s.mean_degree, 2.0 * s.edges as f64 / s.nodes as f64);
        assert!(s.path_length().unwrap() > 1.0);
        assert!(s.clustering > 0.5 && s.clustering <= 1.0);
        assert!(s.cp_loglog.unwrap().slope < 0.0);
        assert!(s.spectrum_loglog.unwrap().slope < 0.0);
    }

    #[test]
    fn path_length_can_be_skipped() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let opts = MeasureOptions {
            path_length: false,
            ..Default::default()
        };
        assert!(summarize(&g, &opts).unwrap().path.is_none());
        assert!(summarize(&g, &MeasureOptions::default()).is_err());
        let opts = MeasureOptions {
            reachability: Reachability::ReachablePairs,
            ..Default::default()
        };
        assert_eq!(summarize(&g, &opts).unwrap().path_length(), Some(1.0));
    }
}
