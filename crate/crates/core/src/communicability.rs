//! Communicability `G = e^A` and the Estrada index `EE = Tr(e^A)`.
//!
//! Both are computed from a full symmetric eigendecomposition of the dense
//! adjacency matrix: `EE = sum_i e^{lambda_i}` and `G = V diag(e^lambda) V^T`.
//! The index is reported in log form, `ln EE = lambda_max + ln sum_i
//! e^{lambda_i - lambda_max}`, because `e^{lambda_max}` overflows a double for
//! strongly hub-dominated graphs.
//!
//! The truncated power series `sum_{n<=terms} A^n / n!` is provided as an
//! independent check. It only uses dense matrix-vector products.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node limit for dense eigendecompositions.
pub const DEFAULT_DENSE_CAP: usize = 8000;
/// Node limit for the series oracle.
pub const SERIES_CAP: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumOptions {
    pub eigenvectors: bool,
    pub dense_cap: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            eigenvectors: false,
            dense_cap: DEFAULT_DENSE_CAP,
        }
    }
}

/// Adjacency spectrum, eigenvalues in descending order. When present, column
/// `i` of `eigenvectors` belongs to `eigenvalues[i]`.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Option<DMatrix<f64>>,
}

impl SpectralDecomposition {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity { nodes: n, cap });
    }
    Ok(())
}

pub fn dense_adjacency(g: &Graph) -> DMatrix<f64> {
    let n = g.node_count();
    let mut a = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

/// Eigenvalues only, with the default cap.
pub fn adjacency_spectrum(g: &Graph) -> Result<SpectralDecomposition> {
    adjacency_spectrum_with(g, SpectrumOptions::default())
}

pub fn adjacency_spectrum_with(g: &Graph, opts: SpectrumOptions) -> Result<SpectralDecomposition> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::InvalidArgument("spectrum of an empty graph".into()));
    }
    check_cap(n, opts.dense_cap)?;
    let a = dense_adjacency(g);
    if !opts.eigenvectors {
        let mut eigenvalues: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
        eigenvalues.sort_by(|x, y| y.total_cmp(x));
        return Ok(SpectralDecomposition {
            eigenvalues,
            eigenvectors: None,
        });
    }
    let eig = a.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let eigenvalues = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let eigenvectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors: Some(eigenvectors),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstradaResult {
    pub log_ee: f64,
    /// `None` when `EE` is not representable as a finite double.
    pub ee: Option<f64>,
    pub lambda_max: f64,
}

pub fn estrada_index(spec: &SpectralDecomposition) -> EstradaResult {
    let lambda_max = spec
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    if spec.is_empty() {
        return EstradaResult {
            log_ee: f64::NEG_INFINITY,
            ee: Some(0.0),
            lambda_max: 0.0,
        };
    }
    let scaled: f64 = spec
        .eigenvalues
        .iter()
        .map(|&l| (l - lambda_max).exp())
        .sum();
    let log_ee = lambda_max + scaled.ln();
    let ee = log_ee.exp();
    EstradaResult {
        log_ee,
        ee: ee.is_finite().then_some(ee),
        lambda_max,
    }
}

/// Symmetric matrix of pairwise communicabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct CommunicabilityMatrix {
    g: DMatrix<f64>,
}

impl CommunicabilityMatrix {
    pub fn size(&self) -> usize {
        self.g.nrows()
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.g[(u, v)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.g
    }

    pub fn trace(&self) -> f64 {
        self.g.trace()
    }
}

pub fn communicability_matrix(spec: &SpectralDecomposition) -> Result<CommunicabilityMatrix> {
    let v = spec.eigenvectors.as_ref().ok_or_else(|| {
        Error::InvalidArgument("communicability needs eigenvectors".into())
    })?;
    let n = spec.len();
    check_cap(n, DEFAULT_DENSE_CAP)?;
    let mut weighted = v.clone();
    for (mut col, &lambda) in weighted.column_iter_mut().zip(&spec.eigenvalues) {
        col *= lambda.exp();
    }
    let mut g = &weighted * v.transpose();
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (g[(i, j)] + g[(j, i)]);
            g[(i, j)] = avg;
            g[(j, i)] = avg;
        }
    }
    Ok(CommunicabilityMatrix { g })
}

fn adjacency_times(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (u, o) in out.iter_mut().enumerate() {
        *o = g.neighbors(u).iter().map(|&v| x[v]).sum();
    }
}

/// Column `u` of `sum_{k=0}^{terms} A^k / k!`.
fn series_column(g: &Graph, u: usize, terms: usize) -> Vec<f64> {
    let n = g.node_count();
    let mut term = vec![0.0; n];
    term[u] = 1.0;
    let mut acc = term.clone();
    let mut next = vec![0.0; n];
    for k in 1..=terms {
        adjacency_times(g, &term, &mut next);
        let inv = 1.0 / k as f64;
        for (t, x) in term.iter_mut().zip(&next) {
            *t = x * inv;
        }
        for (s, t) in acc.iter_mut().zip(&term) {
            *s += t;
        }
    }
    acc
}

fn check_series(g: &Graph, terms: usize) -> Result<()> {
    if terms == 0 {
        return Err(Error::InvalidArgument("series needs at least one term".into()));
    }
    check_cap(g.node_count(), SERIES_CAP)
}

/// `Tr(sum_{k=0}^{terms} A^k / k!)`.
pub fn estrada_series_oracle(g: &Graph, terms: usize) -> Result<f64> {
    check_series(g, terms)?;
    Ok((0..g.node_count()).map(|u| series_column(g, u, terms)[u]).sum())
}

/// Full truncated series matrix, `result[u][v]` approximating `G_uv`.
pub fn communicability_series_oracle(g: &Graph, terms: usize) -> Result<Vec<Vec<f64>>> {
    check_series(g, terms)?;
    let n = g.node_count();
    let columns: Vec<Vec<f64>> = (0..n).map(|u| series_column(g, u, terms)).collect();
    Ok((0..n)
        .map(|u| (0..n).map(|v| columns[v][u]).collect())
        .collect())
}
