use std::fs::{self, File};
use std::io::BufWriter;
use std::path::Path;

use rayon::prelude::*;

use crate::baselines::{connected_er_graph, er_random_graph, ErConfig};
use crate::communicability::{adjacency_spectrum, estrada_index};
use crate::error::Result;
use crate::experiment::config::{DisconnectedPolicy, ExperimentSpec, GridPoint, Measure, Model};
use crate::experiment::ensemble::{write_replicas, EnsembleResult, ReplicaRow};
use crate::experiment::output::{
    csv_writer, opt9, write_clustering_spectrum, write_degree_dist, write_estrada, EstradaRow,
};
use crate::generator::{evolve, replica_seed};
use crate::graph::Graph;
use crate::metrics::clustering::{local_clustering, ClusteringSpectrum};
use crate::metrics::degree::DegreeHistogram;
use crate::metrics::fit::{fit_loglog_slope, fit_semilog_slope, FitWindow, PowerLawFit};
use crate::metrics::paths::Sources;
use crate::metrics::{path_length, Reachability};

/// Seeds tried for one ER replica before giving up on a connected draw.
pub const ER_RESAMPLE_LIMIT: usize = 10;

/// Everything one replica produced.
#[derive(Debug, Clone)]
pub struct ReplicaOutcome {
    pub row: ReplicaRow,
    pub degrees: Option<DegreeHistogram>,
    pub spectrum: Option<ClusteringSpectrum>,
    pub estrada: Option<EstradaRow>,
}

/// Draws the graph of one replica. Returns the graph, the seed that produced
/// it, and how its path length must be measured.
pub fn build_graph(
    spec: &ExperimentSpec,
    point: &GridPoint,
    replica: usize,
) -> Result<(Graph, u64, Reachability)> {
    let seed = replica_seed(spec.base_seed, replica);
    let er_cfg = match point.model {
        Model::CliqueNet => {
            let cfg = point
                .cliquenet_config(seed)
                .expect("clique-net grid points carry a, m and p");
            return Ok((evolve(&cfg)?, seed, Reachability::Strict));
        }
        Model::Er => match (point.cliquenet_config(seed), point.mean_degree) {
            (Some(cfg), _) => {
                let twin = evolve(&cfg)?;
                ErConfig::new(twin.node_count(), twin.edge_count(), seed)
            }
            (None, Some(k)) => ErConfig::matched(point.n, k, seed),
            (None, None) => unreachable!("ER grid points are matched or carry a mean degree"),
        },
    };
    let needs_paths = spec.wants(Measure::PathLength);
    match spec.er_disconnected {
        DisconnectedPolicy::Resample if needs_paths => {
            let (g, used) = connected_er_graph(&er_cfg, ER_RESAMPLE_LIMIT)?;
            Ok((g, used, Reachability::Strict))
        }
        DisconnectedPolicy::Resample => Ok((er_random_graph(&er_cfg)?, seed, Reachability::Strict)),
        DisconnectedPolicy::ReachablePairs => Ok((
            er_random_graph(&er_cfg)?,
            seed,
            Reachability::ReachablePairs,
        )),
    }
}

fn set_fit(row: &mut ReplicaRow, prefix: &str, fit: Option<PowerLawFit>) {
    if let Some(f) = fit {
        row.set(&format!("{prefix}_slope"), f.slope);
        row.set(&format!("{prefix}_r2"), f.r_squared);
    }
}

/// Runs one replica of one grid point. Depends only on the spec, the point
/// and the replica index, so any row can be reproduced in isolation.
pub fn run_replica(spec: &ExperimentSpec, point: &GridPoint, replica: usize) -> Result<ReplicaOutcome> {
    let (g, seed, reachability) = build_graph(spec, point, replica)?;
    let mut row = ReplicaRow::new(point.clone(), replica, seed);
    row.set("nodes", g.node_count() as f64);
    row.set("edges", g.edge_count() as f64);
    row.set("mean_degree", g.mean_degree());

    if spec.wants(Measure::PathLength) {
        let sources = match spec.sample_sources {
            Some(count) => Sources::Sample { count, seed },
            None => Sources::All,
        };
        row.set("L", path_length(&g, sources, reachability)?.mean_length);
    }

    let hist = DegreeHistogram::from_graph(&g);
    let window = FitWindow::default_for(&hist);
    let mut degrees = None;
    if spec.wants(Measure::Degree) {
        let cp = hist.cp_points();
        set_fit(&mut row, "cp_loglog", fit_loglog_slope(&cp, window).ok());
        set_fit(&mut row, "cp_semilog", fit_semilog_slope(&cp, window).ok());
        degrees = Some(hist);
    }

    let mut spectrum = None;
    if spec.wants(Measure::Clustering) || spec.wants(Measure::Spectrum) {
        let local = local_clustering(&g);
        if spec.wants(Measure::Clustering) {
            row.set("C", local.mean());
        }
        if spec.wants(Measure::Spectrum) {
            let s = ClusteringSpectrum::from_local(&g, &local);
            set_fit(&mut row, "ck_loglog", fit_loglog_slope(&s.points(), window).ok());
            spectrum = Some(s);
        }
    }

    let mut estrada = None;
    if spec.wants(Measure::Estrada) {
        let result = estrada_index(&adjacency_spectrum(&g)?);
        row.set("lambda_max", result.lambda_max);
        row.set("log_ee", result.log_ee);
        estrada = Some(EstradaRow {
            nodes: g.node_count(),
            a: point.a,
            m: point.m,
            p: point.p,
            seed: Some(seed),
            result,
        });
    }

    Ok(ReplicaOutcome {
        row,
        degrees,
        spectrum,
        estrada,
    })
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

/// Runs every grid point and replica, then writes into `spec.output_dir`:
///
/// * `replicas.csv`, one row per replica
/// * `ensemble.csv`, mean and sample deviation per point and measure
/// * `degree_dist_<label>.csv` and `clustering_spectrum_<label>.csv`, pooled
///   over replicas, plus `fits.csv` with their slope fits
/// * `estrada.csv`, one row per replica
pub fn run_experiment(spec: &ExperimentSpec) -> Result<EnsembleResult> {
    spec.validate()?;
    let grid = spec.grid();
    let jobs: Vec<(usize, usize)> = (0..grid.len())
        .flat_map(|i| (0..spec.replicas).map(move |r| (i, r)))
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|&(i, r)| run_replica(spec, &grid[i], r))
        .collect::<Result<Vec<_>>>()?;

    let dir = &spec.output_dir;
    fs::create_dir_all(dir)?;
    let rows: Vec<ReplicaRow> = outcomes.iter().map(|o| o.row.clone()).collect();
    let replicas_path = dir.join("replicas.csv");
    write_replicas(&rows, create(&replicas_path)?)?;

    let ensemble = EnsembleResult::from_replicas_csv(File::open(&replicas_path)?)?;
    ensemble.write_csv(create(&dir.join("ensemble.csv"))?)?;

    let pooled = pool(&grid, &outcomes);
    if spec.wants(Measure::Degree) || spec.wants(Measure::Spectrum) {
        write_pooled(dir, &pooled)?;
    }
    if spec.wants(Measure::Estrada) {
        let rows: Vec<EstradaRow> = outcomes.iter().filter_map(|o| o.estrada.clone()).collect();
        write_estrada(&rows, create(&dir.join("estrada.csv"))?)?;
    }
    Ok(ensemble)
}

/// Distributions of one grid point, pooled over its replicas.
#[derive(Debug, Clone)]
pub struct PooledPoint {
    pub point: GridPoint,
    pub degrees: Option<DegreeHistogram>,
    pub spectrum: Option<ClusteringSpectrum>,
}

fn pool(grid: &[GridPoint], outcomes: &[ReplicaOutcome]) -> Vec<PooledPoint> {
    grid.iter()
        .map(|point| {
            let mut pooled = PooledPoint {
                point: point.clone(),
                degrees: None,
                spectrum: None,
            };
            for o in outcomes.iter().filter(|o| o.row.point == *point) {
                if let Some(h) = &o.degrees {
                    pooled.degrees.get_or_insert_with(DegreeHistogram::default).merge(h);
                }
                if let Some(s) = &o.spectrum {
                    pooled.spectrum.get_or_insert_with(ClusteringSpectrum::default).merge(s);
                }
            }
            pooled
        })
        .collect()
}

fn write_pooled(dir: &Path, pooled: &[PooledPoint]) -> Result<()> {
    let mut fits = csv_writer(create(&dir.join("fits.csv"))?, "fits")?;
    fits.write_record([
        "label",
        "cp_decade_slope",
        "cp_decade_r2",
        "cp_semilog_slope",
        "cp_semilog_r2",
        "ck_loglog_slope",
        "ck_loglog_r2",
    ])?;
    for p in pooled {
        let label = p.point.label();
        let mut cells = vec![label.clone()];
        let mut push = |fit: Option<PowerLawFit>| {
            cells.push(opt9(fit.map(|f| f.slope)));
            cells.push(opt9(fit.map(|f| f.r_squared)));
        };
        match &p.degrees {
            Some(h) => {
                write_degree_dist(h, create(&dir.join(format!("degree_dist_{label}.csv")))?)?;
                let cp = h.cp_points();
                push(fit_loglog_slope(&cp, FitWindow::central_decade(h)).ok());
                push(fit_semilog_slope(&cp, FitWindow::default_for(h)).ok());
            }
            None => {
                push(None);
                push(None);
            }
        }
        match &p.spectrum {
            Some(s) => {
                write_clustering_spectrum(
                    s,
                    create(&dir.join(format!("clustering_spectrum_{label}.csv")))?,
                )?;
                let window = p.degrees.as_ref().map_or_else(
                    || {
                        let counts = s.entries().flat_map(|(k, _, c)| std::iter::repeat_n(k, c));
                        FitWindow::default_for(&DegreeHistogram::from_degrees(counts))
                    },
                    FitWindow::default_for,
                );
                push(fit_loglog_slope(&s.points(), window).ok());
            }
            None => push(None),
        }
        fits.write_record(&cells)?;
    }
    fits.flush()?;
    Ok(())
}
