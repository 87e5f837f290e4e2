//! Ensemble experiments: grid expansion, replica runs, CSV output and the
//! Table-1 style report.

pub mod config;
pub mod ensemble;
pub mod output;
pub mod report;
pub mod runner;

pub use config::{DisconnectedPolicy, ExperimentSpec, GenerateSpec, GridPoint, Measure, Model};
pub use ensemble::{EnsembleResult, PointSummary, ReplicaRow, Stats};
pub use report::table1_report;
pub use runner::{build_graph, run_experiment, run_replica, ReplicaOutcome, ER_RESAMPLE_LIMIT};
