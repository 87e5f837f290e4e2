use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::generator::CliqueNetConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Degree,
    PathLength,
    Clustering,
    Spectrum,
    Estrada,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DisconnectedPolicy {
    /// Redraw with a new (logged) seed, up to the resample limit.
    #[default]
    Resample,
    /// Keep the draw and average path length over connected pairs only.
    ReachablePairs,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliqueNetGrid {
    pub a: Vec<usize>,
    pub m: Vec<usize>,
    pub p: Vec<f64>,
    pub n: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErGrid {
    #[serde(default)]
    pub n: Vec<usize>,
    #[serde(default)]
    pub mean_degree: Vec<f64>,
    /// One ER point per clique-net point, with the node and edge counts of
    /// the clique-net replica that shares its seed.
    #[serde(default)]
    pub matched: bool,
}

/// Declarative description of an ensemble experiment, read from TOML.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub name: String,
    pub replicas: usize,
    pub base_seed: u64,
    pub measures: Vec<Measure>,
    pub output_dir: PathBuf,
    /// BFS sources per replica for path length; all nodes when absent.
    #[serde(default)]
    pub sample_sources: Option<usize>,
    #[serde(default)]
    pub er_disconnected: DisconnectedPolicy,
    #[serde(default)]
    pub cliquenet: Option<CliqueNetGrid>,
    #[serde(default)]
    pub er: Option<ErGrid>,
}

/// Single-graph generator settings for the `generate` command.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerateSpec {
    pub a: usize,
    pub m: usize,
    pub p: f64,
    #[serde(default)]
    pub steps: Option<usize>,
    #[serde(default)]
    pub nodes: Option<usize>,
    #[serde(default)]
    pub seed: u64,
}

impl GenerateSpec {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn to_config(&self) -> Result<CliqueNetConfig> {
        let cfg = CliqueNetConfig::new(self.a, self.m, self.p).seed(self.seed);
        let cfg = match (self.steps, self.nodes) {
            (Some(t), None) => cfg.steps(t),
            (None, Some(n)) => cfg.target_nodes(n),
            _ => {
                return Err(Error::Config(
                    "exactly one of steps and nodes must be set".into(),
                ))
            }
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    CliqueNet,
    Er,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::CliqueNet => "cliquenet",
            Model::Er => "er",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "cliquenet" => Some(Model::CliqueNet),
            "er" => Some(Model::Er),
            _ => None,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One parameter combination of the grid. ER points matched to a clique
/// net carry that net's `a`, `m` and `p`; ER points with a fixed mean degree
/// carry `mean_degree` instead.
#[derive(Debug, Clone, PartialEq)]
pub struct GridPoint {
    pub model: Model,
    pub a: Option<usize>,
    pub m: Option<usize>,
    pub p: Option<f64>,
    pub n: usize,
    pub mean_degree: Option<f64>,
}

impl GridPoint {
    pub fn cliquenet(a: usize, m: usize, p: f64, n: usize) -> Self {
        Self {
            model: Model::CliqueNet,
            a: Some(a),
            m: Some(m),
            p: Some(p),
            n,
            mean_degree: None,
        }
    }

    pub fn er(n: usize, mean_degree: f64) -> Self {
        Self {
            model: Model::Er,
            a: None,
            m: None,
            p: None,
            n,
            mean_degree: Some(mean_degree),
        }
    }

    pub fn er_matched(a: usize, m: usize, p: f64, n: usize) -> Self {
        Self {
            model: Model::Er,
            ..Self::cliquenet(a, m, p, n)
        }
    }

    /// Clique-net generator configuration for this point (also for matched
    /// ER points, whose edge count comes from that network).
    pub fn cliquenet_config(&self, seed: u64) -> Option<CliqueNetConfig> {
        match (self.a, self.m, self.p) {
            (Some(a), Some(m), Some(p)) => {
                Some(CliqueNetConfig::new(a, m, p).target_nodes(self.n).seed(seed))
            }
            _ => None,
        }
    }

    /// File-name friendly identifier, e.g. `cliquenet_a5_m2_p0.5_n5000`.
    pub fn label(&self) -> String {
        let mut s = format!("{}", self.model);
        if let (Some(a), Some(m), Some(p)) = (self.a, self.m, self.p) {
            s.push_str(&format!("_a{a}_m{m}_p{p}"));
        }
        s.push_str(&format!("_n{}", self.n));
        if let Some(k) = self.mean_degree {
            s.push_str(&format!("_k{k}"));
        }
        s
    }
}

impl ExperimentSpec {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let spec: Self = toml::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    pub fn wants(&self, measure: Measure) -> bool {
        self.measures.contains(&measure)
    }

    pub fn validate(&self) -> Result<()> {
        if self.replicas == 0 {
            return Err(Error::Config("replicas must be at least 1".into()));
        }
        if self.measures.is_empty() {
            return Err(Error::Config("no measures requested".into()));
        }
        if self.sample_sources == Some(0) {
            return Err(Error::Config("sample_sources must be positive".into()));
        }
        if let Some(grid) = &self.cliquenet {
            if grid.a.is_empty() || grid.m.is_empty() || grid.p.is_empty() || grid.n.is_empty() {
                return Err(Error::Config("cliquenet grid has an empty axis".into()));
            }
            for &a in &grid.a {
                for &m in &grid.m {
                    for &p in &grid.p {
                        CliqueNetConfig::new(a, m, p).validate()?;
                    }
                }
            }
        }
        if let Some(er) = &self.er {
            if er.matched {
                if self.cliquenet.is_none() {
                    return Err(Error::Config("matched ER needs a cliquenet grid".into()));
                }
                if !er.n.is_empty() || !er.mean_degree.is_empty() {
                    return Err(Error::Config(
                        "matched ER takes its sizes from the cliquenet grid".into(),
                    ));
                }
            } else if er.n.is_empty() || er.mean_degree.is_empty() {
                return Err(Error::Config("ER grid needs n and mean_degree".into()));
            } else if er.mean_degree.iter().any(|&k| k.is_nan() || k < 0.0) {
                return Err(Error::Config("ER mean degree must be non-negative".into()));
            }
        }
        if self.grid().is_empty() {
            return Err(Error::Config("experiment grid is empty".into()));
        }
        Ok(())
    }

    /// Grid points in output order: clique nets (a, m, p, n nested in that
    /// order), then ER points.
    pub fn grid(&self) -> Vec<GridPoint> {
        let mut points = Vec::new();
        let mut cliquenets = Vec::new();
        if let Some(grid) = &self.cliquenet {
            for &a in &grid.a {
                for &m in &grid.m {
                    for &p in &grid.p {
                        for &n in &grid.n {
                            cliquenets.push(GridPoint::cliquenet(a, m, p, n));
                        }
                    }
                }
            }
        }
        points.extend(cliquenets.iter().cloned());
        if let Some(er) = &self.er {
            if er.matched {
                points.extend(cliquenets.iter().map(|c| GridPoint {
                    model: Model::Er,
                    ..c.clone()
                }));
            } else {
                for &n in &er.n {
                    for &k in &er.mean_degree {
                        points.push(GridPoint::er(n, k));
                    }
                }
            }
        }
        points
    }
}
