//! Growth of hybrid evolving clique networks.
//!
//! The network starts as a single complete clique of `clique_size` nodes.
//! Each step attaches one new clique of the same size: `attachment_count`
//! of its members are existing nodes, the remaining members are new. With
//! probability `inhomogeneity` the whole attachment set is drawn by
//! preferential attachment (probability proportional to current degree),
//! otherwise uniformly. Draws within one set are sequential and without
//! replacement. No edges are created besides the clique's own, so pairs of
//! attachment nodes that are already adjacent keep their single edge.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::edgelist::Provenance;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Pseudorandom generator used for every stochastic component.
pub type SimRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SimRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of replica `index` in an ensemble starting at `base`.
pub fn replica_seed(base: u64, index: usize) -> u64 {
    base.wrapping_add(index as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunLength {
    Steps(usize),
    /// Smallest step count whose node count reaches the target.
    TargetNodes(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliqueNetConfig {
    pub clique_size: usize,
    pub attachment_count: usize,
    /// Probability that a clique picks its attachment nodes preferentially.
    pub inhomogeneity: f64,
    pub length: RunLength,
    pub seed: u64,
}

impl CliqueNetConfig {
    pub fn new(clique_size: usize, attachment_count: usize, inhomogeneity: f64) -> Self {
        Self {
            clique_size,
            attachment_count,
            inhomogeneity,
            length: RunLength::Steps(0),
            seed: 0,
        }
    }

    pub fn steps(mut self, steps: usize) -> Self {
        self.length = RunLength::Steps(steps);
        self
    }

    pub fn target_nodes(mut self, nodes: usize) -> Self {
        self.length = RunLength::TargetNodes(nodes);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let (a, m) = (self.clique_size, self.attachment_count);
        if a < 3 {
            return Err(Error::Config(format!("clique size must be at least 3, got {a}")));
        }
        if m == 0 || m >= a {
            return Err(Error::Config(format!(
                "attachment count must satisfy 1 <= m < {a}, got {m}"
            )));
        }
        if !(0.0..=1.0).contains(&self.inhomogeneity) {
            return Err(Error::Config(format!(
                "inhomogeneity must lie in [0, 1], got {}",
                self.inhomogeneity
            )));
        }
        Ok(())
    }

    /// Number of attachment steps this configuration runs for.
    pub fn step_count(&self) -> usize {
        match self.length {
            RunLength::Steps(t) => t,
            RunLength::TargetNodes(n) => {
                let per_step = self.clique_size - self.attachment_count;
                n.saturating_sub(self.clique_size).div_ceil(per_step)
            }
        }
    }

    /// Node count after `steps` attachments: `a + steps * (a - m)`.
    pub fn node_count_after(&self, steps: usize) -> usize {
        self.clique_size + steps * (self.clique_size - self.attachment_count)
    }

    /// Limit of the mean degree for long runs, `a(a-1)/(a-m)`. Exact for a
    /// single attachment node; an upper bound otherwise, since attachment
    /// pairs that are already adjacent do not gain a second edge.
    pub fn mean_degree_bound(&self) -> f64 {
        let a = self.clique_size as f64;
        a * (a - 1.0) / (a - self.attachment_count as f64)
    }

    pub fn provenance(&self) -> Provenance {
        Provenance::new()
            .with("a", self.clique_size)
            .with("m", self.attachment_count)
            .with("p", self.inhomogeneity)
            .with("steps", self.step_count())
            .with("seed", self.seed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttachmentMode {
    Preferential,
    Uniform,
}

/// Attachment nodes drawn for one clique, with the probability each one had
/// at the moment it was drawn (conditional on the earlier draws).
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSelection {
    pub chosen: Vec<NodeId>,
    pub pi: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttachmentRecord {
    pub mode: AttachmentMode,
    pub attachment: Vec<NodeId>,
    pub new_nodes: Range<NodeId>,
    pub edges_added: usize,
}

/// Degree-proportional sampler backed by an endpoint list: every node occurs
/// once per incident edge, so a uniform pick from the list is a pick with
/// probability `k_i / sum_j k_j`.
#[derive(Debug, Clone, Default)]
pub struct AttachmentSampler {
    endpoints: Vec<NodeId>,
}

impl AttachmentSampler {
    pub fn from_graph(g: &Graph) -> Self {
        let mut endpoints = Vec::with_capacity(2 * g.edge_count());
        for (u, v) in g.edges() {
            endpoints.push(u);
            endpoints.push(v);
        }
        Self { endpoints }
    }

    pub fn record_edge(&mut self, u: NodeId, v: NodeId) {
        self.endpoints.push(u);
        self.endpoints.push(v);
    }

    pub fn total_degree(&self) -> usize {
        self.endpoints.len()
    }

    pub fn select<R: Rng + ?Sized>(
        &self,
        g: &Graph,
        count: usize,
        mode: AttachmentMode,
        rng: &mut R,
    ) -> Result<NodeSelection> {
        debug_assert_eq!(self.endpoints.len(), 2 * g.edge_count());
        let n = g.node_count();
        if count > n {
            return Err(Error::InvalidArgument(format!(
                "cannot choose {count} distinct nodes from a graph of {n}"
            )));
        }
        let mut chosen = Vec::with_capacity(count);
        let mut pi = Vec::with_capacity(count);
        match mode {
            AttachmentMode::Preferential => {
                let total = self.endpoints.len();
                if total == 0 {
                    return Err(Error::DegenerateDistribution(
                        "total degree is zero".into(),
                    ));
                }
                let positive = g.degrees().filter(|&k| k > 0).count();
                if positive < count {
                    return Err(Error::DegenerateDistribution(format!(
                        "only {positive} nodes have positive degree, {count} requested"
                    )));
                }
                let mut excluded_degree = 0;
                while chosen.len() < count {
                    let u = self.endpoints[rng.gen_range(0..total)];
                    if chosen.contains(&u) {
                        continue;
                    }
                    let k = g.degree(u);
                    pi.push(k as f64 / (total - excluded_degree) as f64);
                    excluded_degree += k;
                    chosen.push(u);
                }
            }
            AttachmentMode::Uniform => {
                while chosen.len() < count {
                    let u = rng.gen_range(0..n);
                    if chosen.contains(&u) {
                        continue;
                    }
                    pi.push(1.0 / (n - chosen.len()) as f64);
                    chosen.push(u);
                }
            }
        }
        Ok(NodeSelection { chosen, pi })
    }
}

/// The starting network: one complete clique.
pub fn initial_clique(cfg: &CliqueNetConfig) -> Result<Graph> {
    cfg.validate()?;
    let mut g = Graph::with_nodes(cfg.clique_size);
    let members: Vec<NodeId> = (0..cfg.clique_size).collect();
    g.complete_subgraph(&members)?;
    Ok(g)
}

/// Draws `count` distinct attachment nodes from `g` in the given mode.
///
/// Builds a fresh endpoint list on every call; [`CliqueNetGrower`] keeps one
/// up to date instead.
pub fn select_attachment_nodes<R: Rng + ?Sized>(
    g: &Graph,
    count: usize,
    mode: AttachmentMode,
    rng: &mut R,
) -> Result<NodeSelection> {
    AttachmentSampler::from_graph(g).select(g, count, mode, rng)
}

/// Performs one growth step on `g`.
pub fn attach_clique<R: Rng + ?Sized>(
    g: &mut Graph,
    cfg: &CliqueNetConfig,
    rng: &mut R,
) -> Result<AttachmentRecord> {
    let mut sampler = AttachmentSampler::from_graph(g);
    attach_with(g, &mut sampler, cfg, rng)
}

fn attach_with<R: Rng + ?Sized>(
    g: &mut Graph,
    sampler: &mut AttachmentSampler,
    cfg: &CliqueNetConfig,
    rng: &mut R,
) -> Result<AttachmentRecord> {
    if g.is_empty() {
        return Err(Error::InvalidArgument(
            "cannot attach a clique to an empty graph".into(),
        ));
    }
    let mode = if rng.gen_bool(cfg.inhomogeneity) {
        AttachmentMode::Preferential
    } else {
        AttachmentMode::Uniform
    };
    let selection = sampler.select(g, cfg.attachment_count, mode, rng)?;

    let first_new = g.node_count();
    let mut members = selection.chosen.clone();
    for _ in cfg.attachment_count..cfg.clique_size {
        members.push(g.add_node());
    }

    let mut new_pairs = Vec::with_capacity(cfg.clique_size * (cfg.clique_size - 1) / 2);
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.has_edge(u, v) {
                new_pairs.push((u, v));
            }
        }
    }
    let edges_added = g.complete_subgraph(&members)?;
    debug_assert_eq!(edges_added, new_pairs.len());
    for (u, v) in new_pairs {
        sampler.record_edge(u, v);
    }

    Ok(AttachmentRecord {
        mode,
        attachment: selection.chosen,
        new_nodes: first_new..g.node_count(),
        edges_added,
    })
}

/// Step-by-step driver that keeps the sampler and RNG alongside the graph.
#[derive(Debug, Clone)]
pub struct CliqueNetGrower {
    cfg: CliqueNetConfig,
    graph: Graph,
    sampler: AttachmentSampler,
    rng: SimRng,
    steps_taken: usize,
    preferential_steps: usize,
}

impl CliqueNetGrower {
    pub fn new(cfg: &CliqueNetConfig) -> Result<Self> {
        let graph = initial_clique(cfg)?;
        Ok(Self {
            sampler: AttachmentSampler::from_graph(&graph),
            rng: seeded_rng(cfg.seed),
            cfg: cfg.clone(),
            graph,
            steps_taken: 0,
            preferential_steps: 0,
        })
    }

    pub fn step(&mut self) -> Result<AttachmentRecord> {
        let record = attach_with(&mut self.graph, &mut self.sampler, &self.cfg, &mut self.rng)?;
        self.steps_taken += 1;
        if record.mode == AttachmentMode::Preferential {
            self.preferential_steps += 1;
        }
        Ok(record)
    }

    /// Runs the remaining steps of the configured length.
    pub fn finish(mut self) -> Result<Graph> {
        while self.steps_taken < self.cfg.step_count() {
            self.step()?;
        }
        Ok(self.graph)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn steps_taken(&self) -> usize {
        self.steps_taken
    }

    pub fn preferential_steps(&self) -> usize {
        self.preferential_steps
    }
}

/// Grows a full network for `cfg`. Deterministic in `(cfg, cfg.seed)`.
pub fn evolve(cfg: &CliqueNetConfig) -> Result<Graph> {
    CliqueNetGrower::new(cfg)?.finish()
}
