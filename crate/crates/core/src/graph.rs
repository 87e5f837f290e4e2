//! Simple undirected graph with dense node identifiers.
//!
//! Neighbor lists are kept sorted and duplicate-free, so edge lookups are a
//! binary search and triangle counting can intersect two lists in linear
//! time. Node identifiers are assigned in creation order starting at 0.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type NodeId = usize;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with `n` isolated nodes `0..n`.
    pub fn with_nodes(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge iterator, ignoring repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut g = Self::with_nodes(n);
        for (u, v) in edges {
            g.add_edge_if_absent(u, v)?;
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.adjacency[u].len()
    }

    pub fn degrees(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        &self.adjacency[u]
    }

    pub fn mean_degree(&self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.node_count() as f64
        }
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            let start = nbrs.partition_point(|&v| v <= u);
            nbrs[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn add_node(&mut self) -> NodeId {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    fn check_node(&self, u: NodeId) -> Result<()> {
        if u < self.node_count() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "node {u} does not exist (node_count={})",
                self.node_count()
            )))
        }
    }

    /// Inserts the undirected edge `{u, v}` unless it is already present.
    /// Returns whether the graph changed.
    pub fn add_edge_if_absent(&mut self, u: NodeId, v: NodeId) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at node {u}")));
        }
        self.check_node(u)?;
        self.check_node(v)?;
        let pos_u = match self.adjacency[u].binary_search(&v) {
            Ok(_) => return Ok(false),
            Err(pos) => pos,
        };
        self.adjacency[u].insert(pos_u, v);
        let pos_v = self.adjacency[v]
            .binary_search(&u)
            .expect_err("adjacency lists out of sync");
        self.adjacency[v].insert(pos_v, u);
        self.edge_count += 1;
        Ok(true)
    }

    /// Connects every pair among `nodes`. Returns the number of edges that
    /// were actually added; pairs that were already adjacent are skipped.
    pub fn complete_subgraph(&mut self, nodes: &[NodeId]) -> Result<usize> {
        for (i, &u) in nodes.iter().enumerate() {
            self.check_node(u)?;
            if nodes[..i].contains(&u) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate node {u} in clique member list"
                )));
            }
        }
        let mut added = 0;
        for (i, &u) in nodes.iter().enumerate() {
            for &v in &nodes[i + 1..] {
                if self.add_edge_if_absent(u, v)? {
                    added += 1;
                }
            }
        }
        Ok(added)
    }

    /// Breadth-first connectivity check. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_of(0).is_none_or(|c| c.len() == self.node_count())
    }

    /// Nodes reachable from `start`, in BFS order.
    pub fn component_of(&self, start: NodeId) -> Option<Vec<NodeId>> {
        if start >= self.node_count() {
            return None;
        }
        let mut seen = vec![false; self.node_count()];
        let mut order = vec![start];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        Some(order)
    }

    /// Full scan of the structural invariants: simple, symmetric, sorted,
    /// and degree sum equal to twice the edge count.
    pub fn validate(&self) -> Result<()> {
        let n = self.node_count();
        let mut degree_sum = 0;
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            degree_sum += nbrs.len();
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "neighbor list of {u} is not strictly increasing"
                )));
            }
            for &v in nbrs {
                if v == u || v >= n {
                    return Err(Error::InvalidArgument(format!(
                        "invalid neighbor {v} of node {u}"
                    )));
                }
                if self.adjacency[v].binary_search(&u).is_err() {
                    return Err(Error::InvalidArgument(format!(
                        "edge ({u},{v}) is not symmetric"
                    )));
                }
            }
        }
        if degree_sum != 2 * self.edge_count {
            return Err(Error::InvalidArgument(format!(
                "degree sum {degree_sum} != 2 * edge_count {}",
                self.edge_count
            )));
        }
        Ok(())
    }
}
