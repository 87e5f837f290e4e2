#![allow(dead_code, clippy::needless_range_loop)]

use cliquenet::baselines::{er_random_graph, ErConfig};
use cliquenet::generator::{evolve, CliqueNetConfig};
use cliquenet::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph on 2..=max_nodes nodes, each pair present with a
/// per-graph random density. Disconnected draws are rejected.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_nodes: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_nodes);
        let density: f64 = rng.gen_range(0.2..1.0);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// Mixed family of small graphs cycling through clique nets, ER draws, stars
/// and paths. Every other round of four keeps to at most 8 nodes.
pub fn mixed_small_graphs(count: usize, max_nodes: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let cap = if (i / 4) % 2 == 0 { 8 } else { max_nodes };
            match i % 4 {
                0 => {
                    let a = rng.gen_range(3..=6);
                    let m = rng.gen_range(1..a);
                    let p = [0.0, 0.5, 1.0][rng.gen_range(0..3)];
                    let steps = rng.gen_range(0..=(cap - a) / (a - m));
                    evolve(&CliqueNetConfig::new(a, m, p).steps(steps).seed(rng.gen())).unwrap()
                }
                1 => {
                    let n = rng.gen_range(2..=cap);
                    let k = rng.gen_range(0.5..8.0f64).min((n - 1) as f64);
                    er_random_graph(&ErConfig::matched(n, k, rng.gen())).unwrap()
                }
                2 => star(rng.gen_range(1..cap)),
                _ => path(rng.gen_range(1..=cap)),
            }
        })
        .collect()
}

/// All-pairs distances by Floyd-Warshall; `None` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for &v in g.neighbors(u) {
            d[u][v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Sum of distances over ordered pairs of distinct nodes, and the number of
/// such pairs, for a connected graph.
pub fn brute_force_distance_sum(g: &Graph) -> (u64, u64) {
    let d = floyd_warshall(g);
    let n = g.node_count();
    let mut sum = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += d[i][j].expect("graph must be connected");
            }
        }
    }
    (sum, (n * (n - 1)) as u64)
}

/// Edges among the neighbours of every node, by checking each neighbour pair.
pub fn brute_force_neighbor_edges(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    (0..n)
        .map(|i| {
            let mut t = 0;
            for j in 0..n {
                for k in j + 1..n {
                    if adj[i][j] && adj[i][k] && adj[j][k] {
                        t += 1;
                    }
                }
            }
            t
        })
        .collect()
}

pub fn brute_force_local_clustering(g: &Graph) -> Vec<f64> {
    brute_force_neighbor_edges(g)
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            let k = g.degree(i);
            if k < 2 {
                0.0
            } else {
                2.0 * t as f64 / (k * (k - 1)) as f64
            }
        })
        .collect()
}

/// Workspace-level `configs/` directory.
pub fn config_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../configs")
        .join(name)
}
