//! Plain-text edge-list serialization.
//!
//! ```text
//! # a=5 m=2 p=0.5 steps=1665 seed=7
//! # nodes=5000 edges=16641
//! 0 1
//! 0 2
//! ```
//!
//! Optional provenance lines of `key=value` tokens come first, followed by the
//! mandatory `# nodes=N edges=E` header and one `u v` line per edge with
//! `u < v`, in ascending order.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Ordered `key=value` pairs carried in the comment header of an edge list.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Provenance(pub Vec<(String, String)>);

impl Provenance {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn line(&self) -> String {
        let fields: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("# {}", fields.join(" "))
    }
}

pub fn write_edge_list<W: Write>(g: &Graph, provenance: &Provenance, mut out: W) -> Result<()> {
    if !provenance.is_empty() {
        writeln!(out, "{}", provenance.line())?;
    }
    writeln!(out, "# nodes={} edges={}", g.node_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn edge_list_string(g: &Graph, provenance: &Provenance) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, provenance, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}

pub fn read_edge_list<R: BufRead>(input: R) -> Result<(Graph, Provenance)> {
    let mut provenance = Provenance::new();
    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Graph> = None;

    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: lineno,
            message,
        };

        if let Some(comment) = trimmed.strip_prefix('#') {
            if graph.is_some() {
                return Err(parse_err("comment after the graph header".into()));
            }
            let mut fields = Vec::new();
            for token in comment.split_whitespace() {
                let (k, v) = token
                    .split_once('=')
                    .ok_or_else(|| parse_err(format!("expected key=value, got {token:?}")))?;
                fields.push((k.to_string(), v.to_string()));
            }
            let get = |key: &str| fields.iter().find(|(k, _)| k == key).map(|(_, v)| v);
            if let (Some(n), Some(e)) = (get("nodes"), get("edges")) {
                let n = n
                    .parse()
                    .map_err(|_| parse_err(format!("bad node count {n:?}")))?;
                let e = e
                    .parse()
                    .map_err(|_| parse_err(format!("bad edge count {e:?}")))?;
                header = Some((n, e));
                graph = Some(Graph::with_nodes(n));
            } else {
                provenance.0.extend(fields);
            }
            continue;
        }

        let g = graph
            .as_mut()
            .ok_or_else(|| parse_err("edge before the '# nodes=N edges=E' header".into()))?;
        let mut parts = trimmed.split_whitespace();
        let mut next_id = || -> Result<usize> {
            let tok = parts
                .next()
                .ok_or_else(|| parse_err("expected two node ids".into()))?;
            tok.parse()
                .map_err(|_| parse_err(format!("bad node id {tok:?}")))
        };
        let u = next_id()?;
        let v = next_id()?;
        if parts.next().is_some() {
            return Err(parse_err("trailing tokens after edge".into()));
        }
        let added = g
            .add_edge_if_absent(u, v)
            .map_err(|e| parse_err(e.to_string()))?;
        if !added {
            return Err(parse_err(format!("duplicate edge ({u},{v})")));
        }
    }

    let (g, (_, expected_edges)) = match (graph, header) {
        (Some(g), Some(h)) => (g, h),
        _ => {
            return Err(Error::Parse {
                line: 0,
                message: "missing '# nodes=N edges=E' header".into(),
            })
        }
    };
    if g.edge_count() != expected_edges {
        return Err(Error::Parse {
            line: 0,
            message: format!(
                "header declares {expected_edges} edges but {} were read",
                g.edge_count()
            ),
        });
    }
    Ok((g, provenance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn writes_header_and_sorted_edges() {
        let g = Graph::from_edges(4, [(2, 1), (0, 3)]).unwrap();
        let text = edge_list_string(&g, &Provenance::new().with("seed", 3));
        assert_eq!(text, "# seed=3\n# nodes=4 edges=2\n0 3\n1 2\n");
    }

    #[test]
    fn keeps_isolated_nodes_and_provenance() {
        let g = Graph::from_edges(6, [(0, 1)]).unwrap();
        let prov = Provenance::new().with("a", 5).with("p", 0.5);
        let (back, prov_back) = read_edge_list(edge_list_string(&g, &prov).as_bytes()).unwrap();
        assert_eq!(back, g);
        assert_eq!(prov_back, prov);
        assert_eq!(prov_back.get("p"), Some("0.5"));
    }

    #[test]
    fn rejects_malformed_input() {
        let bad = [
            "0 1\n",
            "# nodes=2 edges=1\n0 0\n",
            "# nodes=2 edges=1\n0 5\n",
            "# nodes=2 edges=2\n0 1\n1 0\n",
            "# nodes=3 edges=2\n0 1\n",
            "# nodes=2 edges=1\n0 x\n",
        ];
        for text in bad {
            assert!(read_edge_list(text.as_bytes()).is_err(), "{text:?}");
        }
    }

    proptest! {
        #[test]
        fn round_trip_is_lossless(
            n in 1usize..30,
            raw in proptest::collection::vec((0usize..30, 0usize..30), 0..80),
        ) {
            let edges = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v);
            let g = Graph::from_edges(n, edges).unwrap();
            let text = edge_list_string(&g, &Provenance::new().with("model", "test"));
            let (back, _) = read_edge_list(text.as_bytes()).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(edge_list_string(&back, &Provenance::new().with("model", "test")), text);
        }
    }
}
