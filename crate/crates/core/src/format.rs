//! Edge-list text format, DOT export and the JSON form of a graph.
//!
//! The edge-list format is line 1 `"n m"` followed by `m` lines `"u v"` with
//! `u < v`, ASCII decimal, LF-terminated.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    // LF-terminated input leaves one empty trailing piece
    if lines.last() == Some(&"") {
        lines.pop();
    }
    let header = lines
        .first()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let (n, m) = parse_pair(header, 1)?;
    if lines.len() != m + 1 {
        return Err(parse_err(
            lines.len().min(m + 1) + 1,
            &format!("expected {m} edge lines, found {}", lines.len() - 1),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines[1..].iter().enumerate() {
        let (u, v) = parse_pair(line, i + 2)?;
        if u >= v {
            return Err(parse_err(i + 2, "edge endpoints must satisfy u < v"));
        }
        edges.push((u, v));
    }
    Graph::build(n, edges).map_err(|e| match e {
        Error::OutOfRange { .. } | Error::DuplicateEdge(..) | Error::LoopEdge(_) => Error::Parse {
            line: 0,
            message: e.to_string(),
        },
        other => other,
    })
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut parts = line.split(' ');
    let a = parts
        .next()
        .ok_or_else(|| parse_err(line_no, "missing field"))?;
    let b = parts
        .next()
        .ok_or_else(|| parse_err(line_no, "expected two fields"))?;
    if parts.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two fields"));
    }
    Ok((parse_decimal(a, line_no)?, parse_decimal(b, line_no)?))
}

fn parse_decimal(s: &str, line_no: usize) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(line_no, &format!("not a decimal number: {s:?}")));
    }
    s.parse()
        .map_err(|_| parse_err(line_no, &format!("number out of range: {s}")))
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

/// DOT export; vertex labels are the indices. `colors`, when given, become
/// a `color` attribute per vertex.
pub fn to_dot(g: &Graph, colors: Option<&[usize]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match colors {
            Some(c) => {
                let _ = writeln!(out, "  {v} [label=\"{v}\", color={}];", c[v]);
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n(),
            edges: self.edge_list(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, &repr.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_k4() {
        let text = write_edge_list(&Graph::complete(4));
        assert_eq!(text, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), Graph::complete(4));
    }

    #[test]
    fn accepts_missing_final_newline() {
        assert_eq!(parse_edge_list("2 1\n0 1").unwrap(), Graph::path(2));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "",
            "3\n",
            "3 1\n1 0\n",
            "3 2\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "3 1\n0  1\n",
            "3 1\n0 1 \n",
            "3 1\n# c\n",
            "3 1\n0 x\n",
            "3 1\r\n0 1\r\n",
            "2 1\n0 2\n",
            "3 2\n0 1\n0 1\n",
            "-1 0\n",
        ] {
            assert!(
                matches!(parse_edge_list(bad), Err(Error::Parse { .. })),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&Graph::path(2), None);
        assert_eq!(
            dot,
            "graph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n"
        );
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::paw();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[0,1],[0,2],[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
