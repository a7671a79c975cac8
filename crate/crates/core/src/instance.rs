//! The `ktree-instance v1` text format.
//!
//! ```text
//! ktree-instance v1
//! k 2
//! n 4
//! m 5
//! 0 1
//! 0 2
//! ...
//! ```
//!
//! Edges are written as `u v` with `u < v`, sorted lexicographically, one per
//! line, every line newline-terminated. The parser also accepts edges in any
//! order and orientation but rejects duplicates, self-loops, out-of-range ids
//! and an edge count that disagrees with the `m` line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = "ktree-instance v1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub k: usize,
    pub graph: Graph,
}

pub fn serialize(graph: &Graph, k: usize) -> String {
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "k {k}").unwrap();
    writeln!(out, "n {}", graph.vertex_count()).unwrap();
    writeln!(out, "m {}", graph.edge_count()).unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn keyed_value(line_no: usize, line: Option<&str>, key: &str) -> Result<usize> {
    let line = line.ok_or_else(|| parse_error(line_no, format!("missing '{key}' line")))?;
    let value = line
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| parse_error(line_no, format!("expected '{key} <value>', got '{line}'")))?;
    parse_id(line_no, value)
}

fn parse_id(line_no: usize, s: &str) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(
            line_no,
            format!("'{s}' is not a non-negative integer"),
        ));
    }
    s.parse()
        .map_err(|_| parse_error(line_no, format!("'{s}' is out of range")))
}

pub fn parse(text: &str) -> Result<Instance> {
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(parse_error(
            text.lines().count(),
            "last line is not newline-terminated",
        ));
    }
    let mut lines = text.lines();
    match lines.next() {
        Some(HEADER) => {}
        Some(other) => return Err(parse_error(1, format!("bad header '{other}'"))),
        None => return Err(parse_error(1, "empty input")),
    }
    let k = keyed_value(2, lines.next(), "k")?;
    let n = keyed_value(3, lines.next(), "n")?;
    let m = keyed_value(4, lines.next(), "m")?;

    let mut graph = Graph::new(n);
    let mut found = 0;
    for (i, line) in lines.enumerate() {
        let line_no = i + 5;
        let (u, v) = line
            .split_once(' ')
            .ok_or_else(|| parse_error(line_no, format!("expected 'u v', got '{line}'")))?;
        let (u, v) = (parse_id(line_no, u)?, parse_id(line_no, v)?);
        if u == v || u >= n || v >= n {
            return Err(parse_error(
                line_no,
                format!("invalid edge {u} {v} for n = {n}"),
            ));
        }
        if graph.has_edge(u, v) {
            return Err(parse_error(line_no, format!("duplicate edge {u} {v}")));
        }
        graph.add_edge(u, v)?;
        found += 1;
    }
    if found != m {
        return Err(parse_error(
            4,
            format!("edge count mismatch: header declares m {m}, found {found} edge lines"),
        ));
    }
    Ok(Instance { k, graph })
}
