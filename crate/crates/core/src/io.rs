//! Edge-list text format.
//!
//! The first line holds `n m`; exactly `m` lines follow, each `u v` or
//! `u v w` with 0-based vertex ids and an optional positive integer weight.
//! Blank lines are ignored; any other extra content is rejected.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let n: usize = field(toks[0], hline, "vertex count")?;
    let m: usize = field(toks[1], hline, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lno, l) = lines
            .next()
            .ok_or_else(|| parse_err(hline, format!("expected {m} edges, found {}", edges.len())))?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        let (u, v): (usize, usize) = match toks.len() {
            2 | 3 => (field(toks[0], lno, "vertex")?, field(toks[1], lno, "vertex")?),
            _ => return Err(parse_err(lno, "edge must be `u v` or `u v w`")),
        };
        let weight = match toks.get(2) {
            Some(t) => {
                let w: i64 = field(t, lno, "weight")?;
                if w <= 0 {
                    return Err(Error::NonpositiveWeight(u, v));
                }
                Some(w as u64)
            }
            None => None,
        };
        edges.push(Edge { u, v, weight });
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(lno, "trailing content after the last edge"));
    }
    Graph::build(n, edges)
}

/// Serializes in the same format; weights are written only for weighted graphs.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v, w) in g.edges() {
        if g.is_weighted() {
            writeln!(out, "{u} {v} {w}").unwrap();
        } else {
            writeln!(out, "{u} {v}").unwrap();
        }
    }
    out
}
