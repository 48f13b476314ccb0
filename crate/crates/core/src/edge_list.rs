//! Plain edge lists: a line holding `n`, then one `u v` pair per line.
//! Blank lines are ignored. Line numbers in errors are 1-based.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeList {
        line: header_line,
        message: format!("expected a vertex count, found {header:?}"),
    })?;

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (line, content) in lines {
        let err = |message: String| Error::EdgeList { line, message };
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(err(format!("expected two labels, found {content:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("invalid vertex label {s:?}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u >= n || v >= n {
            return Err(err(format!("label out of range in {u} {v} (n = {n})")));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(err(format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(n, edges))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}
