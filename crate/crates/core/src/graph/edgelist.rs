//! Plain edge-list text: a header line `n m`, then `m` lines `u v`
//! (0-indexed). Blank lines and lines starting with `#` are skipped.

use super::Graph;
use crate::error::{Error, Result};

fn err(msg: impl Into<String>) -> Error {
    Error::EdgeList(msg.into())
}

fn two_numbers(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize> {
        tok.ok_or_else(|| err(format!("line {lineno}: expected two integers")))?
            .parse::<usize>()
            .map_err(|e| err(format!("line {lineno}: {e}")))
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(err(format!("line {lineno}: trailing tokens")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines.next().ok_or_else(|| err("missing `n m` header"))?;
    let (n, m) = two_numbers(header, lineno)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let (u, v) = two_numbers(line, lineno)?;
        if u >= n || v >= n || u == v {
            return Err(err(format!("line {lineno}: invalid edge ({u},{v}) for n={n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(format!("header declares {m} edges, found {}", edges.len())));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.edge_count() != m {
        return Err(err("duplicate edges"));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
