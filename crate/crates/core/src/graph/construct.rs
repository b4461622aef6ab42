//! Constructors for the standard families used throughout the crate.

use super::{check_cap, disjoint_union, join, Graph, VertexSet};
use crate::error::{Error, Result};

/// `nK₁`.
pub fn empty(n: usize) -> Result<Graph> {
    Graph::new(n)
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    check_cap(n)?;
    let full = VertexSet::full(n);
    let rows = (0..n)
        .map(|v| {
            let mut r = full;
            r.remove(v);
            r
        })
        .collect();
    Ok(Graph { n, adj: rows })
}

/// `C_n` for `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param("cycle needs at least 3 vertices"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n`, the path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    join(&empty(s)?, &empty(t)?)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Result<Graph> {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges)
}

/// `H_{n,a} = K_{a-1} ∇ (K_1 ∪ K_{n-a})`.
///
/// Vertices `0..a-1` form the universal clique, vertex `a-1` is the
/// low-degree vertex and `a..n` is the large clique.
pub fn h_extremal(n: usize, a: usize) -> Result<Graph> {
    if a < 1 || n < a + 1 {
        return Err(Error::param(format!(
            "h_extremal needs 1 <= a and n >= a+1 (got n={n}, a={a})"
        )));
    }
    let inner = disjoint_union(&complete(1)?, &complete(n - a)?)?;
    join(&complete(a - 1)?, &inner)
}

/// `K_s ∇ (K_{n₁} ∪ … ∪ K_{n_q})`.
pub fn clique_join(s: usize, parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::param("clique_join needs at least one part"));
    }
    if parts.contains(&0) {
        return Err(Error::param("clique_join parts must be positive"));
    }
    let total = s + parts.iter().sum::<usize>();
    check_cap(total)?;
    let mut union = Graph::new(0)?;
    for &p in parts {
        union = disjoint_union(&union, &complete(p)?)?;
    }
    join(&complete(s)?, &union)
}
