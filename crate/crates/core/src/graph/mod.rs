//! Simple undirected graphs stored as one bit-set row per vertex.
//!
//! A row is a single `u128`, so every graph holds at most [`MAX_VERTICES`]
//! vertices. All constructors produce symmetric, loop-free adjacency and
//! never touch bits at or above `n`.

mod construct;
mod edgelist;
mod graph6;
mod random;
mod recognize;

pub use construct::{
    clique_join, complete, complete_bipartite, cycle, empty, h_extremal, path, petersen, star,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};
pub use random::{random_graph, RandomModel, SplitMixStream};
pub use recognize::recognize_h_extremal;
pub(crate) use random::pair_at;

use crate::error::{Error, Result};
use std::fmt;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex indices below [`MAX_VERTICES`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 128 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Least element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An unordered vertex pair, stored with `u < v`.
pub type Edge = (usize, usize);

/// A set of edges, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(it: I) -> Self {
        let mut v: Vec<Edge> = it
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn contains(&self, e: Edge) -> bool {
        let e = if e.0 < e.1 { e } else { (e.1, e.0) };
        self.0.binary_search(&e).is_ok()
    }

    /// Degree of every vertex `0..n` in the subgraph spanned by these edges.
    pub fn degrees(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for &(u, v) in &self.0 {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }
}

/// An ordered sequence of disjoint, non-empty classes covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionClasses {
    classes: Vec<VertexSet>,
}

impl PartitionClasses {
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for (i, c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::Partition(format!("class {i} is empty")));
            }
            if !c.is_disjoint(seen) {
                return Err(Error::Partition(format!("class {i} overlaps an earlier class")));
            }
            seen = seen.union(*c);
        }
        if seen != VertexSet::full(n) {
            return Err(Error::Partition(format!(
                "classes do not cover exactly the vertices 0..{n}"
            )));
        }
        Ok(PartitionClasses { classes })
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, {} edges: {:?})", self.n, self.edge_count(), self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        check_cap(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from rows, validating symmetry, loops and range.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        check_cap(n)?;
        let mask = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if !row.difference(mask).is_empty() {
                return Err(Error::param(format!("row {v} has bits at or above n={n}")));
            }
            if row.contains(v) {
                return Err(Error::param(format!("self-loop at vertex {v}")));
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(Error::param(format!("asymmetric adjacency between {v} and {u}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub(crate) fn toggle_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].0 ^= 1u128 << v;
        self.adj[v].0 ^= 1u128 << u;
    }

    /// Returns a copy with the edge `uv` added (or removed, when present).
    pub fn with_toggled(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::param(format!("invalid pair ({u},{v})")));
        }
        let mut g = self.clone();
        g.toggle_edge_unchecked(u, v);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.len()).collect()
    }

    /// `δ(G)`; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Degree of `v` after deleting the vertices of `deleted`.
    #[inline]
    pub fn degree_in_deleted(&self, deleted: VertexSet, v: usize) -> usize {
        self.adj[v].difference(deleted).len()
    }

    /// Number of edges with both ends in `s`.
    pub fn e_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection(s).len()).sum::<usize>() / 2
    }

    /// Number of edges with one end in `s` and the other in `t`.
    pub fn e_between(&self, s: VertexSet, t: VertexSet) -> Result<usize> {
        if !s.is_disjoint(t) {
            return Err(Error::Precondition("e_between needs disjoint sets".into()));
        }
        Ok(self.e_between_unchecked(s, t))
    }

    #[inline]
    pub(crate) fn e_between_unchecked(&self, s: VertexSet, t: VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection(t).len()).sum()
    }

    /// Connected components of the subgraph induced on `within`, each as a
    /// vertex set, ordered by least vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = within;
        while let Some(root) = rest.first() {
            let comp = self.flood(root, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// The component of `root` inside `within`.
    #[inline]
    pub(crate) fn flood(&self, root: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(root);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            next = next.intersection(within).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.flood(0, self.vertices()).len() == self.n
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut r = full.difference(self.adj[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `keep`, relabelled to `0..|keep|` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| self.adj[v].intersection(keep).iter().map(|u| pos[u]).collect())
            .collect();
        Graph { n: verts.len(), adj }
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::param("permutation length differs from vertex count"));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::param("not a permutation"));
            }
            seen.insert(p);
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Dense 0/1 adjacency matrix as `f64`.
    pub fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| if self.adj[u].contains(v) { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect()
    }
}

#[inline]
fn shifted(s: VertexSet, k: usize) -> VertexSet {
    VertexSet(s.0.checked_shl(k as u32).unwrap_or(0))
}

#[inline]
pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            n,
            cap: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Vertex-disjoint union; vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n + h.n;
    check_cap(n)?;
    let shift = g.n;
    let mut adj = g.adj.clone();
    adj.extend(h.adj.iter().map(|r| shifted(*r, shift)));
    Ok(Graph { n, adj })
}

/// `g ∇ h`: disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n + h.n;
    check_cap(n)?;
    let shift = g.n;
    let g_part = VertexSet::full(g.n);
    let h_part = shifted(VertexSet::full(h.n), shift);
    let mut adj = Vec::with_capacity(n);
    adj.extend(g.adj.iter().map(|r| r.union(h_part)));
    adj.extend(h.adj.iter().map(|r| shifted(*r, shift).union(g_part)));
    Ok(Graph { n, adj })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        cycle(4).unwrap()
    }

    #[test]
    fn union_of_k1_and_k7() {
        let g = disjoint_union(&complete(1).unwrap(), &complete(7).unwrap()).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 21);
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn union_and_join_identities() {
        let g = c4();
        let e = empty(0).unwrap();
        assert_eq!(disjoint_union(&e, &g).unwrap(), g);
        assert_eq!(join(&e, &g).unwrap(), g);
        assert_eq!(join(&g, &e).unwrap(), g);
        let k3 = complete(3).unwrap();
        assert_eq!(disjoint_union(&k3, &k3).unwrap().components().len(), 2);
    }

    #[test]
    fn join_k2_k3_is_k5() {
        let g = join(&complete(2).unwrap(), &complete(3).unwrap()).unwrap();
        assert_eq!(g, complete(5).unwrap());
    }

    #[test]
    fn join_gives_h_9_2() {
        let k1 = complete(1).unwrap();
        let inner = disjoint_union(&k1, &complete(7).unwrap()).unwrap();
        assert_eq!(join(&k1, &inner).unwrap(), h_extremal(9, 2).unwrap());
    }

    #[test]
    fn complement_cases() {
        let k5 = complete(5).unwrap();
        assert_eq!(k5.complement().edge_count(), 0);
        let g = c4().complement();
        assert_eq!(g.edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(g.components().len(), 2);
        assert_eq!(c4().complement().complement(), c4());
    }

    #[test]
    fn components_ordering() {
        let g = Graph::from_edges(6, [(5, 3), (1, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(
            comps.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![1, 4], vec![2], vec![3, 5]]
        );
        assert_eq!(complete(4).unwrap().components().len(), 1);
        assert_eq!(empty(3).unwrap().components().len(), 3);
    }

    #[test]
    fn counting_primitives() {
        let k4 = complete(4).unwrap();
        let s0 = VertexSet::from_vertices([0]);
        let s12 = VertexSet::from_vertices([1, 2]);
        assert_eq!(k4.e_between(s0, s12).unwrap(), 2);
        assert_eq!(k4.e_within(VertexSet::from_vertices([0, 1, 2])), 3);
        assert!(k4.e_between(s0, s0).is_err());
        for v in 0..4 {
            assert_eq!(k4.degree_in_deleted(VertexSet::EMPTY, v), k4.degree(v));
        }
        assert_eq!(k4.degree_in_deleted(s12, 0), 1);
        assert_eq!(k4.min_degree(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(Graph::new(MAX_VERTICES + 1), Err(Error::Capacity { .. })));
        let big = complete(100).unwrap();
        assert!(disjoint_union(&big, &big).unwrap_err().is_capacity());
        assert!(join(&big, &complete(29).unwrap()).unwrap_err().is_capacity());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        let rows = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_rows(rows).is_err());
        let rows = vec![VertexSet::singleton(0)];
        assert!(Graph::from_rows(rows).is_err());
    }

    #[test]
    fn partition_validation() {
        let ok = PartitionClasses::new(3, vec![VertexSet::from_vertices([0, 2]), VertexSet::singleton(1)]);
        assert!(ok.is_ok());
        assert!(PartitionClasses::new(3, vec![VertexSet::full(2)]).is_err());
        assert!(PartitionClasses::new(2, vec![VertexSet::full(2), VertexSet::singleton(1)]).is_err());
        assert!(PartitionClasses::new(2, vec![VertexSet::full(2), VertexSet::EMPTY]).is_err());
    }
}
