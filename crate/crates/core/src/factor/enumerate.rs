//! Direct search over edge subsets.

use super::{FactorResult, FactorSpec};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph};

pub const DEFAULT_ENUM_EDGE_CAP: usize = 22;

struct Search<'a> {
    edges: &'a [Edge],
    spec: FactorSpec,
    deg: Vec<usize>,
    /// Undecided incident edges per vertex.
    left: Vec<usize>,
    chosen: Vec<bool>,
}

impl Search<'_> {
    fn settled_ok(&self, v: usize) -> bool {
        self.left[v] > 0 || self.spec.admits(self.deg[v])
    }

    fn go(&mut self, i: usize) -> bool {
        if i == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[i];
        self.left[u] -= 1;
        self.left[v] -= 1;
        if self.deg[u] < self.spec.b && self.deg[v] < self.spec.b {
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen[i] = true;
            if self.settled_ok(u) && self.settled_ok(v) && self.go(i + 1) {
                return true;
            }
            self.chosen[i] = false;
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
        let reachable = |x: usize, s: &Self| s.deg[x] + s.left[x] >= s.spec.a;
        if reachable(u, self) && reachable(v, self) && self.settled_ok(u) && self.settled_ok(v) && self.go(i + 1) {
            return true;
        }
        self.left[u] += 1;
        self.left[v] += 1;
        false
    }
}

/// Searches edge subsets in include-first order over the sorted edge list
/// and returns the first factor met. Branches are cut as soon as a degree
/// exceeds `b`, can no longer reach `a`, or a vertex with no undecided
/// edges has an inadmissible degree; the answer is the same as scanning
/// all `2^m` subsets in that order.
pub fn decide_enum(g: &Graph, spec: FactorSpec, m_cap: usize) -> Result<FactorResult> {
    let m = g.edge_count();
    if m > m_cap {
        return Err(Error::EdgeCapacity { m, cap: m_cap });
    }
    if spec.parity_obstructed(g.order()) {
        return Ok(FactorResult::no(None));
    }
    let edges = g.edges();
    let left = g.degrees();
    if left.iter().any(|&d| d < spec.a) {
        return Ok(FactorResult::no(None));
    }
    let mut s = Search {
        edges: &edges,
        spec,
        deg: vec![0; g.order()],
        left,
        chosen: vec![false; m],
    };
    Ok(if s.go(0) {
        let f = EdgeSet::from_edges(edges.iter().zip(&s.chosen).filter(|(_, &c)| c).map(|(&e, _)| e));
        FactorResult::yes(Some(f))
    } else {
        FactorResult::no(None)
    })
}
