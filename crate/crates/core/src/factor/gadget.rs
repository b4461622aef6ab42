//! Reduction of `(a,b)`-parity factors to perfect matching.
//!
//! A vertex `v` of degree `d` becomes `d` edge-nodes, `max(d−b, 0)` forced
//! cores and `min(d,b) − a` flexible cores. Every core is adjacent to all
//! of `v`'s edge-nodes and the flexible cores form a clique. Each edge `uv`
//! joins an edge-node of `u` to one of `v`.
//!
//! In a perfect matching the forced cores absorb `d − b` edge-nodes when
//! `d > b`; the flexible cores absorb `j` more, and the remaining
//! `min(d,b) − a − j` of them pair up among themselves, so `j` has the
//! parity of `min(d,b) − a`. The edge-nodes left for cross edges number
//! `min(d,b) − j`, which ranges over `a, a+2, …, min(d,b)`: exactly the
//! admissible degrees.

use super::matching::{perfect_matching, AuxGraph};
use super::{validate_factor, FactorResult, FactorSpec};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph};
use std::ops::Range;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexGadget {
    pub edge_nodes: Range<usize>,
    pub forced_cores: Range<usize>,
    pub flexible_cores: Range<usize>,
}

#[derive(Clone, Debug)]
pub struct GadgetMap {
    pub aux: AuxGraph,
    /// The original edges, in sorted order.
    pub edges: Vec<Edge>,
    /// `cross[i]` is the auxiliary edge standing for `edges[i]`.
    pub cross: Vec<(usize, usize)>,
    pub vertices: Vec<VertexGadget>,
}

impl GadgetMap {
    pub fn node_count(&self) -> usize {
        self.aux.order()
    }
}

/// Builds the auxiliary graph. Fails when some degree is below `a`.
pub fn build_gadget(g: &Graph, spec: FactorSpec) -> Result<GadgetMap> {
    let (a, b) = (spec.a, spec.b);
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) < a) {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {} < a = {a}; no factor exists",
            g.degree(v)
        )));
    }
    let edges = g.edges();
    let mut aux = AuxGraph::new(0);
    let mut vertices = Vec::with_capacity(g.order());
    // edge-node of `v` for the edge at index `i`, filled as we go
    let mut slot = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        slot[u].push(i);
        slot[v].push(i);
    }
    let mut node_of = vec![[0usize; 2]; edges.len()];
    for v in 0..g.order() {
        let d = g.degree(v);
        let start = aux.order();
        for &i in &slot[v] {
            let node = aux.add_node();
            let side = usize::from(edges[i].1 == v);
            node_of[i][side] = node;
        }
        let edge_nodes = start..aux.order();
        let forced_start = aux.order();
        for _ in 0..d.saturating_sub(b) {
            let c = aux.add_node();
            for e in edge_nodes.clone() {
                aux.add_edge(c, e);
            }
        }
        let forced_cores = forced_start..aux.order();
        let flex_start = aux.order();
        for _ in 0..d.min(b) - a {
            let c = aux.add_node();
            for e in edge_nodes.clone() {
                aux.add_edge(c, e);
            }
            for other in flex_start..c {
                aux.add_edge(c, other);
            }
        }
        let flexible_cores = flex_start..aux.order();
        vertices.push(VertexGadget {
            edge_nodes,
            forced_cores,
            flexible_cores,
        });
    }
    let cross: Vec<(usize, usize)> = node_of.iter().map(|&[x, y]| (x, y)).collect();
    for &(x, y) in &cross {
        aux.add_edge(x, y);
    }
    Ok(GadgetMap {
        aux,
        edges,
        cross,
        vertices,
    })
}

/// Decides by perfect matching on the auxiliary graph. A `yes` carries the
/// factor read off the matched cross edges.
pub fn decide_matching(g: &Graph, spec: FactorSpec) -> FactorResult {
    if spec.parity_obstructed(g.order()) || g.min_degree() < spec.a && g.order() > 0 {
        return FactorResult::no(None);
    }
    let gadget = build_gadget(g, spec).expect("degrees checked above");
    match perfect_matching(&gadget.aux) {
        None => FactorResult::no(None),
        Some(mate) => {
            let f = EdgeSet::from_edges(
                gadget
                    .cross
                    .iter()
                    .zip(&gadget.edges)
                    .filter(|((x, y), _)| mate[*x] == *y)
                    .map(|(_, &e)| e),
            );
            assert!(validate_factor(g, &f, spec), "gadget produced an invalid factor");
            FactorResult::yes(Some(f))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, h_extremal, petersen, random_graph, star, RandomModel};

    fn spec(a: usize, b: usize) -> FactorSpec {
        FactorSpec::new(a, b).unwrap()
    }

    #[test]
    fn node_counts() {
        let k4 = build_gadget(&complete(4).unwrap(), spec(1, 1)).unwrap();
        assert_eq!(k4.node_count(), 20);
        assert!(k4.vertices.iter().all(|v| v.edge_nodes.len() == 3
            && v.forced_cores.len() == 2
            && v.flexible_cores.is_empty()));
        let st = build_gadget(&star(3).unwrap(), spec(1, 3)).unwrap();
        assert_eq!(st.vertices[0].edge_nodes.len() + st.vertices[0].flexible_cores.len(), 5);
        assert_eq!(st.vertices[0].forced_cores.len(), 0);
        for v in 1..4 {
            assert_eq!(st.vertices[v].edge_nodes.len(), 1);
            assert!(st.vertices[v].forced_cores.is_empty() && st.vertices[v].flexible_cores.is_empty());
        }
        assert_eq!(st.node_count(), 8);
    }

    #[test]
    fn node_count_formula_and_parity() {
        for seed in 0..200 {
            let n = 2 + seed as usize % 9;
            let g = random_graph(n, RandomModel::Probability(0.7), seed).unwrap();
            for sp in [spec(1, 1), spec(1, 3), spec(2, 2), spec(2, 4), spec(3, 3)] {
                let Ok(gm) = build_gadget(&g, sp) else {
                    assert!(g.min_degree() < sp.a);
                    continue;
                };
                assert_eq!(gm.node_count(), 4 * g.edge_count() - n * sp.a);
                if n * sp.a % 2 == 0 {
                    assert_eq!(gm.node_count() % 2, 0);
                }
                assert_eq!(gm.cross.len(), g.edge_count());
                for (&(x, y), &(u, v)) in gm.cross.iter().zip(&gm.edges) {
                    assert!(gm.vertices[u].edge_nodes.contains(&x));
                    assert!(gm.vertices[v].edge_nodes.contains(&y));
                }
            }
        }
    }

    #[test]
    fn decide_examples() {
        assert!(!decide_matching(&h_extremal(8, 1).unwrap(), spec(1, 1)).is_yes());
        let k4 = decide_matching(&complete(4).unwrap(), spec(2, 2));
        let f = k4.factor_edges.unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.degrees(4).iter().all(|&d| d == 2));
        assert!(decide_matching(&petersen().unwrap(), spec(1, 3)).is_yes());
        assert!(decide_matching(&star(3).unwrap(), spec(1, 3)).is_yes());
        assert!(!decide_matching(&star(3).unwrap(), spec(1, 1)).is_yes());
        assert!(decide_matching(&Graph::new(0).unwrap(), spec(1, 1)).is_yes());
    }
}
