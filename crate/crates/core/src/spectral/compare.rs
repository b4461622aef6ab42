//! Ordering of spectral radii with exact tie-breaking.
//!
//! Float enclosures settle the comparison whenever they are disjoint.
//! Overlapping enclosures escalate to exact arithmetic: the largest root of
//! each characteristic polynomial is isolated by Sturm bisection. Equality
//! holds exactly when the gcd of the two squarefree parts has a root in
//! both isolating intervals (every root of the gcd is a root of each
//! polynomial, so such a root is the largest root of both). Otherwise the
//! intervals are halved until they separate.

use super::poly::{char_poly_exact, IntPolynomial};
use super::sturm::{LargestRoot, SturmChain};
use super::{spectral_radius, SpectralEnclosure, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;
use std::cmp::Ordering;
use std::sync::OnceLock;

/// How a comparison was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Float,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub ordering: Ordering,
    pub decision: Decision,
}

#[derive(Debug)]
struct ExactData {
    poly: IntPolynomial,
    root: LargestRoot,
}

impl ExactData {
    fn of(g: &Graph) -> Self {
        let poly = char_poly_exact(g);
        let root = LargestRoot::isolate(&poly).expect("adjacency polynomials have real roots");
        ExactData { poly, root }
    }
}

/// A graph whose spectral radius other graphs are compared against.
///
/// The float enclosure is computed once; the exact data is computed on the
/// first escalation and shared afterwards, so one comparator can serve many
/// worker threads.
#[derive(Debug)]
pub struct RadiusComparator {
    graph: Graph,
    tol: f64,
    enclosure: SpectralEnclosure,
    exact: OnceLock<ExactData>,
}

impl RadiusComparator {
    pub fn new(reference: &Graph) -> Result<Self> {
        Self::with_tol(reference, DEFAULT_TOL)
    }

    pub fn with_tol(reference: &Graph, tol: f64) -> Result<Self> {
        let enclosure = spectral_radius(reference, tol)?;
        Ok(RadiusComparator {
            graph: reference.clone(),
            tol,
            enclosure,
            exact: OnceLock::new(),
        })
    }

    pub fn reference(&self) -> &Graph {
        &self.graph
    }

    pub fn enclosure(&self) -> &SpectralEnclosure {
        &self.enclosure
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    fn exact(&self) -> &ExactData {
        self.exact.get_or_init(|| ExactData::of(&self.graph))
    }

    /// Orders `ρ(g)` against the reference radius.
    pub fn compare(&self, g: &Graph) -> Result<Comparison> {
        let enc = spectral_radius(g, self.tol)?;
        Ok(self.compare_with_enclosure(g, &enc))
    }

    /// As [`compare`](Self::compare) with a precomputed enclosure of `ρ(g)`.
    pub fn compare_with_enclosure(&self, g: &Graph, enc: &SpectralEnclosure) -> Comparison {
        if enc.hi < self.enclosure.lo {
            return Comparison {
                ordering: Ordering::Less,
                decision: Decision::Float,
            };
        }
        if enc.lo > self.enclosure.hi {
            return Comparison {
                ordering: Ordering::Greater,
                decision: Decision::Float,
            };
        }
        Comparison {
            ordering: self.compare_exact(g),
            decision: Decision::Exact,
        }
    }

    /// Exact ordering of `ρ(g)` against the reference.
    pub fn compare_exact(&self, g: &Graph) -> Ordering {
        let theirs = self.exact();
        let ours = ExactData::of(g);
        exact_order(&ours, theirs)
    }
}

fn exact_order(a: &ExactData, b: &ExactData) -> Ordering {
    if a.poly == b.poly {
        return Ordering::Equal;
    }
    let common = a.root.chain().polynomial().gcd(b.root.chain().polynomial());
    if common.degree() >= 1 {
        let chain = SturmChain::new(&common);
        let in_a = chain.count_roots(a.root.lo(), a.root.hi()) > 0;
        let in_b = chain.count_roots(b.root.lo(), b.root.hi()) > 0;
        if in_a && in_b {
            return Ordering::Equal;
        }
    }
    let mut ra = a.root.clone();
    let mut rb = b.root.clone();
    loop {
        if ra.lo() >= rb.hi() {
            return Ordering::Greater;
        }
        if rb.lo() >= ra.hi() {
            return Ordering::Less;
        }
        if ra.width() >= rb.width() {
            ra.refine();
        } else {
            rb.refine();
        }
    }
}

/// Orders `ρ(g)` against `ρ(h)`.
pub fn compare_radius(g: &Graph, h: &Graph) -> Result<Comparison> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::Precondition("compare_radius needs non-empty graphs".into()));
    }
    RadiusComparator::new(h)?.compare(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        clique_join, complete, cycle, disjoint_union, h_extremal, path, petersen,
    };

    fn ord(g: &Graph, h: &Graph) -> Comparison {
        compare_radius(g, h).unwrap()
    }

    #[test]
    fn basic_orderings() {
        let c = ord(&complete(5).unwrap(), &complete(4).unwrap());
        assert_eq!(c.ordering, Ordering::Greater);
        assert_eq!(c.decision, Decision::Float);
        let p = petersen().unwrap();
        let c = ord(&p, &p);
        assert_eq!(c.ordering, Ordering::Equal);
        assert_eq!(c.decision, Decision::Exact);
    }

    #[test]
    fn equal_radius_of_different_graphs() {
        let k3 = complete(3).unwrap();
        let two_k3 = disjoint_union(&k3, &k3).unwrap();
        let c = ord(&cycle(6).unwrap(), &two_k3);
        assert_eq!(c.ordering, Ordering::Equal);
        assert_eq!(c.decision, Decision::Exact);
        // K_8 minus a perfect matching is 6-regular, like H_{8,1}'s K_7
        let mut g = complete(8).unwrap();
        for i in 0..4 {
            g.toggle_edge_unchecked(2 * i, 2 * i + 1);
        }
        let c = ord(&g, &h_extremal(8, 1).unwrap());
        assert_eq!(c.ordering, Ordering::Equal);
        // Petersen and K_4 both have radius 3
        assert_eq!(ord(&petersen().unwrap(), &complete(4).unwrap()).ordering, Ordering::Equal);
    }

    #[test]
    fn exact_path_separates_close_radii() {
        // radii differ by a tiny amount; force the exact path directly
        let g = clique_join(2, &[5, 1, 1]).unwrap();
        let h = clique_join(2, &[4, 2, 1]).unwrap();
        let cmp = RadiusComparator::new(&h).unwrap();
        assert_eq!(cmp.compare_exact(&g), Ordering::Greater);
        let cmp = RadiusComparator::new(&g).unwrap();
        assert_eq!(cmp.compare_exact(&h), Ordering::Less);
        assert_eq!(
            RadiusComparator::new(&path(5).unwrap()).unwrap().compare_exact(&cycle(5).unwrap()),
            Ordering::Greater
        );
    }

    #[test]
    fn rejects_empty() {
        assert!(compare_radius(&Graph::new(0).unwrap(), &complete(2).unwrap()).is_err());
    }
}
