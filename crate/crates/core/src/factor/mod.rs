//! `(a,b)`-parity factors: specifications, deciders and checks.
//!
//! Three deciders answer the same question independently:
//!
//! * [`decide_lovasz`] scans all disjoint pairs `(S, T)` for a negative
//!   deficiency and returns the least one as a certificate;
//! * [`decide_matching`] reduces to perfect matching on an auxiliary graph;
//! * [`decide_enum`] searches edge subsets directly.

mod deficiency;
mod enumerate;
mod gadget;
mod matching;

pub use deficiency::{decide_lovasz, eta_general, eta_parity, q_count, DEFAULT_LOVASZ_CAP};
pub use enumerate::{decide_enum, DEFAULT_ENUM_EDGE_CAP};
pub use gadget::{build_gadget, decide_matching, GadgetMap, VertexGadget};
pub use matching::{max_matching, maximum_matching, AuxGraph};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Degree window `a ≤ d_F(v) ≤ b` with `d_F(v) ≡ b (mod 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FactorSpec {
    pub a: usize,
    pub b: usize,
}

impl FactorSpec {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || a > b || (b - a) % 2 != 0 {
            return Err(Error::param(format!(
                "need 1 <= a <= b with a ≡ b (mod 2) (got a={a}, b={b})"
            )));
        }
        Ok(FactorSpec { a, b })
    }

    /// `n·a` is odd, so no graph of order `n` has a factor.
    pub fn parity_obstructed(&self, n: usize) -> bool {
        (n * self.a) % 2 == 1
    }

    pub(crate) fn admits(&self, d: usize) -> bool {
        self.a <= d && d <= self.b && (d % 2 == self.b % 2)
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Per-vertex bounds `g(v) ≤ d_F(v) ≤ f(v)`, optionally with
/// `d_F(v) ≡ f(v) (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralFactorSpec {
    g: Vec<i64>,
    f: Vec<i64>,
    parity: bool,
}

impl GeneralFactorSpec {
    pub fn new(g: Vec<i64>, f: Vec<i64>, parity: bool) -> Result<Self> {
        if g.len() != f.len() {
            return Err(Error::param("g and f must have one entry per vertex"));
        }
        for (v, (&lo, &hi)) in g.iter().zip(&f).enumerate() {
            if lo < 0 || lo > hi {
                return Err(Error::param(format!("need 0 <= g <= f at vertex {v}")));
            }
            if parity && (hi - lo) % 2 != 0 {
                return Err(Error::param(format!("g and f differ in parity at vertex {v}")));
            }
        }
        Ok(GeneralFactorSpec { g, f, parity })
    }

    /// `g ≡ a`, `f ≡ b` on `n` vertices, parity flag set.
    pub fn uniform(n: usize, spec: FactorSpec) -> Self {
        GeneralFactorSpec {
            g: vec![spec.a as i64; n],
            f: vec![spec.b as i64; n],
            parity: true,
        }
    }

    pub fn g(&self) -> &[i64] {
        &self.g
    }

    pub fn f(&self) -> &[i64] {
        &self.f
    }

    pub fn parity(&self) -> bool {
        self.parity
    }

    pub fn order(&self) -> usize {
        self.g.len()
    }
}

/// Disjoint `(S, T)` with their deficiency.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeficiencyCertificate {
    pub s: VertexSet,
    pub t: VertexSet,
    pub eta: i64,
    pub q: i64,
}

impl DeficiencyCertificate {
    /// Recomputes `η` and `q` from scratch and compares.
    pub fn verify(&self, g: &Graph, spec: FactorSpec) -> bool {
        match (eta_parity(g, self.s, self.t, spec), q_count(g, self.s, self.t, spec.a)) {
            (Ok(eta), Ok(q)) => eta == self.eta && q as i64 == self.q && eta <= -1,
            _ => false,
        }
    }
}

impl Serialize for DeficiencyCertificate {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("DeficiencyCertificate", 4)?;
        st.serialize_field("S", &self.s.to_vec())?;
        st.serialize_field("T", &self.t.to_vec())?;
        st.serialize_field("eta", &self.eta)?;
        st.serialize_field("q", &self.q)?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorDecision {
    Yes,
    No,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorResult {
    pub decision: FactorDecision,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_edges: Option<EdgeSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<DeficiencyCertificate>,
}

impl FactorResult {
    pub fn yes(edges: Option<EdgeSet>) -> Self {
        FactorResult {
            decision: FactorDecision::Yes,
            factor_edges: edges,
            certificate: None,
        }
    }

    pub fn no(certificate: Option<DeficiencyCertificate>) -> Self {
        FactorResult {
            decision: FactorDecision::No,
            factor_edges: None,
            certificate,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.decision == FactorDecision::Yes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorMethod {
    Lovasz,
    Matching,
    Enum,
}

impl FromStr for FactorMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lovasz" => Ok(FactorMethod::Lovasz),
            "matching" => Ok(FactorMethod::Matching),
            "enum" => Ok(FactorMethod::Enum),
            other => Err(Error::param(format!("unknown factor method '{other}'"))),
        }
    }
}

/// Runs one decider with its default cap.
pub fn decide(g: &Graph, spec: FactorSpec, method: FactorMethod) -> Result<FactorResult> {
    match method {
        FactorMethod::Lovasz => decide_lovasz(g, spec, DEFAULT_LOVASZ_CAP),
        FactorMethod::Matching => Ok(decide_matching(g, spec)),
        FactorMethod::Enum => decide_enum(g, spec, DEFAULT_ENUM_EDGE_CAP),
    }
}

/// `F ⊆ E(G)` and every vertex has an admissible degree in `F`.
pub fn validate_factor(g: &Graph, f: &EdgeSet, spec: FactorSpec) -> bool {
    if f.iter().any(|&(u, v)| u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
        return false;
    }
    f.degrees(g.order()).into_iter().all(|d| spec.admits(d))
}

/// The Liu–Lu degree hypothesis, in integer arithmetic.
pub fn liu_lu_check(g: &Graph, spec: FactorSpec) -> bool {
    let (a, b, n) = (spec.a, spec.b, g.order());
    if n == 0 || !g.is_connected() || spec.parity_obstructed(n) {
        return false;
    }
    if 2 * a * n < b * (a + b) * (a + b + 2) {
        return false;
    }
    if a * g.min_degree() < a * a + b - a {
        return false;
    }
    let deg = g.degrees();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && (a + b) * deg[u].max(deg[v]) < a * n {
                return false;
            }
        }
    }
    true
}
