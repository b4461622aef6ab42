//! Closed-form bounds and thresholds.

use super::quotient::{quotient_matrix, QuotientMatrix};
use crate::error::{Error, Result};
use crate::graph::{clique_join, Graph, PartitionClasses, VertexSet, MAX_VERTICES};
use num_bigint::BigInt;
use num_rational::Ratio;
use serde::Serialize;

/// Hong's upper bound `√(2m − n + 1)` for connected graphs.
pub fn hong_bound(g: &Graph) -> Result<f64> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Precondition("hong_bound needs a connected graph".into()));
    }
    let m = g.edge_count() as f64;
    let n = g.order() as f64;
    Ok((2.0 * m - n + 1.0).sqrt())
}

/// The `λ₃` threshold for `(1,b)`-parity factors in `k`-regular graphs.
///
/// The case split uses the parity of `k` and of `⌈k/b⌉`.
pub fn kopr_threshold(k: u64, b: u64) -> Result<f64> {
    if k < 3 || b == 0 || b % 2 == 0 || b >= k {
        return Err(Error::param(format!(
            "kopr_threshold needs k >= 3 and odd b < k (got k={k}, b={b})"
        )));
    }
    let c = k.div_ceil(b) as f64;
    let kf = k as f64;
    let (shift, subtract) = match (k % 2 == 0, (k.div_ceil(b)) % 2 == 0) {
        (true, true) => (2.0, 2.0),
        (true, false) => (2.0, 1.0),
        (false, false) => (3.0, 2.0),
        (false, true) => (3.0, 1.0),
    };
    Ok((kf - shift + ((kf + shift).powi(2) - 4.0 * (c - subtract)).sqrt()) / 2.0)
}

/// `max{2a(a+1) + b − 3, (2a+2)(a+1)}`.
pub fn theorem_n_bound(a: u64, b: u64) -> Result<u64> {
    if a == 0 || a > b || (b - a) % 2 != 0 {
        return Err(Error::param(format!(
            "need 1 <= a <= b with a ≡ b (mod 2) (got a={a}, b={b})"
        )));
    }
    Ok((2 * a * (a + 1) + b - 3).max((2 * a + 2) * (a + 1)))
}

/// Exact values of the characteristic polynomial of the three-class
/// quotient of `L_{n,s} = K_s ∇ (K_{n−s−3} ∪ 3K₁)`.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma6Values {
    pub n: i64,
    pub s: i64,
    /// Rows of the quotient for classes `(K_s, 3K₁, K_{n−s−3})`.
    pub matrix: Vec<Vec<i64>>,
    pub f_at_n_minus_2: String,
    pub f_at_n_minus_4: String,
    pub expected_f_at_n_minus_2: String,
    pub expected_f_at_n_minus_4: String,
    pub trace: i64,
    /// Diagonal sum `(s−1) + 0 + (n−s−4)` of the matrix above.
    pub expected_trace: i64,
    /// Whether the matrix was read off the constructed graph.
    pub from_graph: bool,
}

impl Lemma6Values {
    pub fn holds(&self) -> bool {
        self.f_at_n_minus_2 == self.expected_f_at_n_minus_2
            && self.f_at_n_minus_4 == self.expected_f_at_n_minus_4
            && self.trace == self.expected_trace
    }
}

pub(crate) fn l_ns_partition(n: usize, s: usize) -> Result<PartitionClasses> {
    // clique_join order: K_s, K_{n-s-3}, then the three K_1
    PartitionClasses::new(
        n,
        vec![
            VertexSet::from_vertices(0..s),
            VertexSet::from_vertices(n - 3..n),
            VertexSet::from_vertices(s..n - 3),
        ],
    )
}

/// `L_{n,s}` together with its equitable three-class partition.
pub fn l_ns(n: usize, s: usize) -> Result<(Graph, PartitionClasses)> {
    if s < 1 || n < s + 4 {
        return Err(Error::param(format!("L_(n,s) needs s >= 1, n >= s+4 (got n={n}, s={s})")));
    }
    let g = clique_join(s, &[n - s - 3, 1, 1, 1])?;
    let p = l_ns_partition(n, s)?;
    Ok((g, p))
}

pub fn lemma6_poly_values(n: i64, s: i64) -> Result<Lemma6Values> {
    if s < 1 || n < 4 * s + 1 {
        return Err(Error::param(format!("need s >= 1 and n >= 4s+1 (got n={n}, s={s})")));
    }
    let (q, from_graph) = if n as usize <= MAX_VERTICES {
        let (g, p) = l_ns(n as usize, s as usize)?;
        (quotient_matrix(&g, &p)?, true)
    } else {
        let rows = vec![vec![s - 1, 3, n - s - 3], vec![s, 0, 0], vec![s, 0, n - s - 4]];
        (QuotientMatrix::from_integer_rows(&rows, true)?, false)
    };
    let matrix = q.integer_entries().expect("equitable quotient has integer entries");
    let f = q.char_poly().expect("integer quotient");
    let at = |x: i64| f.eval(&BigInt::from(x)).to_string();
    let trace: Ratio<i64> = q.trace();
    Ok(Lemma6Values {
        n,
        s,
        matrix,
        f_at_n_minus_2: at(n - 2),
        f_at_n_minus_4: at(n - 4),
        expected_f_at_n_minus_2: (BigInt::from(2 * n * n - 6 * n - 3 * s * s - 6 * s + 4)).to_string(),
        expected_f_at_n_minus_4: (BigInt::from(-3 * s * s)).to_string(),
        trace: trace.to_integer(),
        expected_trace: n - 5,
        from_graph,
    })
}
