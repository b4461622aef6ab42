//! Quotient matrices of vertex partitions.

use super::poly::{char_poly_matrix, IntPolynomial};
use super::{Method, SpectralEnclosure, DEFAULT_MAX_ITER};
use crate::error::{Error, Result};
use crate::graph::{Graph, PartitionClasses};
use num_bigint::BigInt;
use num_rational::Ratio;
use serde::Serialize;

/// `b(i,j)` = average number of neighbours in class `j` of a vertex in
/// class `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    entries: Vec<Vec<Ratio<i64>>>,
    equitable: bool,
}

impl QuotientMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Ratio<i64>>] {
        &self.entries
    }

    /// Every block has constant row sums.
    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| *x.numer() as f64 / *x.denom() as f64).collect())
            .collect()
    }

    /// Integer entries, available whenever all averages are whole numbers
    /// (always the case for equitable partitions).
    pub fn integer_entries(&self) -> Option<Vec<Vec<i64>>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
            .collect()
    }

    pub fn trace(&self) -> Ratio<i64> {
        (0..self.size()).map(|i| self.entries[i][i]).sum()
    }

    /// Exact `det(xI − B)` for integer-valued quotient matrices.
    pub fn char_poly(&self) -> Option<IntPolynomial> {
        let m: Vec<Vec<BigInt>> = self
            .integer_entries()?
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        Some(char_poly_matrix(&m))
    }

    /// Builds a matrix directly from integer rows (not tied to a graph).
    pub fn from_integer_rows(rows: &[Vec<i64>], equitable: bool) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::param("quotient matrix must be square"));
        }
        Ok(QuotientMatrix {
            entries: rows
                .iter()
                .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
                .collect(),
            equitable,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientSummary {
    pub rows: Vec<Vec<f64>>,
    pub equitable: bool,
}

impl From<&QuotientMatrix> for QuotientSummary {
    fn from(q: &QuotientMatrix) -> Self {
        QuotientSummary {
            rows: q.to_f64(),
            equitable: q.is_equitable(),
        }
    }
}

pub fn quotient_matrix(g: &Graph, partition: &PartitionClasses) -> Result<QuotientMatrix> {
    // re-validate against this graph's vertex set
    let partition = PartitionClasses::new(g.order(), partition.classes().to_vec())?;
    let classes = partition.classes();
    let k = classes.len();
    let mut entries = vec![vec![Ratio::from_integer(0i64); k]; k];
    let mut equitable = true;
    for (i, xi) in classes.iter().enumerate() {
        for (j, xj) in classes.iter().enumerate() {
            let mut counts = xi.iter().map(|v| g.neighbors(v).intersection(*xj).len() as i64);
            let first = counts.next().expect("classes are non-empty");
            let mut total = first;
            for c in counts {
                total += c;
                if c != first {
                    equitable = false;
                }
            }
            entries[i][j] = Ratio::new(total, xi.len() as i64);
        }
    }
    Ok(QuotientMatrix { entries, equitable })
}

/// Largest eigenvalue of an equitable quotient matrix, as an enclosure.
///
/// Runs the same shifted Collatz–Wielandt iteration as the graph routine,
/// on the small non-negative matrix `B + I`.
pub fn quotient_enclosure(q: &QuotientMatrix, tol: f64) -> Result<SpectralEnclosure> {
    if !q.is_equitable() {
        return Err(Error::Precondition("quotient matrix is not equitable".into()));
    }
    let b = q.to_f64();
    let k = b.len();
    if k == 0 {
        return Err(Error::Precondition("empty quotient matrix".into()));
    }
    let max_row: f64 = b.iter().map(|r| r.iter().sum::<f64>()).fold(0.0, f64::max);
    let pad = 4.0 * f64::EPSILON * (max_row + 2.0) * (max_row + 2.0) * k as f64;
    let mut x = vec![1.0f64; k];
    let mut best_lo = f64::NEG_INFINITY;
    let mut best_hi = f64::INFINITY;
    let mut iterations = 0;
    while iterations < DEFAULT_MAX_ITER {
        iterations += 1;
        let y: Vec<f64> = (0..k)
            .map(|i| x[i] + (0..k).map(|j| b[i][j] * x[j]).sum::<f64>())
            .collect();
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for i in 0..k {
            let r = y[i] / x[i];
            lo = lo.min(r);
            hi = hi.max(r);
        }
        best_lo = best_lo.max(lo - 1.0 - pad);
        best_hi = best_hi.min(hi - 1.0 + pad);
        if best_hi - best_lo <= tol {
            break;
        }
        // y ≥ x > 0 componentwise because of the unit shift
        let top = y.iter().cloned().fold(0.0, f64::max);
        x = y.iter().map(|v| v / top).collect();
    }
    Ok(SpectralEnclosure {
        lo: best_lo,
        hi: best_hi,
        method: Method::Quotient,
        iterations,
        converged: best_hi - best_lo <= tol,
    })
}

/// `λ₁(B)` for an equitable quotient of a connected graph; equals `ρ(G)`.
pub fn quotient_lambda1(q: &QuotientMatrix, tol: f64) -> Result<f64> {
    Ok(quotient_enclosure(q, tol)?.midpoint())
}
