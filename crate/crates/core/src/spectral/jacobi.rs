//! Cyclic Jacobi eigenvalues for symmetric matrices.

use super::Spectrum;
use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_SWEEPS: usize = 100;

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i][j] * a[i][j];
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a symmetric matrix, sorted descending.
///
/// Sweeps over all pairs `(p, q)` until the off-diagonal Frobenius norm is
/// at most `tol`.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Spectrum> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::param("matrix must be square"));
    }
    let mut sweeps = 0;
    let mut off = off_norm(&a);
    while off > tol && sweeps < MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
        off = off_norm(&a);
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        values,
        off_diagonal: off,
        sweeps,
        converged: off <= tol,
    })
}

/// Full adjacency spectrum `λ₁ ≥ … ≥ λₙ`.
pub fn full_spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    if g.order() == 0 {
        return Err(Error::Precondition("spectrum of the empty graph".into()));
    }
    symmetric_eigenvalues(g.adjacency_f64(), tol)
}
