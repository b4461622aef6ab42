//! Spectral quantities of graphs.
//!
//! Float routines return enclosures `[lo, hi]` rather than point values, so
//! callers can tell when a float answer is not decisive and fall back to the
//! exact characteristic-polynomial machinery in [`compare`].

pub mod bounds;
pub mod compare;
pub mod jacobi;
pub mod poly;
pub mod power;
pub mod quotient;
pub mod sturm;

pub use bounds::{hong_bound, kopr_threshold, l_ns, lemma6_poly_values, theorem_n_bound, Lemma6Values};
pub use compare::{compare_radius, Comparison, Decision, RadiusComparator};
pub use jacobi::{full_spectrum, symmetric_eigenvalues};
pub use poly::{char_poly_exact, char_poly_matrix, IntPolynomial};
pub use power::{spectral_radius, spectral_radius_with};
pub use quotient::{quotient_enclosure, quotient_lambda1, quotient_matrix, QuotientMatrix, QuotientSummary};
pub use sturm::{LargestRoot, SturmChain};

use serde::Serialize;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    PowerIteration,
    Quotient,
    Exact,
}

/// An interval known to contain the quantity of interest.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralEnclosure {
    pub lo: f64,
    pub hi: f64,
    pub method: Method,
    pub iterations: usize,
    /// `hi − lo` reached the requested tolerance.
    pub converged: bool,
}

impl SpectralEnclosure {
    pub fn exact_value(v: f64, method: Method) -> Self {
        SpectralEnclosure {
            lo: v,
            hi: v,
            method,
            iterations: 0,
            converged: true,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    /// Eigenvalues in non-increasing order.
    pub values: Vec<f64>,
    /// Off-diagonal Frobenius norm left after the last sweep.
    pub off_diagonal: f64,
    pub sweeps: usize,
    pub converged: bool,
}

impl Spectrum {
    /// `λᵢ`, counted from 1.
    pub fn lambda(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|k| self.values.get(k).copied())
    }
}
