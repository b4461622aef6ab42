//! Parity factors, certified spectral radii and extremal-graph verification.
//!
//! The crate is organised around four layers:
//!
//! * [`graph`]: bit-set graphs, the `H_{n,a}` and clique-join families,
//!   graph6 and edge-list I/O.
//! * [`spectral`]: certified spectral-radius enclosures, Jacobi spectra,
//!   exact characteristic polynomials and exact radius comparison.
//! * [`factor`]: `(a,b)`-parity factor deciders (deficiency search,
//!   gadget-plus-matching, edge-subset search) and their evaluators.
//! * [`harness`]: exhaustive and sampled scans of the spectral extremal
//!   theorem and its supporting lemmas, with JSON/CSV reports.

pub mod error;
pub mod factor;
pub mod graph;
pub mod harness;
pub mod spectral;

pub use error::{Error, Result};
