//! Python bindings: graphs, spectral radius, parity factor decisions and
//! the theorem scan.

use num_bigint::BigInt;
use parfact::factor::{decide, FactorMethod, FactorSpec};
use parfact::graph::{self, Graph};
use parfact::harness::{verify_main_theorem, ScanMode, TheoremScan};
use parfact::spectral;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use std::cmp::Ordering;

create_exception!(pyparfact, CapacityError, PyException, "Input exceeds a size limit.");

fn err(e: parfact::Error) -> PyErr {
    if e.is_capacity() {
        CapacityError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

/// Simple undirected graph on vertices 0..n.
#[pyclass(name = "Graph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: Graph,
}

fn wrap(r: parfact::Result<Graph>) -> PyResult<PyGraph> {
    r.map(|inner| PyGraph { inner }).map_err(err)
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        wrap(Graph::from_edges(n, edges))
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        wrap(graph::parse_graph6(s))
    }

    /// `K_{a-1}` joined with `K_1 + K_{n-a}`.
    #[staticmethod]
    fn h(n: usize, a: usize) -> PyResult<Self> {
        wrap(graph::h_extremal(n, a))
    }

    #[staticmethod]
    fn l(n: usize, s: usize) -> PyResult<Self> {
        wrap(spectral::l_ns(n, s).map(|(g, _)| g))
    }

    #[staticmethod]
    fn clique_join(s: usize, parts: Vec<usize>) -> PyResult<Self> {
        wrap(graph::clique_join(s, &parts))
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        wrap(graph::complete(n))
    }

    #[staticmethod]
    fn petersen() -> PyResult<Self> {
        wrap(graph::petersen())
    }

    fn graph6(&self) -> String {
        graph::write_graph6(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn complement(&self) -> Self {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.order(), self.inner.edge_count())
    }
}

/// Enclosure `(lo, hi)` of the spectral radius.
#[pyfunction]
#[pyo3(signature = (g, tol = 1e-10))]
fn spectral_radius(g: &PyGraph, tol: f64) -> PyResult<(f64, f64)> {
    let e = spectral::spectral_radius(&g.inner, tol).map_err(err)?;
    Ok((e.lo, e.hi))
}

/// Adjacency eigenvalues, descending.
#[pyfunction]
#[pyo3(signature = (g, tol = 1e-12))]
fn spectrum(g: &PyGraph, tol: f64) -> PyResult<Vec<f64>> {
    Ok(spectral::full_spectrum(&g.inner, tol).map_err(err)?.values)
}

/// Characteristic polynomial coefficients, leading coefficient first.
#[pyfunction]
fn charpoly(g: &PyGraph) -> Vec<BigInt> {
    let p = spectral::char_poly_exact(&g.inner);
    p.coeffs().iter().rev().cloned().collect()
}

/// `(-1|0|1, "float"|"exact")` comparing rho(g) with rho(h).
#[pyfunction]
fn compare_radius(g: &PyGraph, h: &PyGraph) -> PyResult<(i8, &'static str)> {
    let c = spectral::compare_radius(&g.inner, &h.inner).map_err(err)?;
    let o = match c.ordering {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    };
    let d = match c.decision {
        spectral::Decision::Float => "float",
        spectral::Decision::Exact => "exact",
    };
    Ok((o, d))
}

/// Decides whether `g` has an (a,b)-parity factor.
///
/// Returns a dict with `decision`, and `factor_edges` on yes or
/// `certificate` (S, T, eta, q) on no when the method produces one.
#[pyfunction]
#[pyo3(signature = (g, a, b, method = "matching"))]
fn parity_factor<'py>(py: Python<'py>, g: &PyGraph, a: usize, b: usize, method: &str) -> PyResult<Bound<'py, PyDict>> {
    let spec = FactorSpec::new(a, b).map_err(err)?;
    let method: FactorMethod = method.parse().map_err(err)?;
    let r = decide(&g.inner, spec, method).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("decision", if r.is_yes() { "yes" } else { "no" })?;
    d.set_item("factor_edges", r.factor_edges.map(|f| f.as_slice().to_vec()))?;
    let cert = match r.certificate {
        Some(c) => {
            let cd = PyDict::new(py);
            cd.set_item("S", c.s.to_vec())?;
            cd.set_item("T", c.t.to_vec())?;
            cd.set_item("eta", c.eta)?;
            cd.set_item("q", c.q)?;
            Some(cd)
        }
        None => None,
    };
    d.set_item("certificate", cert)?;
    Ok(d)
}

/// Runs the theorem scan and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (a, b, n, mode = "exhaustive", seed = 1, samples = 10_000, jobs = 0))]
fn verify_theorem(py: Python<'_>, a: usize, b: usize, n: usize, mode: &str, seed: u64, samples: usize, jobs: usize) -> PyResult<String> {
    let mode: ScanMode = mode.parse().map_err(err)?;
    let mut cfg = TheoremScan::new(a, b, n, mode);
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.jobs = jobs;
    let r = py.detach(|| verify_main_theorem(&cfg)).map_err(err)?;
    Ok(r.to_json())
}

#[pymodule]
fn pyparfact(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("CapacityError", m.py().get_type::<CapacityError>())?;
    m.add_function(wrap_pyfunction!(spectral_radius, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly, m)?)?;
    m.add_function(wrap_pyfunction!(compare_radius, m)?)?;
    m.add_function(wrap_pyfunction!(parity_factor, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    Ok(())
}
