//! Python bindings for `sawstrip`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sawstrip::algebra::{self, BigRat};
use sawstrip::json::{parse_rat, rat_string, rat_to_f64};
use sawstrip::lattice::{self, StepWord, StripSpec};
use sawstrip::{enumerate, guess, pipeline, width2, Error};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::ZeroDivisor | Error::ZeroDenominator => PyZeroDivisionError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn strip(xlo: i64, xhi: i64) -> PyResult<StripSpec> {
    StripSpec::new(xlo, xhi).map_err(py_err)
}

fn word(s: &str) -> PyResult<StepWord> {
    s.parse().map_err(py_err)
}

fn poly(coeffs: Vec<BigInt>) -> algebra::Poly {
    algebra::Poly::from_bigints(&coeffs)
}

/// A rational generating function in canonical form.
#[pyclass(name = "RatFun", module = "pysawstrip", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRatFun(algebra::RatFun);

#[pymethods]
impl PyRatFun {
    /// Coefficient lists, constant term first.
    #[new]
    fn new(num: Vec<BigInt>, den: Vec<BigInt>) -> PyResult<Self> {
        algebra::RatFun::normalize(poly(num), poly(den)).map(PyRatFun).map_err(py_err)
    }

    #[getter]
    fn num(&self) -> Vec<BigInt> {
        self.0.integer_parts().0
    }

    #[getter]
    fn den(&self) -> Vec<BigInt> {
        self.0.integer_parts().1
    }

    /// Coefficients of `t^0 .. t^n`.
    fn series(&self, n: usize) -> PyResult<Vec<BigInt>> {
        let s = self.0.series(n).map_err(py_err)?;
        s.to_integers()
            .ok_or_else(|| PyValueError::new_err("series has non-integer coefficients"))
    }

    fn __add__(&self, other: &Self) -> Self {
        PyRatFun(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyRatFun(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyRatFun(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_div(&other.0).map(PyRatFun).map_err(py_err)
    }

    fn __neg__(&self) -> Self {
        PyRatFun(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let ints = |v: Vec<BigInt>| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        format!("RatFun([{}], [{}])", ints(self.num()), ints(self.den()))
    }
}

#[pyfunction]
#[pyo3(signature = (xlo, xhi, n_max, workers=None))]
fn count_saws(py: Python<'_>, xlo: i64, xhi: i64, n_max: usize, workers: Option<usize>) -> PyResult<Vec<BigInt>> {
    let s = strip(xlo, xhi)?;
    let mut cfg = enumerate::EnumConfig::default();
    if let Some(w) = workers {
        cfg.workers = w.max(1);
    }
    py.detach(|| enumerate::count_saws_with(&s, n_max, &cfg)).map_err(py_err)
}

/// The `n`-step walks as step words in string order.
#[pyfunction]
fn list_saws(py: Python<'_>, xlo: i64, xhi: i64, n: usize) -> PyResult<Vec<String>> {
    let s = strip(xlo, xhi)?;
    let cap = enumerate::walk_cap_from_env();
    let words = py.detach(|| enumerate::list_saws_capped(&s, n, cap)).map_err(py_err)?;
    Ok(words.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn is_valid_saw(w: &str, xlo: i64, xhi: i64) -> PyResult<bool> {
    Ok(lattice::is_valid_saw(&word(w)?, &strip(xlo, xhi)?))
}

#[pyfunction]
fn realize(w: &str) -> PyResult<Vec<(i64, i64)>> {
    Ok(lattice::realize(&word(w)?).points().collect())
}

#[pyfunction]
fn mirror_x(w: &str) -> PyResult<String> {
    Ok(lattice::mirror_x(&word(w)?).to_string())
}

#[pyfunction]
fn fibonacci(n: u64) -> BigInt {
    algebra::fibonacci(n)
}

#[pyfunction]
fn closed_form_a(n: u64) -> BigInt {
    width2::closed_form_a(n)
}

#[pyfunction]
fn generate_northbound(n: usize) -> Vec<String> {
    width2::generate_northbound(n).iter().map(ToString::to_string).collect()
}

/// `{"u": .., "l": [..], "i": .., "uprime": ..}`, or `None`.
#[pyfunction]
fn parse_northbound<'py>(py: Python<'py>, w: &str) -> PyResult<Option<Bound<'py, PyDict>>> {
    let Some(d) = width2::parse_northbound(&word(w)?) else {
        return Ok(None);
    };
    let out = PyDict::new(py);
    out.set_item("u", d.u_turn)?;
    out.set_item("l", d.l_parts)?;
    out.set_item("i", d.i_len)?;
    out.set_item("uprime", d.u_prime)?;
    Ok(Some(out))
}

#[pyfunction]
fn full_gf() -> PyRatFun {
    PyRatFun(width2::full_gf())
}

#[pyfunction]
fn northbound_gf() -> PyRatFun {
    PyRatFun(width2::northbound_gf())
}

#[pyfunction]
fn gf_via_weighted_automaton() -> PyResult<PyRatFun> {
    width2::gf_via_weighted_automaton().map(PyRatFun).map_err(py_err)
}

/// True when enumeration, gf and closed form agree up to `n_max`.
#[pyfunction]
fn verify_theorem(py: Python<'_>, n_max: usize) -> PyResult<bool> {
    py.detach(|| width2::verify_theorem(n_max))
        .map(|r| r.passed())
        .map_err(py_err)
}

/// Smallest-degree rational gf matching `terms`, validated on the last
/// `holdout` of them, or `None`.
#[pyfunction]
#[pyo3(signature = (terms, holdout=guess::DEFAULT_HOLDOUT, max_deg=None))]
fn guess_gf(terms: Vec<BigInt>, holdout: usize, max_deg: Option<usize>) -> PyResult<Option<PyRatFun>> {
    let g = guess::guess_auto_bounded(&terms, holdout, max_deg).map_err(py_err)?;
    Ok(g.map(|g| PyRatFun(g.gf)))
}

fn parse_tol(tol: &str) -> PyResult<BigRat> {
    parse_rat(tol).ok_or_else(|| PyValueError::new_err(format!("bad tolerance {tol:?}")))
}

fn bound_dict<'py>(py: Python<'py>, b: &pipeline::BoundReport) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("strip", (b.strip.xlo(), b.strip.xhi()))?;
    out.set_item("gf", PyRatFun(b.gf.clone()))?;
    out.set_item("rho", (rat_string(&b.rho.lo), rat_string(&b.rho.hi)))?;
    out.set_item("mu", (rat_string(&b.mu_lo), rat_string(&b.mu_hi)))?;
    out.set_item("mu_float", (rat_to_f64(&b.mu_lo), rat_to_f64(&b.mu_hi)))?;
    Ok(out)
}

/// Growth-rate enclosure from the smallest positive root of `gf`'s
/// denominator. Interval endpoints are exact rationals as strings.
#[pyfunction]
#[pyo3(signature = (xlo, xhi, gf, tol="1e-12"))]
fn connective_bound<'py>(
    py: Python<'py>,
    xlo: i64,
    xhi: i64,
    gf: &PyRatFun,
    tol: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let b = pipeline::connective_bound(&strip(xlo, xhi)?, &gf.0, &parse_tol(tol)?).map_err(py_err)?;
    bound_dict(py, &b)
}

/// Enumerate `n_train + holdout` terms, guess, and validate; `None` when
/// no validated gf is found.
#[pyfunction]
#[pyo3(signature = (xlo, xhi, n_train, holdout=3))]
fn conjecture_strip_gf<'py>(
    py: Python<'py>,
    xlo: i64,
    xhi: i64,
    n_train: usize,
    holdout: usize,
) -> PyResult<Option<Bound<'py, PyDict>>> {
    let s = strip(xlo, xhi)?;
    let cfg = pipeline::PipelineConfig {
        walk_cap: enumerate::walk_cap_from_env(),
        ..pipeline::PipelineConfig::default()
    };
    let conj = py
        .detach(|| pipeline::conjecture_strip_gf(&s, n_train, holdout, &cfg))
        .map_err(py_err)?;
    let Some(c) = conj else { return Ok(None) };
    let out = PyDict::new(py);
    out.set_item("strip", (xlo, xhi))?;
    out.set_item("anchor", pipeline::ANCHOR)?;
    out.set_item("counts", c.counts)?;
    out.set_item("gf", PyRatFun(c.guess.gf))?;
    out.set_item("fresh_terms", c.fresh_terms)?;
    Ok(Some(out))
}

#[pymodule]
fn pysawstrip(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRatFun>()?;
    m.add_function(wrap_pyfunction!(count_saws, m)?)?;
    m.add_function(wrap_pyfunction!(list_saws, m)?)?;
    m.add_function(wrap_pyfunction!(is_valid_saw, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(mirror_x, m)?)?;
    m.add_function(wrap_pyfunction!(fibonacci, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_a, m)?)?;
    m.add_function(wrap_pyfunction!(generate_northbound, m)?)?;
    m.add_function(wrap_pyfunction!(parse_northbound, m)?)?;
    m.add_function(wrap_pyfunction!(full_gf, m)?)?;
    m.add_function(wrap_pyfunction!(northbound_gf, m)?)?;
    m.add_function(wrap_pyfunction!(gf_via_weighted_automaton, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(guess_gf, m)?)?;
    m.add_function(wrap_pyfunction!(connective_bound, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_strip_gf, m)?)?;
    Ok(())
}
