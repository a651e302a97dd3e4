//! Python bindings for `plucker-core`.
//!
//! Scalars and points cross the boundary as strings (`"1/2 + rho"`,
//! `"1:rho:0"`); structured reports arrive as plain dicts and lists.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use plucker_core::chow;
use plucker_core::corpus;
use plucker_core::curve::{self, PlaneCurve, ProjectivePoint};
use plucker_core::heisenberg;
use plucker_core::pluecker::{self, NodeCuspSolution};
use plucker_core::polynomials::{self, parse_poly, X_VARS};
use plucker_core::scalars::Eis;
use plucker_core::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable { .. }
        | Error::LambdaSymbolic
        | Error::NotHomogeneous
        | Error::NotPlanar(_)
        | Error::ZeroPoint
        | Error::PointNotOnCurve
        | Error::NonsingularPoint
        | Error::UnsupportedDegree(_)
        | Error::InvalidArgument(_)
        | Error::ExcludedLambda(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn scalar(text: &str) -> PyResult<Eis> {
    Eis::parse(text).map_err(py_err)
}

fn point(text: &str) -> PyResult<ProjectivePoint> {
    ProjectivePoint::parse(text).map_err(py_err)
}

/// A plane projective curve given by a homogeneous polynomial.
#[pyclass(name = "Curve", module = "plucker_lab", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCurve {
    inner: PlaneCurve,
}

#[pymethods]
impl PyCurve {
    #[new]
    #[pyo3(signature = (equation, vars = None, lam = None))]
    fn new(equation: &str, vars: Option<Vec<String>>, lam: Option<&str>) -> PyResult<Self> {
        let vars = vars.unwrap_or_else(|| X_VARS.iter().map(|v| v.to_string()).collect());
        let mut p = parse_poly(equation, &vars).map_err(py_err)?;
        if let Some(l) = lam {
            p = p.specialize_lambda(&scalar(l)?);
        }
        Ok(PyCurve { inner: PlaneCurve::new(p).map_err(py_err)? })
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    #[getter]
    fn equation(&self) -> String {
        self.inner.equation().render()
    }

    fn specialize(&self, lam: &str) -> PyResult<Self> {
        Ok(PyCurve { inner: self.inner.specialize(&scalar(lam)?).map_err(py_err)? })
    }

    fn contains(&self, p: &str) -> PyResult<bool> {
        Ok(self.inner.contains(&point(p)?))
    }

    /// Singular points with Eisenstein-rational coordinates, and whether
    /// that list is complete.
    fn singular_points(&self) -> PyResult<(Vec<String>, bool)> {
        let locus = curve::singular_locus(&self.inner).map_err(py_err)?;
        Ok((locus.points.iter().map(ToString::to_string).collect(), locus.complete))
    }

    fn classify<'py>(&self, py: Python<'py>, p: &str) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &curve::classify_singularity(&self.inner, &point(p)?).map_err(py_err)?)
    }

    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &curve::analyze(&self.inner).map_err(py_err)?)
    }

    fn flexes<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &curve::flexes(&self.inner).map_err(py_err)?)
    }

    fn hessian(&self) -> PyResult<String> {
        Ok(curve::hessian(self.inner.equation()).map_err(py_err)?.render())
    }

    /// The dual curve, in the variables `u0, u1, u2`.
    fn dual(&self) -> PyResult<Self> {
        Ok(PyCurve { inner: curve::dual_curve(&self.inner).map_err(py_err)? })
    }

    fn __repr__(&self) -> String {
        format!("Curve({:?})", self.inner.equation().render())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Degree, nodes, cusps, class, flexes, bitangents and genus.
#[pyclass(name = "PlueckerInvariants", module = "plucker_lab", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPluecker {
    inner: pluecker::PlueckerInvariants,
}

#[pymethods]
impl PyPluecker {
    #[new]
    fn new(d: i64, nu: i64, kappa: i64) -> PyResult<Self> {
        Ok(PyPluecker { inner: pluecker::dual_invariants(d, nu, kappa).map_err(py_err)? })
    }

    #[getter]
    fn d(&self) -> i64 {
        self.inner.d
    }
    #[getter]
    fn nu(&self) -> i64 {
        self.inner.nu
    }
    #[getter]
    fn kappa(&self) -> i64 {
        self.inner.kappa
    }
    #[getter]
    fn m(&self) -> i64 {
        self.inner.m
    }
    #[getter]
    fn f(&self) -> i64 {
        self.inner.f
    }
    #[getter]
    fn b(&self) -> i64 {
        self.inner.b
    }
    #[getter]
    fn g(&self) -> i64 {
        self.inner.g
    }

    fn dual(&self) -> Self {
        PyPluecker { inner: self.inner.dual() }
    }

    fn is_consistent(&self) -> bool {
        self.inner.is_consistent()
    }

    fn as_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.inner)
    }

    fn __repr__(&self) -> String {
        let v = &self.inner;
        format!(
            "PlueckerInvariants(d={}, nu={}, kappa={}, m={}, f={}, b={}, g={})",
            v.d, v.nu, v.kappa, v.m, v.f, v.b, v.g
        )
    }
}

#[pyfunction]
fn dual_invariants(d: i64, nu: i64, kappa: i64) -> PyResult<PyPluecker> {
    PyPluecker::new(d, nu, kappa)
}

/// `{"status": "feasible" | "infeasible", "nu": .., "kappa": .., ...}`.
#[pyfunction]
fn solve_nodes_cusps<'py>(py: Python<'py>, d: i64, g: i64, m: i64) -> PyResult<Bound<'py, PyAny>> {
    let s: NodeCuspSolution = pluecker::solve_nodes_cusps(d, g, m).map_err(py_err)?;
    to_py(py, &s)
}

#[pyfunction]
#[pyo3(signature = (p, q, var, vars = None))]
fn resultant(p: &str, q: &str, var: &str, vars: Option<Vec<String>>) -> PyResult<String> {
    let vars = vars.unwrap_or_else(|| X_VARS.iter().map(|v| v.to_string()).collect());
    let p = parse_poly(p, &vars).map_err(py_err)?;
    let q = parse_poly(q, &vars).map_err(py_err)?;
    Ok(polynomials::resultant(&p, &q, var).map_err(py_err)?.render())
}

#[pyfunction]
#[pyo3(signature = (p, var, vars = None))]
fn discriminant(p: &str, var: &str, vars: Option<Vec<String>>) -> PyResult<String> {
    let vars = vars.unwrap_or_else(|| X_VARS.iter().map(|v| v.to_string()).collect());
    let p = parse_poly(p, &vars).map_err(py_err)?;
    Ok(polynomials::discriminant(&p, var).map_err(py_err)?.render())
}

#[pyfunction]
fn enumerate_group<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &heisenberg::enumerate_group_with_words())
}

#[pyfunction]
fn orbit(p: &str) -> PyResult<Vec<String>> {
    Ok(heisenberg::orbit(&point(p)?).points.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn fixed_locus<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &heisenberg::fixed_locus())
}

/// Resolved parameters at which the curve contains an orbit of size 3.
#[pyfunction]
#[pyo3(signature = (equation, quadratic_map = false))]
fn exceptional_lambdas(equation: &str, quadratic_map: bool) -> PyResult<Vec<String>> {
    let vars = if quadratic_map { polynomials::Y_VARS } else { X_VARS };
    let p = parse_poly(equation, &vars).map_err(py_err)?;
    let obs = heisenberg::curve_orbit_obstruction(&p, quadratic_map).map_err(py_err)?;
    Ok(heisenberg::exceptional_lambdas(&obs).iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn incidence_genus(d: u64) -> PyResult<(i64, i64)> {
    let g = chow::incidence_genus(d).map_err(py_err)?;
    Ok((g.pa, g.deg_omega))
}

#[pyfunction]
fn pencil_singular_count(d: u64) -> PyResult<i64> {
    chow::pencil_singular_count(d).map_err(py_err)
}

#[pyfunction]
fn multiplicity_bound(n: u64) -> PyResult<u64> {
    chow::multiplicity_bound(n).map_err(py_err)
}

#[pyfunction]
fn numerology<'py>(py: Python<'py>, d: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &chow::numerology(d).map_err(py_err)?)
}

#[pyfunction]
fn run_special_case<'py>(py: Python<'py>, lam: &str) -> PyResult<Bound<'py, PyAny>> {
    let r = corpus::run_special_case(&scalar(lam)?).map_err(py_err)?;
    to_py(py, &r)
}

#[pyfunction]
fn run_main_theorem<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &corpus::run_main_theorem().map_err(py_err)?)
}

#[pyfunction]
fn corpus_curve(name: &str) -> PyResult<PyCurve> {
    Ok(PyCurve { inner: corpus::corpus_curve(name).map_err(py_err)? })
}

#[pymodule]
pub fn plucker_lab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCurve>()?;
    m.add_class::<PyPluecker>()?;
    m.add_function(wrap_pyfunction!(dual_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(solve_nodes_cusps, m)?)?;
    m.add_function(wrap_pyfunction!(resultant, m)?)?;
    m.add_function(wrap_pyfunction!(discriminant, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_group, m)?)?;
    m.add_function(wrap_pyfunction!(orbit, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_locus, m)?)?;
    m.add_function(wrap_pyfunction!(exceptional_lambdas, m)?)?;
    m.add_function(wrap_pyfunction!(incidence_genus, m)?)?;
    m.add_function(wrap_pyfunction!(pencil_singular_count, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity_bound, m)?)?;
    m.add_function(wrap_pyfunction!(numerology, m)?)?;
    m.add_function(wrap_pyfunction!(run_special_case, m)?)?;
    m.add_function(wrap_pyfunction!(run_main_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_curve, m)?)?;
    Ok(())
}
