//! Python bindings. Polynomials cross the boundary as `Laurent` objects or their text form,
//! braid words as `Braid` objects or token strings, rationals as strings.

use braidinv::braid::{closure_components, BraidWord};
use braidinv::rmatrix::{builtin_jones, check_enhancement, check_qybe, normalized_trace_invariant, parse_rmatrix_file};
use braidinv::skein::{evaluate, SkeinSystem};
use braidinv::vassiliev::{expand_invariant, weight_space_dimension, DEFAULT_ORDER};
use braidinv::HalfLaurent;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn system(name: &str) -> PyResult<SkeinSystem> {
    SkeinSystem::from_name(name).ok_or_else(|| value_error(format!("unknown system `{name}`")))
}

#[pyclass(name = "Braid", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyBraid(BraidWord);

#[pymethods]
impl PyBraid {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    #[getter]
    fn strands(&self) -> usize {
        self.0.strands()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Braid('{}')", self.0)
    }

    fn components(&self) -> usize {
        closure_components(&self.0)
    }

    fn exponent_sum(&self) -> i64 {
        self.0.exponent_sum()
    }

    fn mirror(&self) -> Self {
        Self(self.0.mirror())
    }

    fn free_reduce(&self) -> Self {
        Self(self.0.free_reduce())
    }
}

#[pyclass(name = "Laurent", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyLaurent(HalfLaurent);

#[pymethods]
impl PyLaurent {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Laurent('{}')", self.0)
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    /// Value at q = 1, as an exact rational string.
    fn eval_one(&self) -> String {
        self.0.eval_one().to_string()
    }

    /// Mirror substitution q -> 1/q.
    fn involute(&self) -> Self {
        Self(self.0.involute())
    }
}

fn braid_arg(b: &Bound<'_, PyAny>) -> PyResult<BraidWord> {
    if let Ok(p) = b.cast::<PyBraid>() {
        return Ok(p.get().0.clone());
    }
    let text: String = b.extract()?;
    text.parse().map_err(value_error)
}

/// `sys` is `jones`, `alexander` or `homfly:<n>`; `engine` is `skein` or `rmatrix` (Jones only).
#[pyfunction]
#[pyo3(signature = (braid, sys = "jones", engine = "skein"))]
fn invariant(braid: &Bound<'_, PyAny>, sys: &str, engine: &str) -> PyResult<PyLaurent> {
    let w = braid_arg(braid)?;
    let s = system(sys)?;
    let value = match engine {
        "skein" => evaluate(&w, &s).map_err(value_error)?,
        "rmatrix" if s == SkeinSystem::jones() => {
            normalized_trace_invariant(&w, &builtin_jones().map_err(value_error)?).map_err(value_error)?
        }
        _ => return Err(value_error(format!("engine `{engine}` cannot compute `{sys}`"))),
    };
    Ok(PyLaurent(value))
}

/// u_0..u_order of the Jones trace invariant at q = e^x, as rational strings.
#[pyfunction]
#[pyo3(signature = (braid, order = DEFAULT_ORDER))]
fn expand(braid: &Bound<'_, PyAny>, order: usize) -> PyResult<Vec<String>> {
    let w = braid_arg(braid)?;
    let s = expand_invariant(&w, &builtin_jones().map_err(value_error)?, order).map_err(value_error)?;
    Ok(s.coeffs().iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn v2(braid: &Bound<'_, PyAny>) -> PyResult<i64> {
    braidinv::vassiliev::v2(&braid_arg(braid)?).map_err(value_error)
}

#[pyfunction]
fn dims(order: usize) -> PyResult<usize> {
    weight_space_dimension(order).map_err(value_error)
}

/// `(qybe_holds, enhancement_holds)` for R-matrix file text.
#[pyfunction]
fn check_rmatrix(text: &str) -> PyResult<(bool, bool)> {
    let e = parse_rmatrix_file(text).map_err(value_error)?;
    let qybe = check_qybe(e.r()).map_err(value_error)?;
    Ok((qybe.holds, check_enhancement(&e).is_ok()))
}

/// Runs the command-line interface in-process: `(exit code, stdout, stderr)`.
#[pyfunction]
fn cli(args: Vec<String>) -> (i32, String, String) {
    let out = braidinv::cli::run(std::iter::once("braidinv".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
#[pyo3(name = "braidinv")]
fn braidinv_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add_class::<PyLaurent>()?;
    m.add_function(wrap_pyfunction!(invariant, m)?)?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(v2, m)?)?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    m.add_function(wrap_pyfunction!(check_rmatrix, m)?)?;
    m.add_function(wrap_pyfunction!(cli, m)?)?;
    Ok(())
}
