//! Python bindings. Counts come back as Python `int`, rationals as
//! `fractions.Fraction`.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use latcount_core as core;
use latcount_core::{BigInt, Engine, Error, Rational, WalkSpec};

create_exception!(latcount, BruteLimitExceeded, PyException);

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::LimitExceeded { .. } => BruteLimitExceeded::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, value: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let fractions = py.import("fractions")?;
    fractions
        .getattr("Fraction")?
        .call1((value.numer().clone(), value.denom().clone()))
}

fn walk(d: usize, n: u64) -> PyResult<WalkSpec> {
    WalkSpec::new(d, n).map_err(to_py_err)
}

/// Engine dispatcher holding the brute-force guard and a coefficient cache.
#[pyclass(name = "Counter", module = "latcount")]
struct PyCounter {
    inner: core::Counter,
}

#[pymethods]
impl PyCounter {
    #[new]
    #[pyo3(signature = (brute_max_d = 4, brute_max_n = 12))]
    fn new(brute_max_d: usize, brute_max_n: u64) -> Self {
        PyCounter {
            inner: core::Counter::new(core::BruteLimit {
                max_d: brute_max_d,
                max_n: brute_max_n,
            }),
        }
    }

    #[pyo3(signature = (d, n, engine = "closed"))]
    fn count(&self, d: usize, n: u64, engine: &str) -> PyResult<BigInt> {
        let engine: Engine = engine.parse().map_err(to_py_err)?;
        self.inner.count(engine, walk(d, n)?).map_err(to_py_err)
    }

    /// Every engine's count, skipping brute force outside its guard.
    fn count_all<'py>(&self, py: Python<'py>, d: usize, n: u64) -> PyResult<Bound<'py, PyDict>> {
        let spec = walk(d, n)?;
        let out = PyDict::new(py);
        for engine in Engine::ALL {
            if engine == Engine::Brute && !self.inner.brute_limit.allows(spec) {
                continue;
            }
            out.set_item(
                engine.name(),
                self.inner.count(engine, spec).map_err(to_py_err)?,
            )?;
        }
        Ok(out)
    }

    fn coeff_vector(&self, d: usize) -> PyResult<CoeffVector> {
        Ok(CoeffVector {
            inner: self.inner.coeffs.get(d).map_err(to_py_err)?,
        })
    }
}

/// Coefficients c(d,d), ..., c(d,0) of the count polynomial.
#[pyclass(module = "latcount")]
struct CoeffVector {
    inner: core::CoeffVector,
}

#[pymethods]
impl CoeffVector {
    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    #[getter]
    fn entries<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.inner
            .entries()
            .iter()
            .map(|c| fraction(py, c))
            .collect()
    }

    fn evaluate(&self, n: u64) -> PyResult<BigInt> {
        core::count_polynomial(walk(self.inner.d(), n)?, &self.inner).map_err(to_py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.entries().len()
    }

    fn __repr__(&self) -> String {
        let entries: Vec<String> = self
            .inner
            .entries()
            .iter()
            .map(core::format_rational)
            .collect();
        format!(
            "CoeffVector(d={}, [{}])",
            self.inner.d(),
            entries.join(", ")
        )
    }
}

#[pyfunction]
#[pyo3(signature = (d, n, engine = "closed"))]
fn count(d: usize, n: u64, engine: &str) -> PyResult<BigInt> {
    PyCounter::new(4, 12).count(d, n, engine)
}

#[pyfunction]
fn series_counts(d: usize, n_max: u64) -> PyResult<Vec<BigInt>> {
    Ok(core::series_counts(d, n_max).map_err(to_py_err)?.counts)
}

#[pyfunction]
fn coeff_vector(d: usize) -> PyResult<CoeffVector> {
    Ok(CoeffVector {
        inner: core::coeff_vector(d).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn transfer_matrix(py: Python<'_>, d: usize) -> PyResult<Vec<Vec<Bound<'_, PyAny>>>> {
    let m = core::transfer_matrix(d).map_err(to_py_err)?;
    m.rows()
        .iter()
        .map(|row| row.iter().map(|x| fraction(py, x)).collect())
        .collect()
}

#[pyfunction]
fn coeff_closed_form(py: Python<'_>, d: usize, j: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &core::coeff_closed_form(d, j).map_err(to_py_err)?)
}

#[pyfunction]
fn coeff_via_symmetric_sums(py: Python<'_>, d: usize, j: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(
        py,
        &core::coeff_via_symmetric_sums(d, j).map_err(to_py_err)?,
    )
}

#[pyfunction]
fn bernoulli(py: Python<'_>, k: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &core::bernoulli(k))
}

#[pyfunction]
fn power_sum(n: u64, d: usize) -> BigInt {
    core::power_sum(n, d)
}

#[pyfunction]
fn binomial(n: u64, k: i64) -> BigInt {
    core::binomial(n, k)
}

#[pyfunction]
fn elementary_symmetric(values: Vec<BigInt>, j: usize) -> PyResult<BigInt> {
    core::elementary_symmetric(&values, j).map_err(to_py_err)
}

/// The verification report as a JSON string.
#[pyfunction]
#[pyo3(signature = (d_max = 4, n_max = 10))]
fn verify_json(d_max: usize, n_max: u64) -> PyResult<String> {
    let report = core::verify(d_max, n_max, &core::Counter::default()).map_err(to_py_err)?;
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn latcount(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add(
        "BruteLimitExceeded",
        m.py().get_type::<BruteLimitExceeded>(),
    )?;
    m.add_class::<PyCounter>()?;
    m.add_class::<CoeffVector>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(series_counts, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_vector, m)?)?;
    m.add_function(wrap_pyfunction!(transfer_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_via_symmetric_sums, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(elementary_symmetric, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    Ok(())
}
