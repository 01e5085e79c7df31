//! Python bindings: braids, polynomials, evaluators and the verification runner.

use homfly_core::families::classify_specializations;
use homfly_core::verify::{run_manifest, Manifest};
use homfly_core::{
    build_genfun, is_simple, AnyEvaluator, BraidWord, Error, EvalOptions, InvariantValue,
    LaurentPoly, SimpleVerdict, Specialization, Template, TwoVarLaurent,
};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(homfly, IndeterminateError, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Indeterminate(_) => IndeterminateError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

#[pyclass(name = "Braid", frozen)]
struct PyBraid {
    inner: BraidWord,
}

#[pymethods]
impl PyBraid {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: text.parse().map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_letters(strands: usize, letters: Vec<i32>) -> PyResult<Self> {
        Ok(Self {
            inner: BraidWord::new(strands, letters).map_err(to_py)?,
        })
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i32> {
        self.inner.letters().to_vec()
    }

    fn writhe(&self) -> i64 {
        self.inner.writhe()
    }

    fn components(&self) -> usize {
        self.inner.closure_components()
    }

    fn mirror(&self) -> Self {
        Self {
            inner: self.inner.mirror(),
        }
    }

    fn reverse(&self) -> Self {
        Self {
            inner: self.inner.reverse(),
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Braid('{}')", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Laurent polynomial in `s`.
#[pyclass(name = "Poly", frozen)]
struct PyPoly {
    inner: LaurentPoly,
}

#[pymethods]
impl PyPoly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: LaurentPoly::parse(text).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Self { inner })
    }

    fn degree(&self) -> Option<i32> {
        self.inner.degree()
    }

    fn order(&self) -> Option<i32> {
        self.inner.order()
    }

    /// `(exponent, coefficient)` pairs in ascending order, coefficients as text.
    fn terms(&self) -> Vec<(i32, String)> {
        self.inner
            .terms()
            .map(|(e, c)| (e, c.to_string()))
            .collect()
    }

    fn bar(&self) -> Self {
        Self {
            inner: self.inner.bar(),
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    fn __add__(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner - &other.inner,
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner * &other.inner,
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }
}

/// Laurent polynomial in `l` and `m`.
#[pyclass(name = "Homfly", frozen)]
struct PyHomfly {
    inner: TwoVarLaurent,
}

#[pymethods]
impl PyHomfly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: TwoVarLaurent::parse(text).map_err(to_py)?,
        })
    }

    /// `((l_exp, m_exp), coefficient)` pairs, coefficients as text.
    fn terms(&self) -> Vec<((i32, i32), String)> {
        self.inner
            .terms()
            .map(|(e, c)| (e, c.to_string()))
            .collect()
    }

    fn specialize(&self, spec: &str) -> PyResult<PyPoly> {
        let spec: Specialization = spec.parse().map_err(to_py)?;
        Ok(PyPoly {
            inner: spec.specialize(&self.inner).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Homfly('{}')", self.inner)
    }
}

fn wrap(py: Python<'_>, v: InvariantValue) -> PyResult<Py<PyAny>> {
    Ok(match v {
        InvariantValue::Homfly(inner) => Py::new(py, PyHomfly { inner })?.into_any(),
        InvariantValue::Poly(inner) => Py::new(py, PyPoly { inner })?.into_any(),
    })
}

fn word_arg(word: &Bound<'_, PyAny>) -> PyResult<BraidWord> {
    if let Ok(b) = word.cast::<PyBraid>() {
        return Ok(b.get().inner.clone());
    }
    let text: String = word.extract()?;
    text.parse().map_err(to_py)
}

/// Memoizing evaluator for one specialization.
#[pyclass(name = "Evaluator")]
struct PyEvaluator {
    inner: AnyEvaluator,
    spec: Specialization,
}

#[pymethods]
impl PyEvaluator {
    #[new]
    #[pyo3(signature = (spec = "homfly", oracle = true, budget = None))]
    fn new(spec: &str, oracle: bool, budget: Option<usize>) -> PyResult<Self> {
        let spec: Specialization = spec.parse().map_err(to_py)?;
        let mut opts = EvalOptions::from_env();
        opts.oracle_fallback = oracle;
        if let Some(b) = budget {
            opts.budget = b;
        }
        Ok(Self {
            inner: AnyEvaluator::new(&spec, opts).map_err(to_py)?,
            spec,
        })
    }

    #[getter]
    fn spec(&self) -> String {
        self.spec.to_string()
    }

    fn eval(&mut self, py: Python<'_>, word: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        let w = word_arg(word)?;
        let v = self.inner.eval(&w).map_err(to_py)?;
        wrap(py, v)
    }
}

/// Invariant of the closure of `word` under `spec`.
#[pyfunction]
#[pyo3(name = "eval", signature = (word, spec = "homfly"))]
fn eval_word(py: Python<'_>, word: &Bound<'_, PyAny>, spec: &str) -> PyResult<Py<PyAny>> {
    let w = word_arg(word)?;
    let spec: Specialization = spec.parse().map_err(to_py)?;
    let v = homfly_core::eval_invariant(&w, &spec, &EvalOptions::from_env()).map_err(to_py)?;
    wrap(py, v)
}

/// The partition of a simple positive braid, or `None` if it is not simple.
#[pyfunction]
#[pyo3(name = "is_simple", signature = (word, budget = 100_000))]
fn simple(word: &Bound<'_, PyAny>, budget: usize) -> PyResult<Option<Vec<usize>>> {
    match is_simple(&word_arg(word)?, budget).map_err(to_py)? {
        SimpleVerdict::Simple(a) => Ok(Some(a.parts().to_vec())),
        SimpleVerdict::NotSimple { .. } => Ok(None),
        SimpleVerdict::Indeterminate { explored } => Err(IndeterminateError::new_err(format!(
            "indeterminate after {explored} words"
        ))),
    }
}

/// `(n, k, q)` of each rational specialization with exponents in range.
#[pyfunction]
#[pyo3(signature = (range = 9))]
fn classify(range: i32) -> Vec<(i32, i32, i32)> {
    classify_specializations(range)
        .iter()
        .map(|c| (c.n, c.k, c.q))
        .collect()
}

/// Numerator and denominator of the generating function of a template word.
#[pyfunction]
#[pyo3(signature = (template, spec = "degenerate"))]
fn genfun(template: &Bound<'_, PyAny>, spec: &str) -> PyResult<(String, String)> {
    let t = Template::from_word(&word_arg(template)?);
    let spec: Specialization = spec.parse().map_err(to_py)?;
    let mut ev = homfly_core::Evaluator::for_spec(&spec, EvalOptions::from_env()).map_err(to_py)?;
    let g = build_genfun(&t, &spec, &mut ev).map_err(to_py)?;
    Ok((g.render_numerator(), g.render_denominator()))
}

/// Runs a manifest given as JSON text and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (manifest, seed = None))]
fn verify(manifest: &str, seed: Option<u64>) -> PyResult<String> {
    let m = Manifest::from_json(manifest).map_err(to_py)?;
    let report = run_manifest(&m, seed, &EvalOptions::from_env());
    Ok(serde_json::to_string(&report).expect("serializable"))
}

#[pymodule]
fn homfly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyHomfly>()?;
    m.add_class::<PyEvaluator>()?;
    m.add_function(wrap_pyfunction!(eval_word, m)?)?;
    m.add_function(wrap_pyfunction!(simple, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(genfun, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add(
        "IndeterminateError",
        m.py().get_type::<IndeterminateError>(),
    )?;
    Ok(())
}
