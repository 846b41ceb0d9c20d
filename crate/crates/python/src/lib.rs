//! Python module `voacorr`.
//!
//! Rational results come back as `fractions.Fraction`; rational inputs may
//! be ints, `Fraction`s or strings such as `"3/4"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

use voacorr_core::cli::{parse_insertions, parse_label, split_insertions};
use voacorr_core::corr::{
    corr_check, corr_closed_form, corr_diagram_sum, corr_direct, corr_recursion, enum_derangements,
    enum_diagrams, CheckOptions,
};
use voacorr_core::exact::{parse_rational, CorrFn, Format, RDegree, Rational};
use voacorr_core::jordan::trace_cycle;
use voacorr_core::lca::Lca;
use voacorr_core::superlinear::{make_type_space, JType};

fn err(e: voacorr_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn jtype(s: &str) -> PyResult<JType> {
    s.parse().map_err(err)
}

fn to_fraction(py: Python<'_>, q: &Rational) -> PyResult<Py<PyAny>> {
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    Ok(fraction.call1((q.to_string(),))?.unbind())
}

fn from_py(x: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&x.str()?.to_cow()?).map_err(err)
}

fn labels(insertions: &Bound<'_, PyAny>) -> PyResult<Vec<String>> {
    if let Ok(s) = insertions.extract::<String>() {
        return Ok(split_insertions(&s));
    }
    insertions.extract::<Vec<String>>()
}

/// A list of quadratic generators `L(a,b)` at the points `z1, ..., zn`.
#[pyclass(name = "InsertionList", module = "voacorr", frozen)]
struct PyInsertionList {
    inner: voacorr_core::corr::InsertionList,
    labels: Vec<String>,
}

#[pymethods]
impl PyInsertionList {
    /// `insertions` is either a list of labels or one string separated by `;`.
    #[new]
    fn new(jtype_name: &str, rank: usize, insertions: &Bound<'_, PyAny>) -> PyResult<Self> {
        let labels = labels(insertions)?;
        let inner = parse_insertions(jtype(jtype_name)?, rank, &labels).map_err(err)?;
        Ok(Self { inner, labels })
    }

    #[getter]
    fn jtype(&self) -> String {
        self.inner.jtype().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("InsertionList({}, {}, {:?})", self.inner.jtype(), self.inner.rank(), self.labels)
    }

    fn recursion(&self) -> PyResult<PyCorrFn> {
        corr_recursion(&self.inner).map(PyCorrFn::from).map_err(err)
    }

    fn diagrams(&self) -> PyResult<PyCorrFn> {
        corr_diagram_sum(&self.inner).map(PyCorrFn::from).map_err(err)
    }

    fn closed(&self) -> PyResult<PyCorrFn> {
        corr_closed_form(&self.inner).map(PyCorrFn::from).map_err(err)
    }

    /// Free-field computation at the positive integer level `r`.
    fn direct(&self, r: u32) -> PyResult<PyCorrFn> {
        corr_direct(&self.inner, r).map(PyCorrFn::from).map_err(err)
    }

    /// Runs every engine against each other and returns the report as a dict.
    #[pyo3(signature = (r_samples = vec![1, 2, 3], seed = 0))]
    fn check<'py>(&self, py: Python<'py>, r_samples: Vec<u32>, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let opts = CheckOptions {
            r_samples,
            seed,
            ..Default::default()
        };
        let report = corr_check(&self.inner, &opts).map_err(err)?;
        let text = serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
        py.import("json")?.call_method1("loads", (text,))
    }
}

/// An exact rational function of `z1, ..., zn` with coefficients in `Q[r]`.
#[pyclass(name = "CorrFn", module = "voacorr", frozen, eq)]
#[derive(PartialEq)]
struct PyCorrFn {
    inner: CorrFn,
}

impl From<CorrFn> for PyCorrFn {
    fn from(inner: CorrFn) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyCorrFn {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        CorrFn::from_json(&v).map(Self::from).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Degree in `r`, or `None` for the zero function.
    fn degree_r(&self) -> Option<u32> {
        match self.inner.degree_r() {
            RDegree::Zero => None,
            RDegree::Degree(k) => Some(k as u32),
        }
    }

    #[pyo3(signature = (format = "text"))]
    fn render(&self, format: &str) -> PyResult<String> {
        let f: Format = format.parse().map_err(err)?;
        Ok(self.inner.render(f))
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn specialize(&self, r: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(self.inner.specialize(&from_py(r)?).into())
    }

    fn eval(&self, py: Python<'_>, z: Vec<Bound<'_, PyAny>>, r: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
        let z = z.iter().map(from_py).collect::<PyResult<Vec<_>>>()?;
        let v = self.inner.eval(&z, &from_py(r)?).map_err(err)?;
        to_fraction(py, &v)
    }

    /// Equality as rational functions, after clearing denominators.
    fn equals(&self, other: &PyCorrFn) -> PyResult<bool> {
        self.inner.eq_rational(&other.inner).map_err(err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CorrFn({})", self.inner)
    }
}

/// One-shot correlation function with the chosen engine.
#[pyfunction]
#[pyo3(signature = (jtype_name, rank, insertions, method = "closed", level = None))]
fn corr(
    jtype_name: &str,
    rank: usize,
    insertions: &Bound<'_, PyAny>,
    method: &str,
    level: Option<u32>,
) -> PyResult<PyCorrFn> {
    let t = PyInsertionList::new(jtype_name, rank, insertions)?;
    let f = match (method, level) {
        ("direct", Some(r)) => return t.direct(r),
        ("direct", None) => return Err(PyValueError::new_err("the direct method needs an integer level")),
        ("recursion", _) => t.recursion()?,
        ("diagrams", _) => t.diagrams()?,
        ("closed", _) => t.closed()?,
        (other, _) => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    };
    Ok(match level {
        Some(r) => f.inner.specialize(&Rational::from_integer(r.into())).into(),
        None => f,
    })
}

/// The central term of `[x_lambda y]` for labels `L(a,b;m,n)`.
#[pyfunction]
fn cocycle(py: Python<'_>, jtype_name: &str, rank: usize, x: &str, y: &str) -> PyResult<Py<PyAny>> {
    let lca = Lca::new(jtype(jtype_name)?, rank).map_err(err)?;
    let quad = |s: &str| {
        let (a, b, m, n) = parse_label(lca.space(), s)?;
        lca.quadratic(&a, &b, m, n)
    };
    let x = quad(x).map_err(err)?;
    let y = quad(y).map_err(err)?;
    to_fraction(py, &lca.cocycle(&x, &y).map_err(err)?)
}

/// Trace of the cyclic product of the endomorphisms attached to the labels.
#[pyfunction]
fn jordan_trace(py: Python<'_>, jtype_name: &str, rank: usize, insertions: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    let space = make_type_space(jtype(jtype_name)?, rank).map_err(err)?;
    let pairs = labels(insertions)?
        .iter()
        .map(|s| match parse_label(&space, s)? {
            (a, b, 1, 1) => Ok((a, b)),
            _ => Err(voacorr_core::Error::NonGenerator),
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    to_fraction(py, &trace_cycle(&space, &pairs).map_err(err)?)
}

#[pyfunction]
fn diagram_count(jtype_name: &str, n: usize) -> PyResult<usize> {
    Ok(enum_diagrams(n, jtype(jtype_name)?).len())
}

#[pyfunction]
fn derangement_count(n: usize) -> usize {
    enum_derangements(n).len()
}

#[pymodule]
fn voacorr(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInsertionList>()?;
    m.add_class::<PyCorrFn>()?;
    m.add_function(wrap_pyfunction!(corr, m)?)?;
    m.add_function(wrap_pyfunction!(cocycle, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_trace, m)?)?;
    m.add_function(wrap_pyfunction!(diagram_count, m)?)?;
    m.add_function(wrap_pyfunction!(derangement_count, m)?)?;
    Ok(())
}
