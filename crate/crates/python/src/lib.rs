//! Python bindings. Build with `maturin develop` from this directory; the
//! module is importable as `opinion_algebra`.

use opinion_algebra as core;
use pyo3::create_exception;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

create_exception!(opinion_algebra, NotDecomposableError, PyValueError);

fn to_py(err: core::Error) -> PyErr {
    match err {
        core::Error::NotDecomposable(_) => NotDecomposableError::new_err(err.to_string()),
        core::Error::DogmaticOpinion => PyZeroDivisionError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn frame(labels: Option<Vec<String>>, k: usize) -> PyResult<core::Frame> {
    match labels {
        Some(l) => core::Frame::new(l),
        None if k == 2 => Ok(core::Frame::binary()),
        None => core::Frame::indexed(k),
    }
    .map_err(to_py)
}

fn uniform(k: usize) -> Vec<f64> {
    vec![1.0 / k as f64; k]
}

/// A multinomial opinion `(belief, uncertainty, base_rate)`.
#[pyclass(name = "Opinion", module = "opinion_algebra", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyOpinion(core::Opinion);

#[pymethods]
impl PyOpinion {
    #[new]
    #[pyo3(signature = (belief, uncertainty, base_rate=None, labels=None, owner=None))]
    fn new(
        belief: Vec<f64>,
        uncertainty: f64,
        base_rate: Option<Vec<f64>>,
        labels: Option<Vec<String>>,
        owner: Option<String>,
    ) -> PyResult<Self> {
        let k = belief.len();
        let base_rate = base_rate.unwrap_or_else(|| uniform(k));
        let op = core::Opinion::new(frame(labels, k)?, belief, uncertainty, base_rate).map_err(to_py)?;
        Ok(Self(match owner {
            Some(o) => op.with_owner(o),
            None => op,
        }))
    }

    #[staticmethod]
    #[pyo3(signature = (belief, disbelief, uncertainty, base_rate=0.5))]
    fn binomial(belief: f64, disbelief: f64, uncertainty: f64, base_rate: f64) -> PyResult<Self> {
        core::Opinion::binomial(belief, disbelief, uncertainty, base_rate).map(Self).map_err(to_py)
    }

    #[staticmethod]
    #[pyo3(signature = (base_rate, labels=None))]
    fn vacuous(base_rate: Vec<f64>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let f = frame(labels, base_rate.len())?;
        core::Opinion::vacuous(f, base_rate).map(Self).map_err(to_py)
    }

    #[getter]
    fn belief(&self) -> Vec<f64> {
        self.0.belief().to_vec()
    }

    #[getter]
    fn uncertainty(&self) -> f64 {
        self.0.uncertainty()
    }

    #[getter]
    fn base_rate(&self) -> Vec<f64> {
        self.0.base_rate().to_vec()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.frame().labels().to_vec()
    }

    #[getter]
    fn owner(&self) -> Option<String> {
        self.0.owner().map(str::to_owned)
    }

    #[getter]
    fn disbelief(&self) -> Option<f64> {
        self.0.disbelief()
    }

    fn expectation(&self) -> Vec<f64> {
        self.0.expectation()
    }

    fn is_dogmatic(&self) -> bool {
        self.0.is_dogmatic()
    }

    fn is_vacuous(&self) -> bool {
        self.0.is_vacuous()
    }

    fn with_owner(&self, owner: String) -> Self {
        Self(self.0.clone().with_owner(owner))
    }

    #[pyo3(signature = (prior_weight=core::DEFAULT_PRIOR_WEIGHT))]
    fn to_evidence(&self, prior_weight: f64) -> PyResult<PyEvidenceOpinion> {
        self.0.to_evidence(prior_weight).map(PyEvidenceOpinion).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.dimension()
    }

    fn __repr__(&self) -> String {
        format!(
            "Opinion(belief={:?}, uncertainty={:?}, base_rate={:?}, owner={:?})",
            self.0.belief(),
            self.0.uncertainty(),
            self.0.base_rate(),
            self.0.owner()
        )
    }
}

/// An opinion in Dirichlet evidence space.
#[pyclass(name = "EvidenceOpinion", module = "opinion_algebra", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyEvidenceOpinion(core::EvidenceOpinion);

#[pymethods]
impl PyEvidenceOpinion {
    #[new]
    #[pyo3(signature = (evidence, base_rate=None, prior_weight=core::DEFAULT_PRIOR_WEIGHT, labels=None))]
    fn new(
        evidence: Vec<f64>,
        base_rate: Option<Vec<f64>>,
        prior_weight: f64,
        labels: Option<Vec<String>>,
    ) -> PyResult<Self> {
        let k = evidence.len();
        let base_rate = base_rate.unwrap_or_else(|| uniform(k));
        core::EvidenceOpinion::new(frame(labels, k)?, evidence, base_rate, prior_weight)
            .map(Self)
            .map_err(to_py)
    }

    #[getter]
    fn evidence(&self) -> Vec<f64> {
        self.0.evidence().to_vec()
    }

    #[getter]
    fn base_rate(&self) -> Vec<f64> {
        self.0.base_rate().to_vec()
    }

    #[getter]
    fn prior_weight(&self) -> f64 {
        self.0.prior_weight()
    }

    fn total_evidence(&self) -> f64 {
        self.0.total_evidence()
    }

    fn to_opinion(&self) -> PyOpinion {
        PyOpinion(self.0.to_opinion())
    }

    fn __repr__(&self) -> String {
        format!(
            "EvidenceOpinion(evidence={:?}, base_rate={:?}, prior_weight={:?})",
            self.0.evidence(),
            self.0.base_rate(),
            self.0.prior_weight()
        )
    }
}

fn fusion_weights(gamma: Option<f64>) -> PyResult<Option<core::DogmaticWeights>> {
    gamma.map(core::DogmaticWeights::new).transpose().map_err(to_py)
}

fn fission_weights(gamma_c: Option<f64>) -> PyResult<Option<core::FissionWeights>> {
    gamma_c.map(core::FissionWeights::new).transpose().map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (a, b, gamma=None))]
fn cumulative_fuse(a: &PyOpinion, b: &PyOpinion, gamma: Option<f64>) -> PyResult<PyOpinion> {
    core::cumulative_fuse(&a.0, &b.0, fusion_weights(gamma)?).map(PyOpinion).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (a, b, gamma=None))]
fn averaging_fuse(a: &PyOpinion, b: &PyOpinion, gamma: Option<f64>) -> PyResult<PyOpinion> {
    core::averaging_fuse(&a.0, &b.0, fusion_weights(gamma)?).map(PyOpinion).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (c, b, gamma_c=None))]
fn cumulative_fission(c: &PyOpinion, b: &PyOpinion, gamma_c: Option<f64>) -> PyResult<PyOpinion> {
    core::cumulative_fission(&c.0, &b.0, fission_weights(gamma_c)?).map(PyOpinion).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (c, b, gamma_c=None))]
fn averaging_fission(c: &PyOpinion, b: &PyOpinion, gamma_c: Option<f64>) -> PyResult<PyOpinion> {
    core::averaging_fission(&c.0, &b.0, fission_weights(gamma_c)?).map(PyOpinion).map_err(to_py)
}

/// Returns `None` when `c` splits by `b`, otherwise a description of the
/// violated condition. `mode` is `"cumulative"` or `"averaging"`.
#[pyfunction]
#[pyo3(signature = (c, b, mode, gamma_c=None))]
fn check_decomposable(c: &PyOpinion, b: &PyOpinion, mode: &str, gamma_c: Option<f64>) -> PyResult<Option<String>> {
    let mode = match mode {
        "cumulative" => core::FissionMode::Cumulative,
        "averaging" => core::FissionMode::Averaging,
        other => return Err(PyValueError::new_err(format!("unknown fission mode `{other}`"))),
    };
    let d = core::is_decomposable(&c.0, &b.0, mode, fission_weights(gamma_c)?).map_err(to_py)?;
    Ok(d.violation().map(|v| v.to_string()))
}

#[pyfunction]
fn is_decomposable(c: &PyOpinion, b: &PyOpinion, mode: &str) -> PyResult<bool> {
    check_decomposable(c, b, mode, None).map(|v| v.is_none())
}

#[pyfunction]
fn expectation(opinion: &PyOpinion) -> Vec<f64> {
    core::expectation(&opinion.0)
}

#[pyfunction]
#[pyo3(signature = (opinion, prior_weight=core::DEFAULT_PRIOR_WEIGHT))]
fn to_evidence(opinion: &PyOpinion, prior_weight: f64) -> PyResult<PyEvidenceOpinion> {
    opinion.to_evidence(prior_weight)
}

#[pyfunction]
fn from_evidence(evidence: &PyEvidenceOpinion) -> PyOpinion {
    PyOpinion(core::from_evidence(&evidence.0))
}

#[pymodule]
#[pyo3(name = "opinion_algebra")]
fn opinion_algebra_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("EPSILON", core::EPSILON)?;
    m.add("DEFAULT_PRIOR_WEIGHT", core::DEFAULT_PRIOR_WEIGHT)?;
    m.add("NotDecomposableError", m.py().get_type::<NotDecomposableError>())?;
    m.add_class::<PyOpinion>()?;
    m.add_class::<PyEvidenceOpinion>()?;
    m.add_function(wrap_pyfunction!(cumulative_fuse, m)?)?;
    m.add_function(wrap_pyfunction!(averaging_fuse, m)?)?;
    m.add_function(wrap_pyfunction!(cumulative_fission, m)?)?;
    m.add_function(wrap_pyfunction!(averaging_fission, m)?)?;
    m.add_function(wrap_pyfunction!(check_decomposable, m)?)?;
    m.add_function(wrap_pyfunction!(is_decomposable, m)?)?;
    m.add_function(wrap_pyfunction!(expectation, m)?)?;
    m.add_function(wrap_pyfunction!(to_evidence, m)?)?;
    m.add_function(wrap_pyfunction!(from_evidence, m)?)?;
    Ok(())
}
