//! Python bindings: `import paretoplace`.

use paretoplace_core::pareto::{self, ParetoFront};
use paretoplace_core::selection::{self, RoundCandidate, RoundOverrides, SessionSettings};
use paretoplace_core::{
    AdaptationProblem, AnnealConfig, Candidate, Error, Nsga3Config, ObjectiveVector, Vec3,
};
use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

type Triple = (f64, f64, f64);

fn to_py(e: Error) -> PyErr {
    match e {
        e if e.is_validation() => PyValueError::new_err(e.to_string()),
        Error::StaleSelection { .. } | Error::NoOpenRound | Error::SessionNotFound(_) => {
            PyKeyError::new_err(e.to_string())
        }
        e => PyRuntimeError::new_err(e.to_string()),
    }
}

fn vec3(t: Triple) -> Vec3 {
    Vec3::new(t.0, t.1, t.2)
}

fn triple(v: Vec3) -> Triple {
    (v.x, v.y, v.z)
}

/// Head, gaze, shoulder and arm of the seated user, in metres.
#[pyclass(name = "UserPose", module = "paretoplace", from_py_object)]
#[derive(Clone)]
pub struct PyUserPose {
    inner: paretoplace_core::UserPose,
}

#[pymethods]
impl PyUserPose {
    #[new]
    #[pyo3(signature = (head_position=None, gaze_forward=None, shoulder_position=None, arm_rest_direction=None, arm_length=None))]
    fn new(
        head_position: Option<Triple>,
        gaze_forward: Option<Triple>,
        shoulder_position: Option<Triple>,
        arm_rest_direction: Option<Triple>,
        arm_length: Option<f64>,
    ) -> PyResult<Self> {
        let mut inner = paretoplace_core::UserPose::default();
        if let Some(v) = head_position {
            inner.head_position = vec3(v);
        }
        if let Some(v) = gaze_forward {
            inner.gaze_forward = vec3(v);
        }
        if let Some(v) = shoulder_position {
            inner.shoulder_position = vec3(v);
        }
        if let Some(v) = arm_rest_direction {
            inner.arm_rest_direction = vec3(v);
        }
        if let Some(v) = arm_length {
            inner.arm_length = v;
        }
        inner.validate().map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn head_position(&self) -> Triple {
        triple(self.inner.head_position)
    }

    #[getter]
    fn gaze_forward(&self) -> Triple {
        triple(self.inner.gaze_forward)
    }

    #[getter]
    fn shoulder_position(&self) -> Triple {
        triple(self.inner.shoulder_position)
    }

    #[getter]
    fn arm_rest_direction(&self) -> Triple {
        triple(self.inner.arm_rest_direction)
    }

    #[getter]
    fn arm_length(&self) -> f64 {
        self.inner.arm_length
    }

    fn __repr__(&self) -> String {
        format!(
            "UserPose(head_position={:?}, gaze_forward={:?}, shoulder_position={:?}, arm_rest_direction={:?}, arm_length={})",
            self.head_position(),
            self.gaze_forward(),
            self.shoulder_position(),
            self.arm_rest_direction(),
            self.inner.arm_length
        )
    }
}

fn problem(pose: Option<PyUserPose>) -> AdaptationProblem {
    AdaptationProblem::new(pose.map(|p| p.inner).unwrap_or_default())
}

/// An evaluated placement. Objectives are (neck, arm) in radians.
#[pyclass(name = "Candidate", module = "paretoplace", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyCandidate {
    inner: Candidate,
}

#[pymethods]
impl PyCandidate {
    #[getter]
    fn position(&self) -> Triple {
        triple(self.inner.position)
    }

    #[getter]
    fn objectives(&self) -> Vec<f64> {
        self.inner.objectives.0.clone()
    }

    #[getter]
    fn reach_violation(&self) -> f64 {
        self.inner.reach_violation
    }

    #[getter]
    fn preference_violation(&self) -> f64 {
        self.inner.preference_violation
    }

    #[getter]
    fn is_feasible(&self) -> bool {
        self.inner.is_feasible()
    }

    fn __repr__(&self) -> String {
        format!(
            "Candidate(position={:?}, objectives={:?}, reach_violation={})",
            self.position(),
            self.inner.objectives.0,
            self.inner.reach_violation
        )
    }
}

fn wrap(front: ParetoFront) -> Vec<PyCandidate> {
    front.into_members().into_iter().map(|inner| PyCandidate { inner }).collect()
}

/// A front given either as `Candidate` objects or as bare objective vectors.
fn front_from(items: &Bound<'_, PyAny>) -> PyResult<ParetoFront> {
    let mut members = Vec::new();
    for item in items.try_iter()? {
        let item = item?;
        let c = match item.cast::<PyCandidate>() {
            Ok(c) => c.get().inner.clone(),
            Err(_) => Candidate {
                position: Vec3::ZERO,
                objectives: ObjectiveVector(item.extract::<Vec<f64>>()?),
                reach_violation: 0.0,
                preference_violation: 0.0,
            },
        };
        members.push(c);
    }
    Ok(ParetoFront::from_members(members))
}

/// Evaluates one position for `pose` (default pose if omitted).
#[pyfunction]
#[pyo3(signature = (position, pose=None))]
fn evaluate(position: Triple, pose: Option<PyUserPose>) -> PyResult<PyCandidate> {
    let inner = paretoplace_core::evaluate(&problem(pose), vec3(position)).map_err(to_py)?;
    Ok(PyCandidate { inner })
}

/// NSGA-III front of the placement problem.
#[pyfunction]
#[pyo3(signature = (pose=None, *, seed=42, population_size=100, generations=200, reference_divisions=99))]
fn nsga3_run(
    py: Python<'_>,
    pose: Option<PyUserPose>,
    seed: u64,
    population_size: usize,
    generations: usize,
    reference_divisions: usize,
) -> PyResult<Vec<PyCandidate>> {
    let problem = problem(pose);
    let config = Nsga3Config {
        seed,
        population_size,
        generations,
        reference_divisions,
        ..Nsga3Config::default()
    };
    let front = py
        .detach(|| paretoplace_core::nsga3_run(&problem, &config))
        .map_err(to_py)?;
    Ok(wrap(front))
}

/// Non-dominated subset of a `resolution`³ grid over the decision box.
#[pyfunction]
#[pyo3(signature = (pose=None, resolution=96))]
fn brute_force_front(py: Python<'_>, pose: Option<PyUserPose>, resolution: usize) -> PyResult<Vec<PyCandidate>> {
    let problem = problem(pose);
    let front = py
        .detach(|| pareto::brute_force_front(&problem, resolution))
        .map_err(to_py)?;
    Ok(wrap(front))
}

/// Range-normalized inverted generational distance.
#[pyfunction]
fn igd(approximation: &Bound<'_, PyAny>, reference: &Bound<'_, PyAny>) -> PyResult<f64> {
    pareto::igd(&front_from(approximation)?, &front_from(reference)?).map_err(to_py)
}

/// Trade-off score of member `index`; `inf` when nothing trades against it.
#[pyfunction]
fn tradeoff_mu(front: &Bound<'_, PyAny>, index: usize) -> PyResult<f64> {
    selection::tradeoff_mu(&front_from(front)?, index)
        .map(|s| s.mu)
        .map_err(to_py)
}

/// One entry of a reduced front.
#[pyclass(name = "ReducedCandidate", module = "paretoplace", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyReduced {
    #[pyo3(get)]
    id: Option<String>,
    #[pyo3(get)]
    front_index: usize,
    #[pyo3(get)]
    candidate: PyCandidate,
    #[pyo3(get)]
    mu: f64,
    #[pyo3(get)]
    is_extreme: bool,
    #[pyo3(get)]
    is_knee: bool,
}

#[pymethods]
impl PyReduced {
    fn __repr__(&self) -> String {
        format!(
            "ReducedCandidate(id={:?}, front_index={}, objectives={:?}, mu={}, is_extreme={}, is_knee={})",
            self.id, self.front_index, self.candidate.inner.objectives.0, self.mu, self.is_extreme, self.is_knee
        )
    }
}

impl PyReduced {
    fn new(id: Option<String>, r: &selection::ReducedCandidate) -> Self {
        Self {
            id,
            front_index: r.front_index,
            candidate: PyCandidate { inner: r.candidate.clone() },
            mu: r.mu,
            is_extreme: r.is_extreme,
            is_knee: r.is_knee,
        }
    }
}

/// At most `k` representatives: extremes first, then by trade-off score.
#[pyfunction]
#[pyo3(signature = (front, k=5))]
fn reduce_front(front: &Bound<'_, PyAny>, k: usize) -> PyResult<Vec<PyReduced>> {
    let front = front_from(front)?;
    Ok(selection::reduce_front(&front, k)
        .iter()
        .map(|r| PyReduced::new(None, r))
        .collect())
}

/// Simulated-annealing weighted-sum baseline.
#[pyfunction]
#[pyo3(signature = (weights, pose=None, *, seed=7, iterations=20_000, initial_temperature=1.0, cooling_factor=0.95, proposal_sigma=0.1))]
#[allow(clippy::too_many_arguments)]
fn anneal_weighted_sum(
    py: Python<'_>,
    weights: Vec<f64>,
    pose: Option<PyUserPose>,
    seed: u64,
    iterations: usize,
    initial_temperature: f64,
    cooling_factor: f64,
    proposal_sigma: f64,
) -> PyResult<PyCandidate> {
    let problem = problem(pose);
    let config = AnnealConfig {
        seed,
        iterations,
        initial_temperature,
        cooling_factor,
        proposal_sigma,
    };
    let inner = py
        .detach(|| paretoplace_core::anneal_weighted_sum(&problem, &weights, &config))
        .map_err(to_py)?;
    Ok(PyCandidate { inner })
}

/// Adapt/select loop with accumulated objective bounds.
#[pyclass(name = "Session", module = "paretoplace", skip_from_py_object)]
pub struct PySession {
    inner: paretoplace_core::Session,
}

fn round_candidates(candidates: &[RoundCandidate]) -> Vec<PyReduced> {
    candidates
        .iter()
        .map(|c| PyReduced::new(Some(c.id.clone()), &c.reduced))
        .collect()
}

#[pymethods]
impl PySession {
    #[new]
    #[pyo3(signature = (pose=None, *, id="local", seed=42, population_size=100, generations=200, reduction_k=5, tau=0.2))]
    fn new(
        pose: Option<PyUserPose>,
        id: &str,
        seed: u64,
        population_size: usize,
        generations: usize,
        reduction_k: usize,
        tau: f64,
    ) -> PyResult<Self> {
        let settings = SessionSettings {
            nsga3: Nsga3Config {
                seed,
                population_size,
                generations,
                ..Nsga3Config::default()
            },
            reduction_k,
            tau,
        };
        let pose = pose.map(|p| p.inner).unwrap_or_default();
        let inner = paretoplace_core::Session::new(id, pose, settings).map_err(to_py)?;
        Ok(Self { inner })
    }

    /// Runs the next round and returns its reduced candidates.
    fn adapt(&mut self, py: Python<'_>) -> PyResult<Vec<PyReduced>> {
        let pending = self
            .inner
            .prepare_round(&RoundOverrides::default())
            .map_err(to_py)?;
        let round = py.detach(|| pending.run(|_| {})).map_err(to_py)?;
        let round = self.inner.push_round(round).map_err(to_py)?;
        Ok(round_candidates(&round.candidates))
    }

    /// Records a pick from the latest round; returns `(objective, bound)` pairs.
    fn select(&mut self, candidate_id: &str) -> PyResult<Vec<(String, f64)>> {
        self.inner.apply_selection(candidate_id).map_err(to_py)?;
        Ok(self.constraints())
    }

    #[getter]
    fn constraints(&self) -> Vec<(String, f64)> {
        self.inner
            .constraints
            .iter()
            .map(|c| (c.objective.as_str().to_owned(), c.upper_bound))
            .collect()
    }

    #[getter]
    fn round(&self) -> usize {
        self.inner.current_round_number()
    }

    #[getter]
    fn auto_pick(&self) -> Option<String> {
        self.inner.latest_round().and_then(|r| r.auto_pick.clone())
    }

    /// Full front of the latest round.
    fn front(&self) -> Vec<PyCandidate> {
        self.inner
            .latest_round()
            .map(|r| wrap(r.front.clone()))
            .unwrap_or_default()
    }

    /// Full history as JSON, loadable with `Session.from_json`.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| to_py(e.into()))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(text).map_err(|e| to_py(e.into()))?;
        Ok(Self { inner })
    }
}

#[pymodule]
fn paretoplace(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyUserPose>()?;
    m.add_class::<PyCandidate>()?;
    m.add_class::<PyReduced>()?;
    m.add_class::<PySession>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(nsga3_run, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_front, m)?)?;
    m.add_function(wrap_pyfunction!(igd, m)?)?;
    m.add_function(wrap_pyfunction!(tradeoff_mu, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_front, m)?)?;
    m.add_function(wrap_pyfunction!(anneal_weighted_sum, m)?)?;
    Ok(())
}
