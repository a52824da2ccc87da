use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::config::SimulationConfig;
use super::scalarize::scalarized_argmin;
use crate::ergonomics::{
    arm_extreme_position, evaluate, neck_extreme_position, Candidate, ObjectiveId,
};
use crate::error::{Error, Result};
use crate::optimizers::{anneal_weighted_sum, nsga3_run, weighted_sum_cost};
use crate::pareto::{brute_force_front, igd, io, ParetoFront};
use crate::selection::{reduce_front, ReducedCandidate};

/// Max-norm distance (rad) within which the baseline counts as collapsed onto
/// the arm extreme.
pub const COLLAPSE_TOLERANCE: f64 = 0.02;

pub const ORACLE_FILE: &str = "oracle.csv";
pub const NSGA3_FILE: &str = "nsga3.csv";
pub const WEIGHTED_SUM_FILE: &str = "weighted_sum.json";
pub const REPORT_FILE: &str = "report.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedSumResult {
    pub weights: Vec<f64>,
    pub candidate: Candidate,
    pub cost: f64,
}

/// Distance from an analytically known extreme of the front to the nearest
/// member of each computed front, in radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremeCoverage {
    pub extreme: ObjectiveId,
    pub target: Vec<f64>,
    pub nsga3_distance: f64,
    pub oracle_distance: f64,
}

/// Grid-oracle minimizers of the baseline's weighted sum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalarizedArgmins {
    /// Weights applied to raw radians.
    pub raw: Vec<f64>,
    /// Same weights after scaling each objective by the oracle front's range.
    pub normalized: Vec<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub oracle_ms: f64,
    pub nsga3_ms: f64,
    pub weighted_sum_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub config: SimulationConfig,
    pub objectives: Vec<ObjectiveId>,
    pub oracle_front_file: String,
    pub nsga3_front_file: String,
    pub weighted_sum_file: String,
    pub oracle_size: usize,
    pub nsga3_size: usize,
    pub weighted_sum: WeightedSumResult,
    pub igd: f64,
    /// Objectives of the oracle member with the smallest arm angle.
    pub oracle_arm_extreme: Vec<f64>,
    pub collapse_check: bool,
    pub extreme_coverage: Vec<ExtremeCoverage>,
    pub grid_scalarized_argmin: ScalarizedArgmins,
    pub reduced: Vec<ReducedCandidate>,
    pub timings: Timings,
}

/// Everything computed by a run, before anything is written.
#[derive(Debug, Clone)]
pub struct SimulationOutcome {
    pub oracle: ParetoFront,
    pub nsga3: ParetoFront,
    pub report: SimulationReport,
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn nearest(front: &ParetoFront, target: &[f64]) -> f64 {
    front
        .members()
        .iter()
        .map(|c| {
            c.objectives
                .iter()
                .zip(target)
                .map(|(a, b)| (a - b).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

/// Runs the oracle, NSGA-III and the annealed weighted sum on one pose and
/// compares them.
pub fn simulate(config: &SimulationConfig) -> Result<SimulationOutcome> {
    config.validate()?;
    let problem = config.problem();
    let arm = problem
        .objective_index(ObjectiveId::ArmAngle)
        .expect("default problem has an arm objective");

    let start = Instant::now();
    let oracle = brute_force_front(&problem, config.oracle_resolution)?;
    let oracle_ms = millis(start);
    if oracle.is_empty() {
        return Err(Error::Infeasible(format!(
            "oracle grid of resolution {} contains no reachable point",
            config.oracle_resolution
        )));
    }

    let start = Instant::now();
    let nsga3 = nsga3_run(&problem, &config.nsga3)?;
    let nsga3_ms = millis(start);

    let start = Instant::now();
    let ws = anneal_weighted_sum(&problem, &config.weights, &config.anneal)?;
    let weighted_sum_ms = millis(start);
    let ws_cost = weighted_sum_cost(&ws.objectives, &config.weights)?;

    let arm_extreme = oracle.members()[oracle.minimizer(arm).expect("non-empty")]
        .objectives
        .0
        .clone();
    let collapse_check = ws
        .objectives
        .iter()
        .zip(&arm_extreme)
        .all(|(a, b)| (a - b).abs() <= COLLAPSE_TOLERANCE);

    let mut targets = vec![(ObjectiveId::ArmAngle, arm_extreme_position(&problem.pose))];
    if let Some(p) = neck_extreme_position(&problem.pose) {
        targets.push((ObjectiveId::NeckAngle, p));
    }
    let extreme_coverage = targets
        .into_iter()
        .map(|(extreme, p)| {
            let target = evaluate(&problem, problem.bounds.clamp(p))?.objectives.0;
            Ok(ExtremeCoverage {
                extreme,
                nsga3_distance: nearest(&nsga3, &target),
                oracle_distance: nearest(&oracle, &target),
                target,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let widths = oracle.normalization_widths();
    let argmin = |w: Option<&[f64]>| {
        let i = scalarized_argmin(&oracle, &config.weights, w).expect("non-empty");
        oracle.members()[i].objectives.0.clone()
    };
    let grid_scalarized_argmin = ScalarizedArgmins {
        raw: argmin(None),
        normalized: argmin(Some(&widths)),
    };

    let report = SimulationReport {
        config: config.clone(),
        objectives: problem.objectives.clone(),
        oracle_front_file: ORACLE_FILE.into(),
        nsga3_front_file: NSGA3_FILE.into(),
        weighted_sum_file: WEIGHTED_SUM_FILE.into(),
        oracle_size: oracle.len(),
        nsga3_size: nsga3.len(),
        igd: igd(&nsga3, &oracle)?,
        weighted_sum: WeightedSumResult {
            weights: config.weights.clone(),
            candidate: ws,
            cost: ws_cost,
        },
        oracle_arm_extreme: arm_extreme,
        collapse_check,
        extreme_coverage,
        grid_scalarized_argmin,
        reduced: reduce_front(&nsga3, config.reduction_k),
        timings: Timings {
            oracle_ms,
            nsga3_ms,
            weighted_sum_ms,
        },
    };
    Ok(SimulationOutcome {
        oracle,
        nsga3,
        report,
    })
}

/// [`simulate`] and write the fronts, the baseline result and the report
/// into `out_dir`.
pub fn run_simulation(config: &SimulationConfig, out_dir: &Path) -> Result<SimulationReport> {
    let outcome = simulate(config)?;
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    io::save_csv(&outcome.oracle, &out_dir.join(ORACLE_FILE))?;
    io::save_csv(&outcome.nsga3, &out_dir.join(NSGA3_FILE))?;
    write_json(&out_dir.join(WEIGHTED_SUM_FILE), &outcome.report.weighted_sum)?;
    write_json(&out_dir.join(REPORT_FILE), &outcome.report)?;
    Ok(outcome.report)
}

/// Loads a config file and runs [`run_simulation`].
pub fn run_simulation_file(config_path: &Path, out_dir: &Path) -> Result<SimulationReport> {
    run_simulation(&SimulationConfig::load(config_path)?, out_dir)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}
