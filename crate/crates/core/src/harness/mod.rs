//! End-to-end comparison of the weighted-sum baseline with the Pareto
//! approach on the single-element placement problem.

mod config;
mod scalarize;
mod simulation;
mod sweep;

pub use config::SimulationConfig;
pub use scalarize::{scalarized_argmin, supported_members};
pub use simulation::{
    run_simulation, run_simulation_file, simulate, ExtremeCoverage, ScalarizedArgmins,
    SimulationOutcome, SimulationReport, Timings, WeightedSumResult, COLLAPSE_TOLERANCE,
    NSGA3_FILE, ORACLE_FILE, REPORT_FILE, WEIGHTED_SUM_FILE,
};
pub use sweep::{sweep_front, sweep_weights, SweepEntry, SweepReport};
