//! The two solvers: NSGA-III for the Pareto front and a simulated-annealing
//! weighted-sum baseline.

mod anneal;
mod config;
mod nsga3;
mod reference;
mod variation;

pub use anneal::{anneal_weighted_sum, weighted_sum_cost};

pub(crate) use anneal::check_weights;
pub use config::{AnnealConfig, Nsga3Config, COOLING_INTERVAL};
pub use nsga3::{nsga3_run, nsga3_run_observed, Progress};
pub use reference::{das_dennis, reference_point_count, ReferenceDirectionSet};
pub use variation::{polynomial_mutation, sbx_crossover, Sbx};

