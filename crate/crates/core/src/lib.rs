//! Placement of a single floating 3D UI element by constrained multi-objective
//! optimization.
//!
//! The crate is organized around one adaptation loop:
//!
//! 1. [`optimizers::nsga3_run`] approximates the Pareto front of candidate
//!    placements under the ergonomic objectives in [`ergonomics`].
//! 2. [`selection::reduce_front`] reduces that front to a handful of extreme
//!    and high trade-off candidates.
//! 3. A user picks one of them ([`selection::Session::apply_selection`]).
//! 4. The pick becomes objective-space upper bounds for the next run.
//!
//! [`pareto`] holds dominance, sorting, the exhaustive grid oracle and the IGD
//! indicator used to validate the optimizer, and [`harness`] reproduces the
//! weighted-sum versus Pareto comparison end to end.

pub mod ergonomics;
pub mod error;
pub mod harness;
pub mod optimizers;
pub mod pareto;
pub mod selection;

pub use ergonomics::{
    evaluate, AdaptationProblem, Bounds, Candidate, ObjectiveId, ObjectiveVector,
    PreferenceConstraint, UserPose, Vec3,
};
pub use error::{Error, Result};
pub use optimizers::{anneal_weighted_sum, nsga3_run, AnnealConfig, Nsga3Config};
pub use pareto::{brute_force_front, igd, non_dominated_sort, pareto_filter, ParetoFront};
pub use selection::{reduce_front, tradeoff_mu, ReducedCandidate, Session};

