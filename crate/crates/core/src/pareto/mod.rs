//! Dominance, non-dominated sorting, fronts and the grid oracle.

mod dominance;
mod front;
mod indicators;
pub mod io;
mod oracle;
mod sort;

pub use dominance::{dominates, pareto_dominates};
pub use front::{pareto_filter, ParetoFront, DUPLICATE_TOLERANCE};
pub use indicators::igd;
pub use oracle::{brute_force_front, feasible_grid, DEFAULT_ORACLE_RESOLUTION};
pub use sort::{non_dominated_sort, RankedPopulation};

pub(crate) use front::lex_cmp;
