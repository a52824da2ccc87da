use crate::ergonomics::Candidate;
use crate::error::{Error, Result};

/// Constrained domination for minimization.
///
/// A feasible candidate beats an infeasible one; between two infeasible ones
/// the smaller total violation wins; between two feasible ones ordinary Pareto
/// dominance applies.
pub fn dominates(a: &Candidate, b: &Candidate) -> Result<bool> {
    if a.objectives.len() != b.objectives.len() {
        return Err(Error::IncompatibleCandidates {
            left: a.objectives.len(),
            right: b.objectives.len(),
        });
    }
    Ok(dominates_unchecked(a, b))
}

/// [`dominates`] without the dimension check.
pub(crate) fn dominates_unchecked(a: &Candidate, b: &Candidate) -> bool {
    let (va, vb) = (a.total_violation(), b.total_violation());
    match (va <= 0.0, vb <= 0.0) {
        (true, false) => true,
        (false, true) => false,
        (false, false) => va < vb,
        (true, true) => pareto_dominates(&a.objectives, &b.objectives),
    }
}

/// Plain Pareto dominance on objective vectors of equal length.
pub fn pareto_dominates(a: &[f64], b: &[f64]) -> bool {
    let mut strictly_better = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        strictly_better |= x < y;
    }
    strictly_better
}

pub(crate) fn check_dimensions(population: &[Candidate]) -> Result<usize> {
    let first = population
        .first()
        .ok_or(Error::EmptyInput("population"))?
        .objectives
        .len();
    for c in population {
        if c.objectives.len() != first {
            return Err(Error::IncompatibleCandidates {
                left: first,
                right: c.objectives.len(),
            });
        }
    }
    Ok(first)
}
