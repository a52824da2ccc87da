use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::dominance::{check_dimensions, dominates_unchecked};
use crate::ergonomics::Candidate;
use crate::error::Result;

/// Objective vectors closer than this (max-norm) count as duplicates.
pub const DUPLICATE_TOLERANCE: f64 = 1e-9;

/// A set of mutually non-dominated candidates with their objective ranges.
///
/// Serializes as a plain JSON array of candidates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "Vec<Candidate>", into = "Vec<Candidate>")]
pub struct ParetoFront {
    members: Vec<Candidate>,
    ranges: Vec<(f64, f64)>,
}

impl ParetoFront {
    /// Wraps `members` as-is. Callers are responsible for mutual
    /// non-dominance; use [`pareto_filter`] to establish it.
    pub fn from_members(members: Vec<Candidate>) -> Self {
        let ranges = objective_ranges(&members);
        Self { members, ranges }
    }

    pub fn members(&self) -> &[Candidate] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Candidate> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Per-objective `(min, max)` over the members.
    pub fn ranges(&self) -> &[(f64, f64)] {
        &self.ranges
    }

    pub fn objective_count(&self) -> usize {
        self.ranges.len()
    }

    /// Width of each objective range, with constant objectives mapped to 1.
    pub fn normalization_widths(&self) -> Vec<f64> {
        self.ranges
            .iter()
            .map(|&(lo, hi)| if hi - lo > 0.0 { hi - lo } else { 1.0 })
            .collect()
    }

    /// Index of the member minimizing objective `m`, ties broken by the
    /// lexicographically smallest objective vector.
    pub fn minimizer(&self, m: usize) -> Option<usize> {
        (0..self.members.len()).min_by(|&a, &b| {
            let (fa, fb) = (&self.members[a].objectives, &self.members[b].objectives);
            fa[m].total_cmp(&fb[m]).then_with(|| lex_cmp(fa, fb))
        })
    }
}

impl From<Vec<Candidate>> for ParetoFront {
    fn from(members: Vec<Candidate>) -> Self {
        Self::from_members(members)
    }
}

impl From<ParetoFront> for Vec<Candidate> {
    fn from(front: ParetoFront) -> Self {
        front.members
    }
}

fn objective_ranges(members: &[Candidate]) -> Vec<(f64, f64)> {
    let Some(first) = members.first() else {
        return Vec::new();
    };
    let mut ranges: Vec<(f64, f64)> = first.objectives.iter().map(|&v| (v, v)).collect();
    for c in &members[1..] {
        for (r, &v) in ranges.iter_mut().zip(c.objectives.iter()) {
            r.0 = r.0.min(v);
            r.1 = r.1.max(v);
        }
    }
    ranges
}

pub(crate) fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn near_duplicate(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= DUPLICATE_TOLERANCE)
}

/// The non-dominated members of `population`, deduplicated by objective
/// vector.
///
/// Candidates are visited in order of (total violation, objective vector).
/// In that order nothing can be dominated by a later candidate, so each one is
/// kept unless something already kept dominates or duplicates it. Output order
/// is that visiting order.
pub fn pareto_filter(population: &[Candidate]) -> Result<ParetoFront> {
    check_dimensions(population)?;
    let violations: Vec<f64> = population.iter().map(Candidate::total_violation).collect();
    let mut order: Vec<usize> = (0..population.len()).collect();
    order.sort_by(|&a, &b| {
        violations[a]
            .total_cmp(&violations[b])
            .then_with(|| lex_cmp(&population[a].objectives, &population[b].objectives))
            .then(a.cmp(&b))
    });

    let mut kept: Vec<usize> = Vec::new();
    for i in order {
        let c = &population[i];
        // Recently kept members are the likeliest to dominate the next one.
        let rejected = kept.iter().rev().any(|&k| {
            let member = &population[k];
            dominates_unchecked(member, c)
                || (violations[k] == violations[i]
                    && near_duplicate(&member.objectives, &c.objectives))
        });
        if !rejected {
            kept.push(i);
        }
    }
    Ok(ParetoFront::from_members(
        kept.into_iter().map(|i| population[i].clone()).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::pareto::test_support::{cand, objective_set};

    #[test]
    fn drops_dominated() {
        let front = pareto_filter(&[cand(&[0.0, 1.0]), cand(&[1.0, 0.0]), cand(&[1.0, 1.0])]).unwrap();
        assert_eq!(objective_set(&front), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(front.ranges(), &[(0.0, 1.0), (0.0, 1.0)]);
    }

    #[test]
    fn deduplicates_identical_vectors() {
        let pop = vec![cand(&[0.5, 0.5]); 4];
        assert_eq!(pareto_filter(&pop).unwrap().len(), 1);
        let pop = [cand(&[0.5, 0.5]), cand(&[0.5 + 1e-12, 0.5 - 1e-12])];
        assert_eq!(pareto_filter(&pop).unwrap().len(), 1);
    }

    #[test]
    fn empty_is_an_error() {
        assert!(matches!(pareto_filter(&[]), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn feasible_beats_better_infeasible() {
        let mut infeasible = cand(&[0.0, 0.0]);
        infeasible.reach_violation = 0.3;
        let front = pareto_filter(&[infeasible, cand(&[2.0, 2.0])]).unwrap();
        assert_eq!(objective_set(&front), vec![vec![2.0, 2.0]]);
    }

    #[test]
    fn serializes_as_array() {
        let front = pareto_filter(&[cand(&[0.0, 1.0])]).unwrap();
        let json = serde_json::to_value(&front).unwrap();
        assert!(json.is_array());
        let back: ParetoFront = serde_json::from_value(json).unwrap();
        assert_eq!(back, front);
    }

    #[test]
    fn minimizer_breaks_ties_lexicographically() {
        let front = ParetoFront::from_members(vec![cand(&[0.0, 2.0]), cand(&[0.0, 1.0]), cand(&[1.0, 0.0])]);
        assert_eq!(front.minimizer(0), Some(1));
        assert_eq!(front.minimizer(1), Some(2));
    }
}
