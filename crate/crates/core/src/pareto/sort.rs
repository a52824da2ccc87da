use serde::{Deserialize, Serialize};

use super::dominance::{check_dimensions, dominates_unchecked};
use crate::ergonomics::Candidate;
use crate::error::Result;

/// Population indices grouped into non-domination ranks, best first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedPopulation {
    pub fronts: Vec<Vec<usize>>,
}

impl RankedPopulation {
    /// Rank of every population member.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.fronts.iter().map(Vec::len).sum();
        let mut ranks = vec![0; n];
        for (r, front) in self.fronts.iter().enumerate() {
            for &i in front {
                ranks[i] = r;
            }
        }
        ranks
    }
}

/// Fast non-dominated sort under constrained domination.
///
/// Indices within each rank are ascending, so the result only depends on the
/// multiset of candidates and their positions.
pub fn non_dominated_sort(population: &[Candidate]) -> Result<RankedPopulation> {
    check_dimensions(population)?;
    let n = population.len();
    let mut dominated_by_count = vec![0usize; n];
    let mut dominates_list: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if dominates_unchecked(&population[i], &population[j]) {
                dominates_list[i].push(j);
                dominated_by_count[j] += 1;
            } else if dominates_unchecked(&population[j], &population[i]) {
                dominates_list[j].push(i);
                dominated_by_count[i] += 1;
            }
        }
    }

    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by_count[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominates_list[i] {
                dominated_by_count[j] -= 1;
                if dominated_by_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(std::mem::replace(&mut current, next));
    }
    Ok(RankedPopulation { fronts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::pareto::test_support::cand;

    #[test]
    fn two_ranks() {
        let pop = [cand(&[0.0, 1.0]), cand(&[1.0, 0.0]), cand(&[1.0, 1.0])];
        let ranked = non_dominated_sort(&pop).unwrap();
        assert_eq!(ranked.fronts, vec![vec![0, 1], vec![2]]);
        assert_eq!(ranked.ranks(), vec![0, 0, 1]);
    }

    #[test]
    fn singleton() {
        let ranked = non_dominated_sort(&[cand(&[0.0, 0.0])]).unwrap();
        assert_eq!(ranked.fronts, vec![vec![0]]);
    }

    #[test]
    fn empty_is_an_error() {
        assert!(matches!(non_dominated_sort(&[]), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn infeasible_ranked_by_violation() {
        let mut a = cand(&[0.0, 0.0]);
        a.reach_violation = 0.2;
        let mut b = cand(&[5.0, 5.0]);
        b.reach_violation = 0.1;
        let c = cand(&[9.0, 9.0]);
        let ranked = non_dominated_sort(&[a, b, c]).unwrap();
        assert_eq!(ranked.fronts, vec![vec![2], vec![1], vec![0]]);
    }
}
