use rayon::prelude::*;

use super::front::{pareto_filter, ParetoFront};
use crate::ergonomics::{AdaptationProblem, Candidate, Vec3};
use crate::error::{Error, Result};

/// Grid points per axis used when no resolution is given.
pub const DEFAULT_ORACLE_RESOLUTION: usize = 96;

/// Evenly spaced coordinates from `lo` to `hi` inclusive.
fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + step * i as f64 })
        .collect()
}

/// Every feasible point of a `resolution³` grid over the decision box, in
/// x-major order.
pub fn feasible_grid(problem: &AdaptationProblem, resolution: usize) -> Result<Vec<Candidate>> {
    if resolution < 2 {
        return Err(Error::validation("resolution", "must be at least 2"));
    }
    problem.validate()?;
    let b = problem.bounds;
    let xs = axis(b.lower.x, b.upper.x, resolution);
    let ys = axis(b.lower.y, b.upper.y, resolution);
    let zs = axis(b.lower.z, b.upper.z, resolution);
    // Indexed parallel collect keeps the output order fixed.
    let slabs: Vec<Vec<Candidate>> = xs
        .par_iter()
        .map(|&x| {
            let mut slab = Vec::new();
            for &y in &ys {
                for &z in &zs {
                    let c = problem.evaluate_unchecked(Vec3::new(x, y, z));
                    if c.is_feasible() {
                        slab.push(c);
                    }
                }
            }
            slab
        })
        .collect();
    Ok(slabs.into_iter().flatten().collect())
}

/// Exhaustive reference front: the non-dominated feasible points of a
/// `resolution³` grid over the decision box. Empty when no grid point is
/// feasible.
pub fn brute_force_front(problem: &AdaptationProblem, resolution: usize) -> Result<ParetoFront> {
    let feasible = feasible_grid(problem, resolution)?;
    if feasible.is_empty() {
        return Ok(ParetoFront::from_members(Vec::new()));
    }
    pareto_filter(&feasible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ergonomics::UserPose;

    #[test]
    fn axis_hits_both_ends() {
        let a = axis(-1.0, 1.0, 5);
        assert_eq!(a, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
    }

    #[test]
    fn resolution_two_only_sees_corners() {
        // Box corners are sqrt(3)·L from the shoulder, all out of reach.
        let problem = AdaptationProblem::new(UserPose::default());
        assert!(feasible_grid(&problem, 2).unwrap().is_empty());
        assert!(brute_force_front(&problem, 2).unwrap().is_empty());
        // Odd resolutions include the shoulder and the face centers.
        let front = brute_force_front(&problem, 3).unwrap();
        assert!(!front.is_empty());
    }

    #[test]
    fn rejects_resolution_below_two() {
        let problem = AdaptationProblem::new(UserPose::default());
        assert!(matches!(brute_force_front(&problem, 1), Err(Error::Validation { .. })));
    }
}
