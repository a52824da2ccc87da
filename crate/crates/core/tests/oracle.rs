//! The grid oracle and the quality indicator on the default problem.

use std::f64::consts::FRAC_PI_2;

use paretoplace_core::pareto::{brute_force_front, igd, pareto_filter, ParetoFront};
use paretoplace_core::{AdaptationProblem, UserPose};

fn problem() -> AdaptationProblem {
    AdaptationProblem::new(UserPose::default())
}

fn nearest(front: &ParetoFront, target: [f64; 2]) -> f64 {
    front
        .members()
        .iter()
        .map(|c| ((c.objectives[0] - target[0]).powi(2) + (c.objectives[1] - target[1]).powi(2)).sqrt())
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn default_oracle_contains_both_extremes() {
    let front = brute_force_front(&problem(), 96).unwrap();
    // Hand derivation: arm extreme directly below the shoulder, neck extreme
    // on the gaze ray where cos(arm) = -0.25 / 0.65.
    let neck_extreme_arm = (-0.25f64 / 0.65).acos();
    assert!(nearest(&front, [FRAC_PI_2, 0.0]) <= 0.02);
    assert!(nearest(&front, [0.0, neck_extreme_arm]) <= 0.05);
    for c in front.members() {
        assert!(c.is_feasible());
    }
}

#[test]
fn oracle_is_a_fixed_point_of_the_filter() {
    for resolution in [5, 12, 25] {
        let front = brute_force_front(&problem(), resolution).unwrap();
        let refiltered = pareto_filter(front.members()).unwrap();
        assert_eq!(front, refiltered, "resolution {resolution}");
        assert_eq!(igd(&front, &refiltered).unwrap(), 0.0);
    }
}

#[test]
fn refinement_keeps_members_near_the_finer_front() {
    // Each resolution-r member lies within one grid-cell diagonal of a member
    // of the resolution-2r front.
    let p = problem();
    for r in [6usize, 8, 10, 12] {
        let coarse = brute_force_front(&p, r).unwrap();
        let fine = brute_force_front(&p, 2 * r).unwrap();
        let diagonal = p.bounds.extent().norm() / (r - 1) as f64;
        for c in coarse.members() {
            let gap = fine
                .members()
                .iter()
                .map(|f| f.position.distance(c.position))
                .fold(f64::INFINITY, f64::min);
            assert!(gap <= diagonal + 1e-12, "r={r}: gap {gap} > {diagonal}");
        }
    }
}

#[test]
fn igd_hand_example() {
    use paretoplace_core::{Candidate, ObjectiveVector, Vec3};
    let cand = |f: [f64; 2]| Candidate {
        position: Vec3::ZERO,
        objectives: ObjectiveVector(f.to_vec()),
        reach_violation: -1.0,
        preference_violation: 0.0,
    };
    let approx = ParetoFront::from_members(vec![cand([0.0, 1.0]), cand([1.0, 0.0])]);
    let reference = ParetoFront::from_members(vec![cand([0.0, 1.0]), cand([0.5, 0.5]), cand([1.0, 0.0])]);
    let value = igd(&approx, &reference).unwrap();
    assert!((value - 0.2357).abs() < 1e-4);
    // Adding a reference point that the approximation already contains never
    // increases the summed distance.
    let extended = ParetoFront::from_members(vec![cand([0.0, 1.0]), cand([0.5, 0.5]), cand([1.0, 0.0]), cand([0.0, 1.0])]);
    let sum_before = value * 3.0;
    let sum_after = igd(&approx, &extended).unwrap() * 4.0;
    assert!(sum_after <= sum_before + 1e-12);
}
