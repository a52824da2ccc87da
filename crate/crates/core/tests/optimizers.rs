//! End-to-end behaviour of NSGA-III and the annealed weighted sum on the
//! default problem.

use std::f64::consts::FRAC_PI_2;

use paretoplace_core::harness::scalarized_argmin;
use paretoplace_core::pareto::{brute_force_front, dominates, igd};
use paretoplace_core::{
    anneal_weighted_sum, nsga3_run, AdaptationProblem, AnnealConfig, Error, Nsga3Config, UserPose,
};

fn problem() -> AdaptationProblem {
    AdaptationProblem::new(UserPose::default())
}

fn config(seed: u64, generations: usize) -> Nsga3Config {
    Nsga3Config {
        seed,
        generations,
        ..Nsga3Config::default()
    }
}

#[test]
fn nsga3_output_invariants() {
    let p = problem();
    let front = nsga3_run(&p, &config(42, 60)).unwrap();
    assert!(!front.is_empty());
    for a in front.members() {
        assert!(a.reach_violation <= 1e-9);
        assert!(p.bounds.contains(a.position));
        for b in front.members() {
            assert!(!dominates(a, b).unwrap());
        }
    }
}

#[test]
fn nsga3_more_generations_do_not_hurt_on_average() {
    let p = problem();
    let oracle = brute_force_front(&p, 96).unwrap();
    let (mut short, mut long) = (0.0, 0.0);
    for seed in 0..10 {
        short += igd(&nsga3_run(&p, &config(seed, 50)).unwrap(), &oracle).unwrap();
        long += igd(&nsga3_run(&p, &config(seed, 200)).unwrap(), &oracle).unwrap();
    }
    assert!(long <= short, "mean IGD 200 gens {} > 50 gens {}", long / 10.0, short / 10.0);
}

#[test]
fn nsga3_rejects_bad_configs() {
    let p = problem();
    let bad = Nsga3Config {
        population_size: 10,
        ..Nsga3Config::default()
    };
    assert!(nsga3_run(&p, &bad).unwrap_err().is_validation());
    let bad = Nsga3Config {
        sbx_probability: 1.5,
        ..Nsga3Config::default()
    };
    assert!(nsga3_run(&p, &bad).unwrap_err().is_validation());
}

#[test]
fn scalarized_argmin_of_the_oracle_is_a_front_member() {
    let oracle = brute_force_front(&problem(), 40).unwrap();
    for w in [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0] {
        let i = scalarized_argmin(&oracle, &[w, 1.0 - w], None).unwrap();
        let chosen = &oracle.members()[i];
        // The argmin over a non-dominated set is never dominated by it.
        assert!(oracle.members().iter().all(|m| !dominates(m, chosen).unwrap()));
    }
}

#[test]
fn equal_weight_annealing_collapses_to_arm_extreme() {
    let p = problem();
    let c = anneal_weighted_sum(&p, &[0.5, 0.5], &AnnealConfig::default()).unwrap();
    assert!((c.objectives[0] - FRAC_PI_2).abs() <= 0.02, "{:?}", c.objectives);
    assert!(c.objectives[1] <= 0.02, "{:?}", c.objectives);
    assert!(c.is_feasible());
    // The flat optimum is the arm-rest ray below the shoulder.
    let s = p.pose.shoulder_position;
    assert!((c.position.x - s.x).abs() <= 0.02 && (c.position.z - s.z).abs() <= 0.02);
    assert!(c.position.y < s.y);
}

#[test]
fn neck_only_weights_land_on_neck_extreme() {
    let c = anneal_weighted_sum(&problem(), &[1.0, 0.0], &AnnealConfig::default()).unwrap();
    assert!(c.objectives[0] <= 0.02, "{:?}", c.objectives);
}

#[test]
fn annealing_is_seed_deterministic() {
    let p = problem();
    let cfg = AnnealConfig {
        iterations: 2_000,
        ..AnnealConfig::default()
    };
    let a = anneal_weighted_sum(&p, &[0.3, 0.7], &cfg).unwrap();
    let b = anneal_weighted_sum(&p, &[0.3, 0.7], &cfg).unwrap();
    assert_eq!(a, b);
}

#[test]
fn annealing_rejects_bad_weights() {
    let p = problem();
    for w in [vec![0.5], vec![-0.1, 1.1], vec![0.0, 0.0], vec![f64::NAN, 1.0]] {
        let err = anneal_weighted_sum(&p, &w, &AnnealConfig::default()).unwrap_err();
        assert!(matches!(err, Error::Validation { .. }), "{w:?}: {err}");
    }
}
