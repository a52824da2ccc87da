use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::config::AnnealConfig;
use crate::ergonomics::{AdaptationProblem, Candidate, Vec3};
use crate::error::{Error, Result};

/// `Σ_m w_m · f_m`.
pub fn weighted_sum_cost(objectives: &[f64], weights: &[f64]) -> Result<f64> {
    check_weights(weights, objectives.len())?;
    Ok(objectives.iter().zip(weights).map(|(f, w)| f * w).sum())
}

pub(crate) fn check_weights(weights: &[f64], objective_count: usize) -> Result<()> {
    if weights.len() != objective_count {
        return Err(Error::validation(
            "weights",
            format!("expected {objective_count} weights, got {}", weights.len()),
        ));
    }
    if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
        return Err(Error::validation("weights", "must be finite and non-negative"));
    }
    if weights.iter().all(|&w| w == 0.0) {
        return Err(Error::validation("weights", "must not all be zero"));
    }
    Ok(())
}

/// Minimizes the weighted sum of the problem's objectives by simulated
/// annealing and returns the best feasible placement visited.
///
/// The chain starts at the resting-arm reach point, perturbed by one proposal
/// step. Proposals are Gaussian steps clamped to the decision box. While the
/// chain is infeasible it only moves toward smaller violation; once feasible
/// it rejects infeasible proposals and applies the Metropolis rule under a
/// geometric cooling schedule.
pub fn anneal_weighted_sum(
    problem: &AdaptationProblem,
    weights: &[f64],
    config: &AnnealConfig,
) -> Result<Candidate> {
    problem.validate()?;
    config.validate()?;
    check_weights(weights, problem.objective_count())?;
    let cost = |c: &Candidate| -> f64 { c.objectives.iter().zip(weights).map(|(f, w)| f * w).sum() };

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let step = Normal::new(0.0, config.proposal_sigma)
        .map_err(|e| Error::validation("anneal.proposal_sigma", e.to_string()))?;
    let propose = |from: Vec3, rng: &mut ChaCha8Rng| {
        let delta = Vec3::new(step.sample(rng), step.sample(rng), step.sample(rng));
        problem.bounds.clamp(from + delta)
    };

    let pose = &problem.pose;
    let rest = pose.shoulder_position + pose.arm_rest_direction * pose.arm_length;
    let mut current = problem.evaluate_unchecked(propose(problem.bounds.clamp(rest), &mut rng));
    let mut current_cost = cost(&current);
    let mut best = current.is_feasible().then(|| (current.clone(), current_cost));

    for i in 0..config.iterations {
        let proposal = problem.evaluate_unchecked(propose(current.position, &mut rng));
        let accept = if !current.is_feasible() {
            proposal.total_violation() < current.total_violation()
        } else if !proposal.is_feasible() {
            false
        } else {
            let delta = cost(&proposal) - current_cost;
            delta <= 0.0 || rng.random::<f64>() < (-delta / config.temperature(i)).exp()
        };
        if !accept {
            continue;
        }
        current = proposal;
        current_cost = cost(&current);
        if current.is_feasible() && best.as_ref().is_none_or(|(_, b)| current_cost < *b) {
            best = Some((current.clone(), current_cost));
        }
    }

    best.map(|(c, _)| c).ok_or_else(|| {
        Error::Infeasible(format!(
            "annealing visited no feasible placement in {} iterations",
            config.iterations
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ergonomics::UserPose;

    #[test]
    fn cost_examples() {
        assert_eq!(weighted_sum_cost(&[1.0, 3.0], &[0.5, 0.5]).unwrap(), 2.0);
        assert_eq!(weighted_sum_cost(&[1.7, 3.0], &[1.0, 0.0]).unwrap(), 1.7);
        assert!(weighted_sum_cost(&[1.0, 3.0], &[1.0]).is_err());
        assert!(weighted_sum_cost(&[1.0, 3.0], &[0.0, 0.0]).is_err());
        assert!(weighted_sum_cost(&[1.0, 3.0], &[-1.0, 2.0]).is_err());
    }

    #[test]
    fn zero_iterations_returns_start() {
        let problem = AdaptationProblem::new(UserPose::default());
        // Find a seed whose perturbed start is reachable.
        let (config, start) = (0..50)
            .find_map(|seed| {
                let config = AnnealConfig { iterations: 0, seed, ..Default::default() };
                anneal_weighted_sum(&problem, &[0.5, 0.5], &config).ok().map(|c| (config, c))
            })
            .expect("some start inside reach");
        let again = anneal_weighted_sum(&problem, &[0.5, 0.5], &config).unwrap();
        assert_eq!(start, again);
        let rest = Vec3::new(0.20, 0.80, 0.0);
        assert!(start.position.distance(rest) < 6.0 * config.proposal_sigma);
    }

    #[test]
    fn infeasible_start_without_iterations_errors() {
        let problem = AdaptationProblem::new(UserPose::default());
        let failures = (0..50)
            .filter(|&seed| {
                let config = AnnealConfig { iterations: 0, seed, ..Default::default() };
                matches!(
                    anneal_weighted_sum(&problem, &[0.5, 0.5], &config),
                    Err(Error::Infeasible(_))
                )
            })
            .count();
        assert!(failures > 0, "the rest point sits on the reach sphere");
    }

    #[test]
    fn deterministic_for_seed() {
        let problem = AdaptationProblem::new(UserPose::default());
        let config = AnnealConfig { iterations: 2_000, ..Default::default() };
        let a = anneal_weighted_sum(&problem, &[0.5, 0.5], &config).unwrap();
        let b = anneal_weighted_sum(&problem, &[0.5, 0.5], &config).unwrap();
        assert_eq!(a, b);
    }
}
