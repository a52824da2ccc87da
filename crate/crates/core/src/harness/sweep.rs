use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::config::SimulationConfig;
use super::scalarize::{scalarized_argmin, supported_members};
use crate::ergonomics::ObjectiveId;
use crate::error::{Error, Result};
use crate::pareto::{brute_force_front, ParetoFront};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    /// Weight on the normalized neck angle; the arm angle gets `1 - weight`.
    pub weight: f64,
    pub front_index: usize,
    pub objectives: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub front_size: usize,
    /// Distinct front members returned by any weight.
    pub distinct_indices: Vec<usize>,
    /// Front members no weighting can return (non-convex part of the front);
    /// `None` unless there are exactly two objectives.
    pub unreachable_count: Option<usize>,
}

/// Sweeps the neck weight over `{0, 1/(steps-1), ..., 1}` and records which
/// oracle front member minimizes each range-normalized weighted sum.
pub fn sweep_weights(config: &SimulationConfig, steps: usize) -> Result<SweepReport> {
    config.validate()?;
    let problem = config.problem();
    let oracle = brute_force_front(&problem, config.oracle_resolution)?;
    sweep_front(&oracle, &problem.objectives, steps)
}

/// [`sweep_weights`] on a precomputed front.
pub fn sweep_front(front: &ParetoFront, objectives: &[ObjectiveId], steps: usize) -> Result<SweepReport> {
    if steps < 3 {
        return Err(Error::validation("steps", "must be at least 3"));
    }
    if front.is_empty() {
        return Err(Error::EmptyInput("oracle front"));
    }
    let index = |id: ObjectiveId| {
        objectives
            .iter()
            .position(|&o| o == id)
            .ok_or_else(|| Error::validation("objectives", format!("sweep needs {id}")))
    };
    let (neck, arm) = (index(ObjectiveId::NeckAngle)?, index(ObjectiveId::ArmAngle)?);
    let widths = front.normalization_widths();

    let entries: Vec<SweepEntry> = (0..steps)
        .map(|i| {
            let w = i as f64 / (steps - 1) as f64;
            let mut weights = vec![0.0; objectives.len()];
            weights[neck] = w;
            weights[arm] = 1.0 - w;
            let front_index = scalarized_argmin(front, &weights, Some(&widths)).expect("non-empty");
            SweepEntry {
                weight: w,
                front_index,
                objectives: front.members()[front_index].objectives.0.clone(),
            }
        })
        .collect();
    let distinct: BTreeSet<usize> = entries.iter().map(|e| e.front_index).collect();
    let unreachable_count = supported_members(front, &widths).map(|hull| front.len() - hull.len());
    Ok(SweepReport {
        entries,
        front_size: front.len(),
        distinct_indices: distinct.into_iter().collect(),
        unreachable_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pareto::test_support::cand;

    #[test]
    fn rejects_too_few_steps() {
        let front = ParetoFront::from_members(vec![cand(&[0.0, 1.0])]);
        let ids = [ObjectiveId::NeckAngle, ObjectiveId::ArmAngle];
        assert!(sweep_front(&front, &ids, 2).is_err());
    }

    #[test]
    fn limits_pick_single_objective_optima() {
        let front = ParetoFront::from_members(vec![cand(&[0.0, 1.0]), cand(&[0.6, 0.6]), cand(&[1.0, 0.0])]);
        let ids = [ObjectiveId::NeckAngle, ObjectiveId::ArmAngle];
        let report = sweep_front(&front, &ids, 11).unwrap();
        assert_eq!(report.entries[0].front_index, 2);
        assert_eq!(report.entries[10].front_index, 0);
        assert!(!report.distinct_indices.contains(&1));
        assert_eq!(report.unreachable_count, Some(1));
    }
}
