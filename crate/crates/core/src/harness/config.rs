use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::ergonomics::{AdaptationProblem, UserPose};
use crate::error::{Error, Result};
use crate::optimizers::{check_weights, AnnealConfig, Nsga3Config};
use crate::pareto::DEFAULT_ORACLE_RESOLUTION;
use crate::selection::{DEFAULT_REDUCTION_K, DEFAULT_TAU};

/// Input of a simulation run. Missing sections take their defaults; present
/// optimizer sections must carry a seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationConfig {
    #[serde(default)]
    pub pose: UserPose,
    #[serde(default)]
    pub nsga3: Nsga3Config,
    #[serde(default)]
    pub anneal: AnnealConfig,
    /// Raw-radian weights of the baseline, in objective order (neck, arm).
    #[serde(default = "equal_weights")]
    pub weights: Vec<f64>,
    #[serde(default = "default_resolution")]
    pub oracle_resolution: usize,
    #[serde(default = "default_k")]
    pub reduction_k: usize,
    #[serde(default = "default_tau")]
    pub tau: f64,
}

fn equal_weights() -> Vec<f64> {
    vec![0.5, 0.5]
}

fn default_resolution() -> usize {
    DEFAULT_ORACLE_RESOLUTION
}

fn default_k() -> usize {
    DEFAULT_REDUCTION_K
}

fn default_tau() -> f64 {
    DEFAULT_TAU
}

impl Default for SimulationConfig {
    fn default() -> Self {
        Self {
            pose: UserPose::default(),
            nsga3: Nsga3Config::default(),
            anneal: AnnealConfig::default(),
            weights: equal_weights(),
            oracle_resolution: default_resolution(),
            reduction_k: default_k(),
            tau: default_tau(),
        }
    }
}

impl SimulationConfig {
    pub fn from_json(json: &str) -> Result<Self> {
        let config: Self = serde_json::from_str(json)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn problem(&self) -> AdaptationProblem {
        AdaptationProblem::new(self.pose)
    }

    pub fn validate(&self) -> Result<()> {
        let problem = self.problem();
        problem.validate()?;
        self.nsga3.validate(problem.objective_count())?;
        self.anneal.validate()?;
        check_weights(&self.weights, problem.objective_count())?;
        if self.oracle_resolution < 2 {
            return Err(Error::validation("oracle_resolution", "must be at least 2"));
        }
        if self.reduction_k == 0 {
            return Err(Error::validation("reduction_k", "must be positive"));
        }
        if !(self.tau.is_finite() && self.tau > 0.0) {
            return Err(Error::validation("tau", "must be positive"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_object_is_the_default() {
        assert_eq!(SimulationConfig::from_json("{}").unwrap(), SimulationConfig::default());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(SimulationConfig::from_json(r#"{"wieghts": [1, 0]}"#).is_err());
    }

    #[test]
    fn invalid_sections_name_the_field() {
        let err = SimulationConfig::from_json(r#"{"weights": [0, 0]}"#).unwrap_err();
        assert!(matches!(err, Error::Validation { field, .. } if field == "weights"));
        let err = SimulationConfig::from_json(r#"{"pose": {"head_position": [0,1.7,0], "gaze_forward": [0,0,1], "shoulder_position": [0.2,1.45,0], "arm_rest_direction": [0,-1,0], "arm_length": 0}}"#).unwrap_err();
        assert!(err.is_validation());
        assert!(matches!(err, Error::Validation { field, .. } if field == "pose.arm_length"));
    }

    #[test]
    fn nested_sections_require_seeds() {
        assert!(SimulationConfig::from_json(r#"{"nsga3": {"generations": 10}}"#).is_err());
        let c = SimulationConfig::from_json(r#"{"nsga3": {"generations": 10, "seed": 1}}"#).unwrap();
        assert_eq!(c.nsga3.generations, 10);
    }
}
