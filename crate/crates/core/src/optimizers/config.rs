use serde::{Deserialize, Serialize};

use super::reference::reference_point_count;
use crate::error::{Error, Result};

/// NSGA-III settings. The seed is required when deserializing; every other
/// field falls back to its default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Nsga3Config {
    #[serde(default = "defaults::population_size")]
    pub population_size: usize,
    #[serde(default = "defaults::generations")]
    pub generations: usize,
    /// Das-Dennis divisions; for two objectives `population_size - 1`.
    #[serde(default = "defaults::reference_divisions")]
    pub reference_divisions: usize,
    #[serde(default = "defaults::sbx_eta")]
    pub sbx_eta: f64,
    #[serde(default = "defaults::sbx_probability")]
    pub sbx_probability: f64,
    #[serde(default = "defaults::mutation_eta")]
    pub mutation_eta: f64,
    #[serde(default = "defaults::mutation_probability")]
    pub mutation_probability: f64,
    pub seed: u64,
}

impl Default for Nsga3Config {
    fn default() -> Self {
        Self {
            population_size: defaults::population_size(),
            generations: defaults::generations(),
            reference_divisions: defaults::reference_divisions(),
            sbx_eta: defaults::sbx_eta(),
            sbx_probability: defaults::sbx_probability(),
            mutation_eta: defaults::mutation_eta(),
            mutation_probability: defaults::mutation_probability(),
            seed: 42,
        }
    }
}

impl Nsga3Config {
    /// Population size needed for `divisions` on `objective_count`
    /// objectives: the reference point count rounded up to a multiple of 4.
    pub fn minimum_population(objective_count: usize, divisions: usize) -> usize {
        reference_point_count(objective_count, divisions).saturating_add(3) / 4 * 4
    }

    pub fn validate(&self, objective_count: usize) -> Result<()> {
        let field = |name: &str| format!("nsga3.{name}");
        if self.population_size == 0 {
            return Err(Error::validation(field("population_size"), "must be positive"));
        }
        if self.generations == 0 {
            return Err(Error::validation(field("generations"), "must be positive"));
        }
        if self.reference_divisions == 0 {
            return Err(Error::validation(field("reference_divisions"), "must be positive"));
        }
        for (name, eta) in [("sbx_eta", self.sbx_eta), ("mutation_eta", self.mutation_eta)] {
            if !(eta.is_finite() && eta > 0.0) {
                return Err(Error::validation(field(name), "must be positive"));
            }
        }
        for (name, p) in [
            ("sbx_probability", self.sbx_probability),
            ("mutation_probability", self.mutation_probability),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::validation(field(name), "must lie in [0, 1]"));
            }
        }
        if objective_count < 2 {
            return Err(Error::validation("objectives", "NSGA-III needs at least two objectives"));
        }
        let needed = Self::minimum_population(objective_count, self.reference_divisions);
        if self.population_size < needed {
            return Err(Error::validation(
                field("population_size"),
                format!(
                    "{} reference divisions on {objective_count} objectives need a population of at least {needed}",
                    self.reference_divisions
                ),
            ));
        }
        Ok(())
    }
}

/// Simulated annealing settings for the weighted-sum baseline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnealConfig {
    #[serde(default = "defaults::initial_temperature")]
    pub initial_temperature: f64,
    /// Multiplies the temperature every [`COOLING_INTERVAL`] iterations.
    #[serde(default = "defaults::cooling_factor")]
    pub cooling_factor: f64,
    #[serde(default = "defaults::iterations")]
    pub iterations: usize,
    /// Standard deviation of the Gaussian position proposals, meters.
    #[serde(default = "defaults::proposal_sigma")]
    pub proposal_sigma: f64,
    pub seed: u64,
}

/// Iterations between temperature reductions.
pub const COOLING_INTERVAL: usize = 100;

impl Default for AnnealConfig {
    fn default() -> Self {
        Self {
            initial_temperature: defaults::initial_temperature(),
            cooling_factor: defaults::cooling_factor(),
            iterations: defaults::iterations(),
            proposal_sigma: defaults::proposal_sigma(),
            seed: 7,
        }
    }
}

impl AnnealConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.initial_temperature.is_finite() && self.initial_temperature > 0.0) {
            return Err(Error::validation("anneal.initial_temperature", "must be positive"));
        }
        if !(self.cooling_factor > 0.0 && self.cooling_factor < 1.0) {
            return Err(Error::validation("anneal.cooling_factor", "must lie in (0, 1)"));
        }
        if !(self.proposal_sigma.is_finite() && self.proposal_sigma > 0.0) {
            return Err(Error::validation("anneal.proposal_sigma", "must be positive"));
        }
        Ok(())
    }

    /// Temperature in effect at iteration `i`.
    pub fn temperature(&self, i: usize) -> f64 {
        self.initial_temperature * self.cooling_factor.powi((i / COOLING_INTERVAL) as i32)
    }
}

mod defaults {
    pub fn population_size() -> usize {
        100
    }
    pub fn generations() -> usize {
        200
    }
    pub fn reference_divisions() -> usize {
        99
    }
    pub fn sbx_eta() -> f64 {
        30.0
    }
    pub fn sbx_probability() -> f64 {
        1.0
    }
    pub fn mutation_eta() -> f64 {
        20.0
    }
    pub fn mutation_probability() -> f64 {
        1.0 / 3.0
    }
    pub fn initial_temperature() -> f64 {
        1.0
    }
    pub fn cooling_factor() -> f64 {
        0.95
    }
    pub fn iterations() -> usize {
        20_000
    }
    pub fn proposal_sigma() -> f64 {
        0.10
    }
}
