use serde::{Deserialize, Serialize};

use super::reduce::{auto_pick, reduce_front, ReducedCandidate, DEFAULT_REDUCTION_K};
use crate::ergonomics::{AdaptationProblem, PreferenceConstraint, UserPose};
use crate::error::{Error, Result};
use crate::optimizers::{nsga3_run_observed, Nsga3Config, Progress};
use crate::pareto::ParetoFront;

/// Slack added above a selected value, as a fraction of the front's range.
pub const DEFAULT_TAU: f64 = 0.2;

/// Per-session optimizer and presentation settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionSettings {
    #[serde(default)]
    pub nsga3: Nsga3Config,
    #[serde(default = "default_k")]
    pub reduction_k: usize,
    #[serde(default = "default_tau")]
    pub tau: f64,
}

fn default_k() -> usize {
    DEFAULT_REDUCTION_K
}

fn default_tau() -> f64 {
    DEFAULT_TAU
}

impl Default for SessionSettings {
    fn default() -> Self {
        Self {
            nsga3: Nsga3Config::default(),
            reduction_k: DEFAULT_REDUCTION_K,
            tau: DEFAULT_TAU,
        }
    }
}

impl SessionSettings {
    pub fn validate(&self, objective_count: usize) -> Result<()> {
        self.nsga3.validate(objective_count)?;
        if self.reduction_k == 0 {
            return Err(Error::validation("reduction_k", "must be positive"));
        }
        if !(self.tau.is_finite() && self.tau > 0.0) {
            return Err(Error::validation("tau", "must be positive"));
        }
        Ok(())
    }
}

/// Per-round overrides of the session settings.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RoundOverrides {
    #[serde(default)]
    pub nsga3: Option<Nsga3Config>,
    #[serde(default)]
    pub reduction_k: Option<usize>,
}

/// A reduced candidate with its round-scoped identifier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoundCandidate {
    pub id: String,
    #[serde(flatten)]
    pub reduced: ReducedCandidate,
}

/// One optimize-reduce-select cycle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Round {
    /// 1-based.
    pub number: usize,
    pub front: ParetoFront,
    pub candidates: Vec<RoundCandidate>,
    pub auto_pick: Option<String>,
    pub selection: Option<String>,
}

impl Round {
    pub fn candidate(&self, id: &str) -> Option<&RoundCandidate> {
        self.candidates.iter().find(|c| c.id == id)
    }
}

fn candidate_id(round: usize, slot: usize) -> String {
    format!("r{round}c{slot}")
}

/// Everything needed to run a round without holding the session.
#[derive(Debug, Clone)]
pub struct PendingRound {
    pub number: usize,
    pub problem: AdaptationProblem,
    pub config: Nsga3Config,
    pub reduction_k: usize,
}

impl PendingRound {
    pub fn run(self, observe: impl FnMut(Progress)) -> Result<Round> {
        let front = nsga3_run_observed(&self.problem, &self.config, observe)?;
        let reduced = reduce_front(&front, self.reduction_k);
        let pick = auto_pick(&reduced);
        let candidates: Vec<RoundCandidate> = reduced
            .into_iter()
            .enumerate()
            .map(|(slot, reduced)| RoundCandidate {
                id: candidate_id(self.number, slot),
                reduced,
            })
            .collect();
        Ok(Round {
            number: self.number,
            auto_pick: pick.map(|i| candidate_id(self.number, i)),
            front,
            candidates,
            selection: None,
        })
    }
}

/// State of one elicitation loop for one user.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Session {
    pub id: String,
    pub pose: UserPose,
    pub problem: AdaptationProblem,
    pub settings: SessionSettings,
    pub rounds: Vec<Round>,
    pub constraints: Vec<PreferenceConstraint>,
}

impl Session {
    pub fn new(id: impl Into<String>, pose: UserPose, settings: SessionSettings) -> Result<Self> {
        pose.validate().map_err(|e| match e {
            Error::Validation { field, message } => Error::Validation {
                field: format!("pose.{field}"),
                message,
            },
            other => other,
        })?;
        let problem = AdaptationProblem::new(pose);
        settings.validate(problem.objective_count())?;
        Ok(Self {
            id: id.into(),
            pose,
            problem,
            settings,
            rounds: Vec::new(),
            constraints: Vec::new(),
        })
    }

    pub fn latest_round(&self) -> Option<&Round> {
        self.rounds.last()
    }

    pub fn current_round_number(&self) -> usize {
        self.rounds.len()
    }

    /// Snapshot of what the next round should run.
    pub fn prepare_round(&self, overrides: &RoundOverrides) -> Result<PendingRound> {
        let config = overrides.nsga3.clone().unwrap_or_else(|| self.settings.nsga3.clone());
        config.validate(self.problem.objective_count())?;
        let reduction_k = overrides.reduction_k.unwrap_or(self.settings.reduction_k);
        if reduction_k == 0 {
            return Err(Error::validation("reduction_k", "must be positive"));
        }
        Ok(PendingRound {
            number: self.rounds.len() + 1,
            problem: self.problem.clone(),
            config,
            reduction_k,
        })
    }

    /// Appends a finished round. Fails if another round was committed since
    /// the round was prepared.
    pub fn push_round(&mut self, round: Round) -> Result<&Round> {
        if round.number != self.rounds.len() + 1 {
            return Err(Error::validation(
                "round",
                format!("expected round {}, got {}", self.rounds.len() + 1, round.number),
            ));
        }
        self.rounds.push(round);
        Ok(self.rounds.last().expect("just pushed"))
    }

    /// Runs a full round under the accumulated constraints.
    pub fn adapt(&mut self, overrides: &RoundOverrides) -> Result<&Round> {
        let round = self.prepare_round(overrides)?.run(|_| {})?;
        self.push_round(round)
    }

    /// Records the user's pick from the latest round and turns it into upper
    /// bounds: each objective may be at most the picked value plus `tau` times
    /// the front's range on that objective. An existing bound is only ever
    /// replaced by a tighter one.
    pub fn apply_selection(&mut self, candidate_id: &str) -> Result<&[PreferenceConstraint]> {
        let tau = self.settings.tau;
        let round = self.rounds.last_mut().ok_or(Error::NoOpenRound)?;
        let current_round = round.number;
        let picked = round
            .candidate(candidate_id)
            .ok_or_else(|| Error::StaleSelection {
                candidate_id: candidate_id.to_owned(),
                current_round,
            })?
            .reduced
            .candidate
            .clone();

        for ((&objective, &value), &(lo, hi)) in self
            .problem
            .objectives
            .iter()
            .zip(picked.objectives.iter())
            .zip(round.front.ranges())
        {
            let bound = value + tau * (hi - lo);
            match self.constraints.iter_mut().find(|c| c.objective == objective) {
                Some(existing) => existing.upper_bound = existing.upper_bound.min(bound),
                None => self.constraints.push(PreferenceConstraint {
                    objective,
                    upper_bound: bound,
                }),
            }
        }
        round.selection = Some(candidate_id.to_owned());
        self.problem.preference_constraints = self.constraints.clone();
        Ok(&self.constraints)
    }

    /// Upper bound currently imposed on `objective`, if any.
    pub fn bound_for(&self, objective: crate::ergonomics::ObjectiveId) -> Option<f64> {
        self.constraints
            .iter()
            .find(|c| c.objective == objective)
            .map(|c| c.upper_bound)
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::ergonomics::{Candidate, ObjectiveId, ObjectiveVector, Vec3};

    fn quick_settings() -> SessionSettings {
        SessionSettings {
            nsga3: Nsga3Config {
                population_size: 24,
                reference_divisions: 23,
                generations: 20,
                seed: 5,
                ..Default::default()
            },
            ..Default::default()
        }
    }

    fn cand(f: [f64; 2]) -> Candidate {
        Candidate {
            position: Vec3::ZERO,
            objectives: ObjectiveVector(f.to_vec()),
            reach_violation: -0.1,
            preference_violation: 0.0,
        }
    }

    /// A session with one synthetic round whose front spans [0, π] on both
    /// objectives.
    fn session_with_round() -> Session {
        let mut s = Session::new("s", UserPose::default(), quick_settings()).unwrap();
        let round = PendingRound {
            number: 1,
            problem: s.problem.clone(),
            config: s.settings.nsga3.clone(),
            reduction_k: 5,
        };
        let front = ParetoFront::from_members(vec![cand([0.0, PI]), cand([0.4, 0.9]), cand([PI, 0.0])]);
        let reduced = reduce_front(&front, round.reduction_k);
        let candidates = reduced
            .into_iter()
            .enumerate()
            .map(|(slot, reduced)| RoundCandidate { id: candidate_id(1, slot), reduced })
            .collect();
        s.push_round(Round { number: 1, front, candidates, auto_pick: None, selection: None })
            .unwrap();
        s
    }

    fn id_of(s: &Session, f: [f64; 2]) -> String {
        s.latest_round()
            .unwrap()
            .candidates
            .iter()
            .find(|c| c.reduced.candidate.objectives.0 == f)
            .unwrap()
            .id
            .clone()
    }

    #[test]
    fn epsilon_rule() {
        let mut s = session_with_round();
        let id = id_of(&s, [0.4, 0.9]);
        let constraints = s.apply_selection(&id).unwrap().to_vec();
        assert_eq!(constraints.len(), 2);
        assert!((s.bound_for(ObjectiveId::NeckAngle).unwrap() - (0.4 + 0.2 * PI)).abs() < 1e-12);
        assert!((s.bound_for(ObjectiveId::ArmAngle).unwrap() - (0.9 + 0.2 * PI)).abs() < 1e-12);
        assert!((0.4f64 + 0.2 * PI - 1.028).abs() < 1e-3);
        assert_eq!(s.problem.preference_constraints, constraints);
        assert_eq!(s.latest_round().unwrap().selection.as_deref(), Some(id.as_str()));
    }

    #[test]
    fn selecting_twice_is_idempotent() {
        let mut s = session_with_round();
        let id = id_of(&s, [0.4, 0.9]);
        let first = s.apply_selection(&id).unwrap().to_vec();
        let second = s.apply_selection(&id).unwrap().to_vec();
        assert_eq!(first, second);
    }

    #[test]
    fn bounds_only_tighten() {
        let mut s = session_with_round();
        s.apply_selection(&id_of(&s, [0.4, 0.9])).unwrap();
        s.apply_selection(&id_of(&s, [0.0, PI])).unwrap();
        assert!((s.bound_for(ObjectiveId::NeckAngle).unwrap() - 0.2 * PI).abs() < 1e-12);
        assert!((s.bound_for(ObjectiveId::ArmAngle).unwrap() - (0.9 + 0.2 * PI)).abs() < 1e-12);
    }

    #[test]
    fn selection_errors() {
        let mut fresh = Session::new("s", UserPose::default(), quick_settings()).unwrap();
        assert!(matches!(fresh.apply_selection("r1c0"), Err(Error::NoOpenRound)));
        let mut s = session_with_round();
        assert!(matches!(
            s.apply_selection("r0c9"),
            Err(Error::StaleSelection { current_round: 1, .. })
        ));
    }

    #[test]
    fn invalid_pose_names_the_field() {
        let pose = UserPose { arm_length: -0.1, ..UserPose::default() };
        let err = Session::new("s", pose, SessionSettings::default()).unwrap_err();
        assert!(matches!(err, Error::Validation { field, .. } if field == "pose.arm_length"));
    }

    #[test]
    fn adapted_round_respects_constraints() {
        let mut s = Session::new("s", UserPose::default(), quick_settings()).unwrap();
        let round = s.adapt(&RoundOverrides::default()).unwrap();
        assert_eq!(round.number, 1);
        assert!(!round.candidates.is_empty() && round.candidates.len() <= 5);
        let pick = round.auto_pick.clone().unwrap();
        s.apply_selection(&pick).unwrap();
        let round = s.adapt(&RoundOverrides::default()).unwrap();
        assert_eq!(round.number, 2);
        for c in round.front.members() {
            assert!(c.preference_violation <= 1e-9 && c.reach_violation <= 1e-9);
        }
        let stale = s.rounds[0].candidates[0].id.clone();
        assert!(matches!(s.apply_selection(&stale), Err(Error::StaleSelection { current_round: 2, .. })));
    }

    #[test]
    fn push_round_rejects_out_of_order() {
        let mut s = session_with_round();
        let mut round = s.rounds[0].clone();
        round.number = 1;
        assert!(s.push_round(round).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut s = session_with_round();
        s.apply_selection(&id_of(&s, [0.4, 0.9])).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        let back: Session = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
