//! Request and response bodies.

use paretoplace_core::ergonomics::ObjectiveId;
use paretoplace_core::selection::{Round, RoundCandidate, SessionSettings};
use paretoplace_core::{Candidate, PreferenceConstraint, Session, UserPose, Vec3};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CreateSessionRequest {
    #[serde(default)]
    pub pose: UserPose,
    #[serde(default)]
    pub config: SessionSettings,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelectRequest {
    pub candidate_id: String,
}

fn degrees(values: &[f64]) -> Vec<f64> {
    values.iter().map(|v| v.to_degrees()).collect()
}

/// A front member with objectives in radians and degrees.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointView {
    pub position: Vec3,
    pub objectives: Vec<f64>,
    pub objectives_deg: Vec<f64>,
}

impl From<&Candidate> for PointView {
    fn from(c: &Candidate) -> Self {
        Self {
            position: c.position,
            objectives: c.objectives.0.clone(),
            objectives_deg: degrees(&c.objectives),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateView {
    pub id: String,
    #[serde(flatten)]
    pub point: PointView,
    /// `None` when no other member trades against this one.
    pub mu: Option<f64>,
    pub is_extreme: bool,
    pub is_knee: bool,
}

impl From<&RoundCandidate> for CandidateView {
    fn from(c: &RoundCandidate) -> Self {
        Self {
            id: c.id.clone(),
            point: PointView::from(&c.reduced.candidate),
            mu: c.reduced.mu.is_finite().then_some(c.reduced.mu),
            is_extreme: c.reduced.is_extreme,
            is_knee: c.reduced.is_knee,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrontSummary {
    pub size: usize,
    /// `(min, max)` per objective, radians.
    pub ranges: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdaptResponse {
    pub round: usize,
    pub objectives: Vec<ObjectiveId>,
    pub candidates: Vec<CandidateView>,
    pub front: FrontSummary,
    pub auto_pick: Option<String>,
}

impl AdaptResponse {
    pub fn new(objectives: &[ObjectiveId], round: &Round) -> Self {
        Self {
            round: round.number,
            objectives: objectives.to_vec(),
            candidates: round.candidates.iter().map(CandidateView::from).collect(),
            front: FrontSummary {
                size: round.front.len(),
                ranges: round.front.ranges().to_vec(),
            },
            auto_pick: round.auto_pick.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrontResponse {
    /// 0 before the first adaptation.
    pub round: usize,
    pub objectives: Vec<ObjectiveId>,
    pub members: Vec<PointView>,
    pub candidate_ids: Vec<String>,
    pub constraints: Vec<PreferenceConstraint>,
}

impl FrontResponse {
    pub fn new(session: &Session) -> Self {
        let objectives = session.problem.objectives.clone();
        let constraints = session.constraints.clone();
        match session.latest_round() {
            Some(r) => Self {
                round: r.number,
                objectives,
                members: r.front.members().iter().map(PointView::from).collect(),
                candidate_ids: r.candidates.iter().map(|c| c.id.clone()).collect(),
                constraints,
            },
            None => Self {
                round: 0,
                objectives,
                members: Vec::new(),
                candidate_ids: Vec::new(),
                constraints,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectResponse {
    pub round: usize,
    pub selection: String,
    pub constraints: Vec<PreferenceConstraint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    pub pose: UserPose,
    pub config: SessionSettings,
    pub rounds: usize,
    pub constraints: Vec<PreferenceConstraint>,
    pub selections: Vec<Option<String>>,
    pub latest: Option<AdaptResponse>,
}

impl From<&Session> for SessionView {
    fn from(s: &Session) -> Self {
        Self {
            id: s.id.clone(),
            pose: s.pose,
            config: s.settings.clone(),
            rounds: s.rounds.len(),
            constraints: s.constraints.clone(),
            selections: s.rounds.iter().map(|r| r.selection.clone()).collect(),
            latest: s
                .latest_round()
                .map(|r| AdaptResponse::new(&s.problem.objectives, r)),
        }
    }
}

/// Pushed on the per-session event stream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SessionEvent {
    Progress {
        round: usize,
        generation: usize,
        generations: usize,
        rank0_size: usize,
    },
    Round {
        round: usize,
    },
    Selection {
        round: usize,
        candidate_id: String,
    },
}

impl SessionEvent {
    pub fn name(&self) -> &'static str {
        match self {
            SessionEvent::Progress { .. } => "progress",
            SessionEvent::Round { .. } => "round",
            SessionEvent::Selection { .. } => "selection",
        }
    }
}
