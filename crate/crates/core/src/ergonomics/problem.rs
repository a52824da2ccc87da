use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use super::objectives::{arm_angle, neck_angle, or_worst, reach_violation};
use super::{UserPose, Vec3};
use crate::error::{Error, Result};

/// Identifies one objective function. Both are angles in radians, minimized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectiveId {
    NeckAngle,
    ArmAngle,
}

impl ObjectiveId {
    pub fn as_str(self) -> &'static str {
        match self {
            ObjectiveId::NeckAngle => "neck_angle",
            ObjectiveId::ArmAngle => "arm_angle",
        }
    }

    /// Objective value at `p`, with degenerate positions mapped to π.
    pub fn evaluate(self, pose: &UserPose, p: Vec3) -> f64 {
        match self {
            ObjectiveId::NeckAngle => or_worst(neck_angle(pose, p)),
            ObjectiveId::ArmAngle => or_worst(arm_angle(pose, p)),
        }
    }
}

impl fmt::Display for ObjectiveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Objective values in problem order.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjectiveVector(pub Vec<f64>);

impl Deref for ObjectiveVector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for ObjectiveVector {
    fn from(values: Vec<f64>) -> Self {
        Self(values)
    }
}

/// Axis-aligned decision box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: Vec3,
    pub upper: Vec3,
}

impl Bounds {
    pub fn new(lower: Vec3, upper: Vec3) -> Self {
        Self { lower, upper }
    }

    /// The tight box around the reach sphere of `pose`.
    pub fn around_reach(pose: &UserPose) -> Self {
        let r = Vec3::ONE * pose.arm_length;
        Self::new(pose.shoulder_position - r, pose.shoulder_position + r)
    }

    pub fn contains(&self, p: Vec3) -> bool {
        (self.lower.x..=self.upper.x).contains(&p.x)
            && (self.lower.y..=self.upper.y).contains(&p.y)
            && (self.lower.z..=self.upper.z).contains(&p.z)
    }

    pub fn clamp(&self, p: Vec3) -> Vec3 {
        Vec3::new(
            p.x.clamp(self.lower.x, self.upper.x),
            p.y.clamp(self.lower.y, self.upper.y),
            p.z.clamp(self.lower.z, self.upper.z),
        )
    }

    pub fn extent(&self) -> Vec3 {
        self.upper - self.lower
    }

    pub fn lower_array(&self) -> [f64; 3] {
        self.lower.to_array()
    }

    pub fn upper_array(&self) -> [f64; 3] {
        self.upper.to_array()
    }
}

/// Upper bound on one objective, elicited from a user selection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PreferenceConstraint {
    pub objective: ObjectiveId,
    /// Radians.
    pub upper_bound: f64,
}

/// Everything needed to evaluate a placement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdaptationProblem {
    pub pose: UserPose,
    pub bounds: Bounds,
    pub objectives: Vec<ObjectiveId>,
    #[serde(default)]
    pub preference_constraints: Vec<PreferenceConstraint>,
}

impl AdaptationProblem {
    /// Neck and arm angle (in that order) over the reach box of `pose`.
    pub fn new(pose: UserPose) -> Self {
        Self {
            bounds: Bounds::around_reach(&pose),
            pose,
            objectives: vec![ObjectiveId::NeckAngle, ObjectiveId::ArmAngle],
            preference_constraints: Vec::new(),
        }
    }

    pub fn objective_count(&self) -> usize {
        self.objectives.len()
    }

    pub fn objective_index(&self, id: ObjectiveId) -> Option<usize> {
        self.objectives.iter().position(|&o| o == id)
    }

    pub fn validate(&self) -> Result<()> {
        self.pose.validate().map_err(|e| match e {
            Error::Validation { field, message } => Error::validation(format!("pose.{field}"), message),
            other => other,
        })?;
        let (lo, hi) = (self.bounds.lower, self.bounds.upper);
        if !(lo.is_finite() && hi.is_finite() && lo.x <= hi.x && lo.y <= hi.y && lo.z <= hi.z) {
            return Err(Error::validation("bounds", "lower must not exceed upper"));
        }
        if self.objectives.is_empty() {
            return Err(Error::validation("objectives", "at least one objective is required"));
        }
        for (i, o) in self.objectives.iter().enumerate() {
            if self.objectives[..i].contains(o) {
                return Err(Error::validation("objectives", format!("{o} listed twice")));
            }
        }
        for c in &self.preference_constraints {
            if self.objective_index(c.objective).is_none() {
                return Err(Error::validation(
                    "preference_constraints",
                    format!("{} is not an objective of this problem", c.objective),
                ));
            }
            if !c.upper_bound.is_finite() {
                return Err(Error::validation("preference_constraints", "bound must be finite"));
            }
        }
        Ok(())
    }

    /// Evaluates a position without the bounds check.
    pub(crate) fn evaluate_unchecked(&self, p: Vec3) -> Candidate {
        let values: Vec<f64> = self.objectives.iter().map(|o| o.evaluate(&self.pose, p)).collect();
        let preference_violation = self
            .preference_constraints
            .iter()
            .filter_map(|c| {
                self.objective_index(c.objective)
                    .map(|m| values[m] - c.upper_bound)
            })
            .reduce(f64::max)
            .unwrap_or(0.0);
        Candidate {
            position: p,
            objectives: ObjectiveVector(values),
            reach_violation: reach_violation(&self.pose, p),
            preference_violation,
        }
    }
}

/// An evaluated placement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub position: Vec3,
    pub objectives: ObjectiveVector,
    /// Meters beyond reach; `<= 0` is feasible.
    pub reach_violation: f64,
    /// Largest excess over an elicited bound; `<= 0` is feasible.
    pub preference_violation: f64,
}

impl Candidate {
    /// Sum of the positive parts of both violations.
    pub fn total_violation(&self) -> f64 {
        self.reach_violation.max(0.0) + self.preference_violation.max(0.0)
    }

    pub fn is_feasible(&self) -> bool {
        self.total_violation() <= 0.0
    }
}

/// Evaluates the placement `p` against `problem`.
///
/// Fails only when `p` lies outside the decision bounds. Positions inside the
/// degeneracy radius of an anchor get the worst value (π) for that objective.
pub fn evaluate(problem: &AdaptationProblem, p: Vec3) -> Result<Candidate> {
    if !problem.bounds.contains(p) {
        return Err(Error::OutOfBounds { x: p.x, y: p.y, z: p.z });
    }
    Ok(problem.evaluate_unchecked(p))
}
