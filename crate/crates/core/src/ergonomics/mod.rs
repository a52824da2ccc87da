//! User model, objective functions and the reach constraint.
//!
//! Both objectives are angles in radians in `[0, π]` and are minimized:
//! the neck angle between the neutral gaze and the head-to-element line, and
//! the arm angle between the resting arm and the shoulder-to-element line.
//! A placement is reachable when it lies within `arm_length` of the shoulder.

mod objectives;
mod pose;
mod problem;
mod vec3;

pub use objectives::{
    arm_angle, arm_extreme_position, neck_angle, neck_extreme_position, reach_violation,
    DEGENERACY_RADIUS,
};
pub use pose::{UserPose, UNIT_TOLERANCE};
pub use problem::{
    evaluate, AdaptationProblem, Bounds, Candidate, ObjectiveId, ObjectiveVector,
    PreferenceConstraint,
};
pub use vec3::Vec3;
