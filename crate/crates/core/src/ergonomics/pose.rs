use serde::{Deserialize, Serialize};

use super::Vec3;
use crate::error::{Error, Result};

/// Allowed deviation from unit length for direction vectors.
pub const UNIT_TOLERANCE: f64 = 1e-9;

/// Anthropometric frame of the (standing) user.
///
/// The arm objective and reach constraint refer to the right shoulder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UserPose {
    /// Eye/head anchor in meters.
    pub head_position: Vec3,
    /// Neutral line of sight, unit length.
    pub gaze_forward: Vec3,
    pub shoulder_position: Vec3,
    /// Direction of the relaxed, hanging arm, unit length.
    pub arm_rest_direction: Vec3,
    /// Reach radius around the shoulder in meters.
    pub arm_length: f64,
}

impl Default for UserPose {
    /// A standing adult: eyes at 1.70 m looking along +z, right shoulder
    /// 0.20 m to the side and 0.25 m below the eyes, 0.65 m reach.
    fn default() -> Self {
        Self {
            head_position: Vec3::new(0.0, 1.70, 0.0),
            gaze_forward: Vec3::new(0.0, 0.0, 1.0),
            shoulder_position: Vec3::new(0.20, 1.45, 0.0),
            arm_rest_direction: Vec3::new(0.0, -1.0, 0.0),
            arm_length: 0.65,
        }
    }
}

impl UserPose {
    /// Checks the pose invariants, naming the first offending field.
    pub fn validate(&self) -> Result<()> {
        for (field, v) in [
            ("head_position", self.head_position),
            ("shoulder_position", self.shoulder_position),
        ] {
            if !v.is_finite() {
                return Err(Error::validation(field, "must be finite"));
            }
        }
        for (field, v) in [
            ("gaze_forward", self.gaze_forward),
            ("arm_rest_direction", self.arm_rest_direction),
        ] {
            if !v.is_finite() || (v.norm() - 1.0).abs() > UNIT_TOLERANCE {
                return Err(Error::validation(field, "must be a unit vector"));
            }
        }
        if !(self.arm_length.is_finite() && self.arm_length > 0.0) {
            return Err(Error::validation("arm_length", "must be positive"));
        }
        if self.head_position == self.shoulder_position {
            return Err(Error::validation(
                "shoulder_position",
                "must differ from head_position",
            ));
        }
        Ok(())
    }

    /// Moves the whole frame by `offset`.
    pub fn translated(&self, offset: Vec3) -> Self {
        Self {
            head_position: self.head_position + offset,
            shoulder_position: self.shoulder_position + offset,
            ..*self
        }
    }
}
