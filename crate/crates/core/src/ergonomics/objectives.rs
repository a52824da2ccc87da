use std::f64::consts::PI;

use super::{UserPose, Vec3};
use crate::error::{Error, Result};

/// Positions closer than this to an angle's anchor have no defined direction.
pub const DEGENERACY_RADIUS: f64 = 0.01;

/// Angle between `reference` (unit) and the direction from `anchor` to `p`.
fn angle_from(anchor: Vec3, reference: Vec3, p: Vec3, name: &'static str) -> Result<f64> {
    let offset = p - anchor;
    let dist = offset.norm();
    if dist < DEGENERACY_RADIUS {
        return Err(Error::DegeneratePosition { anchor: name });
    }
    let cos = reference.dot(offset * (1.0 / dist));
    Ok(cos.clamp(-1.0, 1.0).acos())
}

/// Head rotation needed to look at `p` from the neutral line of sight.
pub fn neck_angle(pose: &UserPose, p: Vec3) -> Result<f64> {
    angle_from(pose.head_position, pose.gaze_forward, p, "head")
}

/// Shoulder elevation needed to point the arm at `p` from the resting position.
pub fn arm_angle(pose: &UserPose, p: Vec3) -> Result<f64> {
    angle_from(pose.shoulder_position, pose.arm_rest_direction, p, "shoulder")
}

/// Signed distance beyond arm reach; `<= 0` means reachable.
pub fn reach_violation(pose: &UserPose, p: Vec3) -> f64 {
    p.distance(pose.shoulder_position) - pose.arm_length
}

/// Degenerate positions map to the worst possible angle.
pub(crate) fn or_worst(angle: Result<f64>) -> f64 {
    angle.unwrap_or(PI)
}


/// Where the arm objective reaches zero at full extension.
pub fn arm_extreme_position(pose: &UserPose) -> Vec3 {
    pose.shoulder_position + pose.arm_rest_direction * pose.arm_length
}

/// Farthest reachable point on the neutral line of sight, if the gaze ray
/// meets the reach sphere at all. The neck objective is zero there and the
/// arm objective is as small as it gets along the ray.
pub fn neck_extreme_position(pose: &UserPose) -> Option<Vec3> {
    let d = pose.head_position - pose.shoulder_position;
    let b = pose.gaze_forward.dot(d);
    let disc = b * b - d.dot(d) + pose.arm_length * pose.arm_length;
    if disc < 0.0 {
        return None;
    }
    let t = -b + disc.sqrt();
    (t >= 0.0).then(|| pose.head_position + pose.gaze_forward * t)
}
