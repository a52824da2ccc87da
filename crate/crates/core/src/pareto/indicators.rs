use super::front::ParetoFront;
use crate::error::{Error, Result};

/// Inverted generational distance of `approximation` with respect to
/// `reference`.
///
/// Mean, over reference members, of the Euclidean distance to the nearest
/// approximation member. Objectives are scaled by the reference front's
/// ranges first (constant objectives by 1).
pub fn igd(approximation: &ParetoFront, reference: &ParetoFront) -> Result<f64> {
    if approximation.is_empty() {
        return Err(Error::EmptyInput("approximation front"));
    }
    if reference.is_empty() {
        return Err(Error::EmptyInput("reference front"));
    }
    if approximation.objective_count() != reference.objective_count() {
        return Err(Error::IncompatibleCandidates {
            left: approximation.objective_count(),
            right: reference.objective_count(),
        });
    }
    let widths = reference.normalization_widths();
    let total: f64 = reference
        .members()
        .iter()
        .map(|r| {
            approximation
                .members()
                .iter()
                .map(|a| {
                    a.objectives
                        .iter()
                        .zip(r.objectives.iter())
                        .zip(&widths)
                        .map(|((x, y), w)| ((x - y) / w).powi(2))
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    Ok(total / reference.len() as f64)
}
