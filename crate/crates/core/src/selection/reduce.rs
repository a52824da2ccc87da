use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::tradeoff::{infinite_as_null, tradeoff_scores};
use crate::ergonomics::Candidate;
use crate::pareto::{lex_cmp, ParetoFront};

/// Number of candidates shown to the user: one primary and four alternatives.
pub const DEFAULT_REDUCTION_K: usize = 5;

/// A front member kept for presentation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducedCandidate {
    /// Position of the member in the front it was taken from.
    pub front_index: usize,
    pub candidate: Candidate,
    #[serde(with = "infinite_as_null")]
    pub mu: f64,
    /// Minimizes at least one objective over the front.
    pub is_extreme: bool,
    /// Not extreme, and every move along the front loses more than it gains.
    pub is_knee: bool,
}

/// Picks at most `k` qualitatively different members of `front`.
///
/// Per-objective minimizers come first, then the remaining members by
/// decreasing trade-off score. Within each group ties go to the
/// lexicographically smaller objective vector. When `k` is smaller than the
/// number of extremes, the extremes with the larger scores win.
pub fn reduce_front(front: &ParetoFront, k: usize) -> Vec<ReducedCandidate> {
    let scores = tradeoff_scores(front);
    let mut is_extreme = vec![false; front.len()];
    for m in 0..front.objective_count() {
        if let Some(i) = front.minimizer(m) {
            is_extreme[i] = true;
        }
    }

    let members = front.members();
    let mut order: Vec<usize> = (0..front.len()).collect();
    order.sort_by(|&a, &b| {
        is_extreme[b]
            .cmp(&is_extreme[a])
            .then_with(|| scores[b].mu.partial_cmp(&scores[a].mu).unwrap_or(Ordering::Equal))
            .then_with(|| lex_cmp(&members[a].objectives, &members[b].objectives))
            .then(a.cmp(&b))
    });

    order
        .into_iter()
        .take(k)
        .map(|i| ReducedCandidate {
            front_index: i,
            candidate: members[i].clone(),
            mu: scores[i].mu,
            is_extreme: is_extreme[i],
            is_knee: !is_extreme[i] && scores[i].mu > 1.0,
        })
        .collect()
}

/// The reduced candidate with the highest score; ties go to the earlier one.
pub fn auto_pick(reduced: &[ReducedCandidate]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, r) in reduced.iter().enumerate() {
        if best.is_none_or(|b| r.mu > reduced[b].mu) {
            best = Some(i);
        }
    }
    best
}
