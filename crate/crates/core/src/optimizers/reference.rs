use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unit-sum, non-negative weight vectors spanning the objective simplex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceDirectionSet {
    pub directions: Vec<Vec<f64>>,
}

impl ReferenceDirectionSet {
    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.directions.first().map_or(0, Vec::len)
    }
}

/// `C(objectives + divisions - 1, divisions)`, saturating.
pub fn reference_point_count(objective_count: usize, divisions: usize) -> usize {
    let n = (objective_count + divisions).saturating_sub(1) as u128;
    let k = divisions.min(objective_count.saturating_sub(1)) as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n - i) / (i + 1);
        if c > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    c as usize
}

/// Simplex lattice with step `1/divisions`, in lexicographic order of the
/// leading components.
pub fn das_dennis(objective_count: usize, divisions: usize) -> Result<ReferenceDirectionSet> {
    if objective_count < 2 {
        return Err(Error::validation("objective_count", "must be at least 2"));
    }
    if divisions < 1 {
        return Err(Error::validation("reference_divisions", "must be at least 1"));
    }
    let mut directions = Vec::with_capacity(reference_point_count(objective_count, divisions));
    let mut prefix = Vec::with_capacity(objective_count);
    fill(objective_count, divisions, divisions, &mut prefix, &mut directions);
    Ok(ReferenceDirectionSet { directions })
}

fn fill(
    dims_left: usize,
    remaining: usize,
    divisions: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<f64>>,
) {
    if dims_left == 1 {
        let p = divisions as f64;
        out.push(
            prefix
                .iter()
                .chain(std::iter::once(&remaining))
                .map(|&k| k as f64 / p)
                .collect(),
        );
        return;
    }
    for k in 0..=remaining {
        prefix.push(k);
        fill(dims_left - 1, remaining - k, divisions, prefix, out);
        prefix.pop();
    }
}
