use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pareto::ParetoFront;

/// How strongly a front member resists trading itself for any other member.
///
/// For members `i` and `j`, let the gain be what `i` saves relative to `j`
/// summed over objectives where `i` is better, and the loss the same sum where
/// `i` is worse, both on range-normalized objectives. `mu(i)` is the smallest
/// gain/loss ratio over all `j` with a non-zero loss. Values above 1 mark
/// knees: moving anywhere along the front gives up more than it wins.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TradeoffScore {
    pub index: usize,
    /// `+∞` when no other member has a finite ratio (e.g. a singleton front).
    #[serde(with = "infinite_as_null")]
    pub mu: f64,
}

pub fn tradeoff_mu(front: &ParetoFront, i: usize) -> Result<TradeoffScore> {
    if i >= front.len() {
        return Err(Error::IndexOutOfRange { index: i, len: front.len() });
    }
    let widths = front.normalization_widths();
    Ok(score(front, &widths, i))
}

/// [`tradeoff_mu`] for every member, in front order.
pub fn tradeoff_scores(front: &ParetoFront) -> Vec<TradeoffScore> {
    let widths = front.normalization_widths();
    (0..front.len()).map(|i| score(front, &widths, i)).collect()
}

fn score(front: &ParetoFront, widths: &[f64], i: usize) -> TradeoffScore {
    let members = front.members();
    let fi = &members[i].objectives;
    let mut mu = f64::INFINITY;
    for (j, other) in members.iter().enumerate() {
        if j == i {
            continue;
        }
        let (mut gain, mut loss) = (0.0, 0.0);
        for ((a, b), w) in fi.iter().zip(other.objectives.iter()).zip(widths) {
            let d = (b - a) / w;
            if d > 0.0 {
                gain += d;
            } else {
                loss -= d;
            }
        }
        if loss > 0.0 {
            mu = mu.min(gain / loss);
        }
    }
    TradeoffScore { index: i, mu }
}

/// Serializes non-finite values as JSON `null` and reads `null` back as `+∞`.
pub(crate) mod infinite_as_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pareto::test_support::cand;

    fn bulge() -> ParetoFront {
        ParetoFront::from_members(vec![cand(&[0.0, 1.0]), cand(&[0.3, 0.3]), cand(&[1.0, 0.0])])
    }

    #[test]
    fn bulge_front_values() {
        let front = bulge();
        assert!((tradeoff_mu(&front, 1).unwrap().mu - 0.7 / 0.3).abs() < 1e-12);
        assert!((tradeoff_mu(&front, 0).unwrap().mu - 0.3 / 0.7).abs() < 1e-12);
        assert!((tradeoff_mu(&front, 2).unwrap().mu - 0.3 / 0.7).abs() < 1e-12);
    }

    #[test]
    fn singleton_is_infinite() {
        let front = ParetoFront::from_members(vec![cand(&[0.2, 0.2])]);
        assert_eq!(tradeoff_mu(&front, 0).unwrap().mu, f64::INFINITY);
    }

    #[test]
    fn out_of_range_index() {
        assert!(matches!(tradeoff_mu(&bulge(), 3), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
    }

    #[test]
    fn duplicates_are_skipped() {
        let front = ParetoFront::from_members(vec![cand(&[0.5, 0.5]), cand(&[0.5, 0.5])]);
        assert_eq!(tradeoff_scores(&front)[0].mu, f64::INFINITY);
    }

    #[test]
    fn rescaling_an_objective_leaves_mu_unchanged() {
        let scaled = ParetoFront::from_members(vec![cand(&[0.0, 7.0]), cand(&[0.3, 2.1]), cand(&[1.0, 0.0])]);
        for (a, b) in tradeoff_scores(&bulge()).iter().zip(tradeoff_scores(&scaled)) {
            assert!((a.mu - b.mu).abs() < 1e-12);
        }
    }

    #[test]
    fn infinite_mu_round_trips_as_null() {
        let s = TradeoffScore { index: 0, mu: f64::INFINITY };
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"index":0,"mu":null}"#);
        assert_eq!(serde_json::from_str::<TradeoffScore>(&json).unwrap(), s);
    }
}
