//! Real-coded variation operators on 3D positions.

use rand::Rng;

use crate::ergonomics::{Bounds, Vec3};

/// Coordinates closer than this are treated as equal by SBX.
const SBX_MIN_GAP: f64 = 1e-14;

/// Simulated binary crossover.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sbx {
    /// Distribution index; larger keeps children closer to their parents.
    pub eta: f64,
    /// Chance that a pair is recombined at all.
    pub probability: f64,
}

impl Sbx {
    /// Recombines two parents. Each coordinate is crossed with probability
    /// one half; children are clamped to `bounds`.
    pub fn crossover<R: Rng + ?Sized>(
        &self,
        a: Vec3,
        b: Vec3,
        bounds: &Bounds,
        rng: &mut R,
    ) -> (Vec3, Vec3) {
        if !rng.random_bool(self.probability.clamp(0.0, 1.0)) {
            return (a, b);
        }
        let (mut c1, mut c2) = (a.to_array(), b.to_array());
        for k in 0..3 {
            if !rng.random_bool(0.5) || (c1[k] - c2[k]).abs() < SBX_MIN_GAP {
                continue;
            }
            let beta = spread_factor(rng.random::<f64>(), self.eta);
            let (x1, x2) = (c1[k], c2[k]);
            c1[k] = 0.5 * ((1.0 + beta) * x1 + (1.0 - beta) * x2);
            c2[k] = 0.5 * ((1.0 - beta) * x1 + (1.0 + beta) * x2);
        }
        (bounds.clamp(c1.into()), bounds.clamp(c2.into()))
    }
}

/// SBX spread factor for a uniform draw `u` in `[0, 1)`.
fn spread_factor(u: f64, eta: f64) -> f64 {
    let exponent = 1.0 / (eta + 1.0);
    if u <= 0.5 {
        (2.0 * u).powf(exponent)
    } else {
        (1.0 / (2.0 * (1.0 - u))).powf(exponent)
    }
}

/// SBX that always recombines.
pub fn sbx_crossover<R: Rng + ?Sized>(
    parent_a: Vec3,
    parent_b: Vec3,
    eta: f64,
    bounds: &Bounds,
    rng: &mut R,
) -> (Vec3, Vec3) {
    Sbx { eta, probability: 1.0 }.crossover(parent_a, parent_b, bounds, rng)
}

/// Polynomial mutation; each coordinate mutates independently with
/// `probability`, perturbed by a fraction of the box extent, then clamped.
pub fn polynomial_mutation<R: Rng + ?Sized>(
    x: Vec3,
    eta: f64,
    probability: f64,
    bounds: &Bounds,
    rng: &mut R,
) -> Vec3 {
    let extent = bounds.extent().to_array();
    let mut y = x.to_array();
    let exponent = 1.0 / (eta + 1.0);
    for k in 0..3 {
        if !rng.random_bool(probability.clamp(0.0, 1.0)) {
            continue;
        }
        let u: f64 = rng.random();
        let delta = if u < 0.5 {
            (2.0 * u).powf(exponent) - 1.0
        } else {
            1.0 - (2.0 * (1.0 - u)).powf(exponent)
        };
        y[k] += delta * extent[k];
    }
    bounds.clamp(y.into())
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn unit_box() -> Bounds {
        Bounds::new(Vec3::new(-1.0, -1.0, -1.0), Vec3::ONE)
    }

    #[test]
    fn identical_parents_identical_children() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = Vec3::new(0.1, -0.3, 0.7);
        for _ in 0..100 {
            assert_eq!(sbx_crossover(p, p, 30.0, &unit_box(), &mut rng), (p, p));
        }
    }

    #[test]
    fn disabled_crossover_returns_parents() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let sbx = Sbx { eta: 2.0, probability: 0.0 };
        let (a, b) = (Vec3::new(0.1, 0.2, 0.3), Vec3::new(-0.4, 0.5, -0.6));
        assert_eq!(sbx.crossover(a, b, &unit_box(), &mut rng), (a, b));
    }

    #[test]
    fn mean_is_preserved_without_clamping() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let wide = Bounds::new(Vec3::ONE * -1e6, Vec3::ONE * 1e6);
        let (a, b) = (Vec3::new(0.1, 0.2, 0.3), Vec3::new(-0.4, 0.5, -0.6));
        for _ in 0..1000 {
            let (c1, c2) = sbx_crossover(a, b, 2.0, &wide, &mut rng);
            let (m_p, m_c) = ((a + b) * 0.5, (c1 + c2) * 0.5);
            assert!((m_p - m_c).norm() < 1e-12);
        }
    }

    #[test]
    fn children_stay_in_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let bounds = unit_box();
        for _ in 0..2000 {
            let (c1, c2) = sbx_crossover(Vec3::ONE, -Vec3::ONE, 0.5, &bounds, &mut rng);
            assert!(bounds.contains(c1) && bounds.contains(c2));
        }
    }

    /// Mean absolute child offset from the nearer parent on one coordinate.
    fn empirical_spread(eta: f64, samples: usize) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let wide = Bounds::new(Vec3::ONE * -100.0, Vec3::ONE * 100.0);
        let (a, b) = (Vec3::new(-0.5, 0.0, 0.0), Vec3::new(0.5, 0.0, 0.0));
        let mut total = 0.0;
        let mut crossed = 0usize;
        for _ in 0..samples {
            let (c1, _) = sbx_crossover(a, b, eta, &wide, &mut rng);
            if c1.x != a.x {
                total += (c1.x - a.x).abs().min((c1.x - b.x).abs());
                crossed += 1;
            }
        }
        total / crossed as f64
    }

    #[test]
    fn spread_shrinks_as_eta_grows() {
        let loose = empirical_spread(2.0, 10_000);
        let tight = empirical_spread(30.0, 10_000);
        assert!(tight < 0.5 * loose, "eta=30 spread {tight} vs eta=2 spread {loose}");
    }

    #[test]
    fn zero_probability_mutation_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let x = Vec3::new(0.3, -0.2, 0.9);
        for _ in 0..100 {
            assert_eq!(polynomial_mutation(x, 20.0, 0.0, &unit_box(), &mut rng), x);
        }
    }

    #[test]
    fn mutation_of_boundary_point_stays_in_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let bounds = unit_box();
        for _ in 0..2000 {
            let y = polynomial_mutation(Vec3::ONE, 1.0, 1.0, &bounds, &mut rng);
            assert!(bounds.contains(y));
        }
    }

    #[test]
    fn mutation_is_unbiased_in_the_interior() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let bounds = unit_box();
        let n = 10_000;
        let displacements: Vec<Vec3> = (0..n)
            .map(|_| polynomial_mutation(Vec3::ZERO, 20.0, 1.0, &bounds, &mut rng))
            .collect();
        for k in 0..3 {
            let xs: Vec<f64> = displacements.iter().map(|d| d.to_array()[k]).collect();
            let mean = xs.iter().sum::<f64>() / n as f64;
            let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
            let stderr = (var / n as f64).sqrt();
            assert!(mean.abs() < 3.0 * stderr, "axis {k}: mean {mean}, stderr {stderr}");
        }
    }
}
