use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::Nsga3Config;
use super::reference::{das_dennis, ReferenceDirectionSet};
use super::variation::{polynomial_mutation, Sbx};
use crate::ergonomics::{AdaptationProblem, Candidate, Vec3};
use crate::error::{Error, Result};
use crate::pareto::{non_dominated_sort, pareto_filter, ParetoFront};

/// Intercepts at or below this are considered degenerate.
const MIN_INTERCEPT: f64 = 1e-6;
/// Off-axis weight of the achievement scalarizing function.
const ASF_EPSILON: f64 = 1e-6;

/// Reported once per completed generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progress {
    pub generation: usize,
    pub generations: usize,
    /// Size of the first non-domination rank of the merged population.
    pub rank0_size: usize,
}

/// Runs NSGA-III and returns the feasible first rank of the final population.
pub fn nsga3_run(problem: &AdaptationProblem, config: &Nsga3Config) -> Result<ParetoFront> {
    nsga3_run_observed(problem, config, |_| {})
}

/// [`nsga3_run`] with a callback after every generation.
pub fn nsga3_run_observed<F>(
    problem: &AdaptationProblem,
    config: &Nsga3Config,
    mut observe: F,
) -> Result<ParetoFront>
where
    F: FnMut(Progress),
{
    problem.validate()?;
    config.validate(problem.objective_count())?;
    let references = das_dennis(problem.objective_count(), config.reference_divisions)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.population_size;

    let initial: Vec<Vec3> = (0..n)
        .map(|_| {
            let (lo, hi) = (problem.bounds.lower, problem.bounds.upper);
            Vec3::new(
                sample(&mut rng, lo.x, hi.x),
                sample(&mut rng, lo.y, hi.y),
                sample(&mut rng, lo.z, hi.z),
            )
        })
        .collect();
    let mut population = evaluate_all(problem, &initial);

    let sbx = Sbx {
        eta: config.sbx_eta,
        probability: config.sbx_probability,
    };
    for generation in 1..=config.generations {
        let children = offspring(&population, problem, &sbx, config, &mut rng);
        let mut merged = population;
        merged.extend(evaluate_all(problem, &children));
        let (survivors, rank0_size) = survive(merged, n, &references, &mut rng)?;
        population = survivors;
        observe(Progress {
            generation,
            generations: config.generations,
            rank0_size,
        });
    }

    let feasible: Vec<Candidate> = population.into_iter().filter(Candidate::is_feasible).collect();
    if feasible.is_empty() {
        return Err(Error::Infeasible(
            "final population contains no feasible placement".into(),
        ));
    }
    pareto_filter(&feasible)
}

fn sample(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    if hi > lo {
        rng.random_range(lo..=hi)
    } else {
        lo
    }
}

/// Order-preserving parallel evaluation; results do not depend on the thread
/// count.
fn evaluate_all(problem: &AdaptationProblem, positions: &[Vec3]) -> Vec<Candidate> {
    positions
        .par_iter()
        .map(|&p| problem.evaluate_unchecked(p))
        .collect()
}

/// Binary tournament on feasibility and violation, otherwise a coin flip.
fn tournament<'a>(population: &'a [Candidate], rng: &mut ChaCha8Rng) -> &'a Candidate {
    let a = &population[rng.random_range(0..population.len())];
    let b = &population[rng.random_range(0..population.len())];
    let (va, vb) = (a.total_violation(), b.total_violation());
    if va < vb {
        a
    } else if vb < va {
        b
    } else if rng.random_bool(0.5) {
        a
    } else {
        b
    }
}

fn offspring(
    population: &[Candidate],
    problem: &AdaptationProblem,
    sbx: &Sbx,
    config: &Nsga3Config,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec3> {
    let n = population.len();
    let mut children = Vec::with_capacity(n + 1);
    while children.len() < n {
        let a = tournament(population, rng).position;
        let b = tournament(population, rng).position;
        let (c1, c2) = sbx.crossover(a, b, &problem.bounds, rng);
        for c in [c1, c2] {
            children.push(polynomial_mutation(
                c,
                config.mutation_eta,
                config.mutation_probability,
                &problem.bounds,
                rng,
            ));
        }
    }
    children.truncate(n);
    children
}

/// Environmental selection: whole ranks while they fit, then reference-point
/// niching on the rank that overflows. Returns the survivors and the size of
/// the merged population's first rank.
fn survive(
    merged: Vec<Candidate>,
    n: usize,
    references: &ReferenceDirectionSet,
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<Candidate>, usize)> {
    let ranked = non_dominated_sort(&merged)?;
    let rank0_size = ranked.fronts[0].len();

    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut last: Vec<usize> = Vec::new();
    for front in &ranked.fronts {
        if chosen.len() + front.len() <= n {
            chosen.extend(front);
            if chosen.len() == n {
                break;
            }
        } else {
            last = front.clone();
            break;
        }
    }

    if !last.is_empty() {
        let pool: Vec<usize> = chosen.iter().chain(&last).copied().collect();
        let normalized = normalize(&merged, &pool, &ranked.fronts[0]);
        let (niche, distance) = associate(&normalized, references);
        // `niche`/`distance` are indexed by position in `pool`.
        let mut counts = vec![0usize; references.len()];
        for k in 0..chosen.len() {
            counts[niche[k]] += 1;
        }
        let mut open: Vec<usize> = (chosen.len()..pool.len()).collect();
        let mut excluded = vec![false; references.len()];
        while chosen.len() < n {
            let Some(min_count) = (0..counts.len()).filter(|&j| !excluded[j]).map(|j| counts[j]).min() else {
                break;
            };
            let least: Vec<usize> = (0..counts.len())
                .filter(|&j| !excluded[j] && counts[j] == min_count)
                .collect();
            let j = *least.choose(rng).expect("non-empty");
            let members: Vec<usize> = open.iter().copied().filter(|&k| niche[k] == j).collect();
            if members.is_empty() {
                excluded[j] = true;
                continue;
            }
            let pick = if counts[j] == 0 {
                *members
                    .iter()
                    .min_by(|&&a, &&b| distance[a].total_cmp(&distance[b]).then(a.cmp(&b)))
                    .expect("non-empty")
            } else {
                *members.choose(rng).expect("non-empty")
            };
            open.retain(|&k| k != pick);
            chosen.push(pool[pick]);
            counts[j] += 1;
        }
    }

    let mut keep = vec![false; merged.len()];
    for &i in &chosen {
        keep[i] = true;
    }
    let survivors = merged
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();
    Ok((survivors, rank0_size))
}

/// Translates `pool` members by the ideal point and scales them by the
/// hyperplane intercepts through the extreme points. Returns one normalized
/// vector per pool entry.
fn normalize(merged: &[Candidate], pool: &[usize], first_rank: &[usize]) -> Vec<Vec<f64>> {
    let m = merged[0].objectives.len();

    // Ideal and extremes come from feasible members when there are any, so
    // placements beyond reach do not stretch the scaling.
    let feasible: Vec<usize> = (0..merged.len()).filter(|&i| merged[i].is_feasible()).collect();
    let ideal_source: Vec<usize> = if feasible.is_empty() { (0..merged.len()).collect() } else { feasible };
    let mut ideal = vec![f64::INFINITY; m];
    for &i in &ideal_source {
        for (z, &f) in ideal.iter_mut().zip(merged[i].objectives.iter()) {
            *z = z.min(f);
        }
    }
    let translated = |i: usize| -> Vec<f64> {
        merged[i].objectives.iter().zip(&ideal).map(|(f, z)| f - z).collect()
    };

    let feasible_pool: Vec<usize> = pool.iter().copied().filter(|&i| merged[i].is_feasible()).collect();
    let extreme_source: &[usize] = if feasible_pool.is_empty() { pool } else { &feasible_pool };

    let extremes: Vec<Vec<f64>> = (0..m)
        .map(|axis| {
            let asf = |i: usize| {
                translated(i)
                    .iter()
                    .enumerate()
                    .map(|(k, &f)| f / if k == axis { 1.0 } else { ASF_EPSILON })
                    .fold(f64::NEG_INFINITY, f64::max)
            };
            let best = extreme_source
                .iter()
                .copied()
                .min_by(|&a, &b| asf(a).total_cmp(&asf(b)).then(a.cmp(&b)))
                .expect("non-empty pool");
            translated(best)
        })
        .collect();

    let intercepts = hyperplane_intercepts(&extremes)
        .filter(|a| a.iter().all(|&x| x.is_finite() && x > MIN_INTERCEPT))
        .unwrap_or_else(|| {
            let worst = |members: &[usize]| -> Vec<f64> {
                let mut w = vec![0.0f64; m];
                for &i in members {
                    for (wk, f) in w.iter_mut().zip(translated(i)) {
                        *wk = wk.max(f);
                    }
                }
                w
            };
            let rank0_worst = worst(first_rank);
            let pool_worst = worst(pool);
            rank0_worst
                .into_iter()
                .zip(pool_worst)
                .map(|(a, b)| {
                    if a > MIN_INTERCEPT {
                        a
                    } else if b > MIN_INTERCEPT {
                        b
                    } else {
                        1.0
                    }
                })
                .collect()
        });

    pool.iter()
        .map(|&i| translated(i).iter().zip(&intercepts).map(|(f, a)| f / a).collect())
        .collect()
}

/// Intercepts of the hyperplane through the rows of `points`, or `None` when
/// the points are (nearly) linearly dependent.
fn hyperplane_intercepts(points: &[Vec<f64>]) -> Option<Vec<f64>> {
    let m = points.len();
    // Solve points · b = 1; intercept k is 1 / b[k].
    let mut a: Vec<Vec<f64>> = points
        .iter()
        .map(|row| row.iter().copied().chain(std::iter::once(1.0)).collect())
        .collect();
    for col in 0..m {
        let pivot = (col..m).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))?;
        if a[pivot][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, pivot);
        for r in 0..m {
            if r != col {
                let factor = a[r][col] / a[col][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= factor * p;
                }
            }
        }
    }
    Some((0..m).map(|k| a[k][k] / a[k][m]).collect())
}

/// Nearest reference direction (perpendicular distance) for every point.
fn associate(points: &[Vec<f64>], references: &ReferenceDirectionSet) -> (Vec<usize>, Vec<f64>) {
    let norms: Vec<f64> = references
        .directions
        .iter()
        .map(|w| w.iter().map(|x| x * x).sum::<f64>())
        .collect();
    points
        .iter()
        .map(|s| {
            let mut best = (0usize, f64::INFINITY);
            for (j, w) in references.directions.iter().enumerate() {
                let t = s.iter().zip(w).map(|(a, b)| a * b).sum::<f64>() / norms[j];
                let d2: f64 = s.iter().zip(w).map(|(a, b)| (a - t * b).powi(2)).sum();
                if d2 < best.1 {
                    best = (j, d2);
                }
            }
            (best.0, best.1.sqrt())
        })
        .unzip()
}
