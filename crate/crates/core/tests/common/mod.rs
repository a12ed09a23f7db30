#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wpm_fre::{generate_instance, GeneratedInstance, WpmParams};

pub const INSTANCES: u64 = 200;

/// Seeded random feasible instance with `m <= 3`, `n <= 4` and operator
/// parameters drawn from `w in [0.05, 0.95]`, `p in [0.5, 6]`.
pub fn small_instance(seed: u64) -> GeneratedInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + seed);
    let m = rng.random_range(1..=3);
    let n = rng.random_range(1..=4);
    let w = rng.random_range(0.05..=0.95);
    let p = rng.random_range(0.5..=6.0);
    generate_instance(m, n, WpmParams::new(w, p).unwrap(), seed)
}

/// Seeded instance with uniformly random `A` and `b`, feasible or not.
pub fn raw_instance(seed: u64, max_rows: usize, max_cols: usize) -> wpm_fre::Problem {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdead_0000 + seed);
    let m = rng.random_range(1..=max_rows);
    let n = rng.random_range(1..=max_cols);
    let w = rng.random_range(0.05..=0.95);
    let p = rng.random_range(0.5..=6.0);
    let a = (0..m)
        .map(|_| (0..n).map(|_| rng.random::<f64>()).collect())
        .collect();
    let b = (0..m).map(|_| rng.random::<f64>()).collect();
    let c = (0..n).map(|_| rng.random_range(-10.0..=10.0)).collect();
    wpm_fre::Problem::new(a, b, c, WpmParams::new(w, p).unwrap()).unwrap()
}

/// Two column values are equivalent if they are within `1e-9` or if no row of
/// `A` can tell them apart through `phi` (flat region of the operator).
pub fn equivalent_coordinate(problem: &wpm_fre::Problem, j: usize, x: f64, y: f64) -> bool {
    if (x - y).abs() <= 1e-9 {
        return true;
    }
    let params = problem.params();
    problem
        .matrix()
        .iter()
        .all(|row| (params.phi(row[j], x) - params.phi(row[j], y)).abs() <= 1e-12)
}

pub fn equivalent_points(problem: &wpm_fre::Problem, x: &[f64], y: &[f64]) -> bool {
    (0..x.len()).all(|j| equivalent_coordinate(problem, j, x[j], y[j]))
}

/// Per-coordinate distance a residual of `tol` can buy: the largest shift of
/// the root of `phi(a_ij, .) = t` as `t` moves from `b_i` to `b_i +/- tol`.
pub fn residual_slack(problem: &wpm_fre::Problem, tol: f64) -> Vec<f64> {
    use wpm_fre::oracle::{entry_root, EntryRoot};
    let params = problem.params();
    let root = |a: f64, t: f64| match entry_root(params, a, t.clamp(0.0, 1.0)) {
        EntryRoot::Overshoots => 0.0,
        EntryRoot::Unreachable => 1.0,
        EntryRoot::At(x) => x,
    };
    (0..problem.cols())
        .map(|j| {
            problem
                .matrix()
                .iter()
                .zip(problem.rhs())
                .map(|(row, &b)| {
                    let mid = root(row[j], b);
                    (root(row[j], b - tol) - mid)
                        .abs()
                        .max((root(row[j], b + tol) - mid).abs())
                })
                .fold(0.0, f64::max)
                + 1e-9
        })
        .collect()
}
