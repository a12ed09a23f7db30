//! Random feasible instances built by forward composition: a hidden point is
//! drawn first and `b` is set to its composition with `A`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::Problem;
use crate::wpm::{row_composition, WpmParams};

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedInstance {
    pub problem: Problem,
    /// A point of the solution set by construction.
    pub hidden: Vec<f64>,
}

/// `A` uniform on `[0,1]`, `c` uniform on `[-10, 10]`, hidden point uniform
/// on `[0,1]^n`. Deterministic in `seed`.
///
/// # Panics
/// If `m` or `n` is zero.
pub fn generate_instance(m: usize, n: usize, params: WpmParams, seed: u64) -> GeneratedInstance {
    assert!(
        m >= 1 && n >= 1,
        "instance needs at least one row and one column"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<Vec<f64>> = (0..m)
        .map(|_| (0..n).map(|_| rng.random::<f64>()).collect())
        .collect();
    let hidden: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    let c: Vec<f64> = (0..n).map(|_| rng.random_range(-10.0..=10.0)).collect();
    let b = a
        .iter()
        .map(|row| {
            row_composition(row, &hidden, &params)
                .expect("row and point have equal length")
                .clamp(0.0, 1.0)
        })
        .collect();
    let problem = Problem::new(a, b, c, params).expect("generated data is in domain");
    GeneratedInstance { problem, hidden }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::problem_feasible;
    use crate::oracle::check_membership;

    #[test]
    fn generated_instances_are_feasible() {
        for seed in 0..50 {
            let params =
                WpmParams::new(0.1 + 0.015 * seed as f64, 0.5 + 0.1 * seed as f64).unwrap();
            let inst =
                generate_instance(1 + seed as usize % 4, 1 + seed as usize % 5, params, seed);
            assert!(
                check_membership(&inst.problem, &inst.hidden, 1e-12)
                    .unwrap()
                    .0
            );
            assert!(problem_feasible(&inst.problem), "seed {seed}");
        }
    }

    #[test]
    fn deterministic() {
        let params = WpmParams::new(0.75, 3.0).unwrap();
        assert_eq!(
            generate_instance(3, 4, params, 7),
            generate_instance(3, 4, params, 7)
        );
        assert_ne!(
            generate_instance(3, 4, params, 7),
            generate_instance(3, 4, params, 8)
        );
    }

    #[test]
    fn one_by_one() {
        let params = WpmParams::new(0.4, 2.0).unwrap();
        let inst = generate_instance(1, 1, params, 3);
        let a = inst.problem.row(0)[0];
        assert_eq!(inst.problem.rhs()[0], params.phi(a, inst.hidden[0]));
    }
}
