//! Property checks on seeded random instances, cross-checked against the
//! brute-force oracle.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wpm_fre::oracle::{
    check_membership, covered_by_cells, exhaustive_candidates, grid_feasible_set, GridSpec,
    DEFAULT_ORACLE_BUDGET,
};
use wpm_fre::{
    classify_all, enumerate_candidates, problem_feasible, simplify_pipeline, solve, Problem,
    SolveOptions, WpmParams, DEFAULT_ENUMERATION_LIMIT, FEASIBILITY_EPS,
};

fn feasible_points(problem: &Problem) -> Vec<Vec<f64>> {
    let mut pts: Vec<Vec<f64>> =
        enumerate_candidates(problem, &classify_all(problem), DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .feasible
            .into_iter()
            .map(|c| c.point)
            .collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts
}

#[test]
fn classification_partitions_and_thresholds() {
    for seed in 0..1000 {
        let problem = common::raw_instance(seed, 4, 5);
        let params = problem.params();
        for cls in classify_all(&problem) {
            let i = cls.row_index;
            let mut all: Vec<usize> = cls
                .j_minus
                .iter()
                .chain(&cls.j_infinity)
                .chain(&cls.j_active)
                .copied()
                .collect();
            all.sort_unstable();
            assert_eq!(all, (0..problem.cols()).collect::<Vec<_>>(), "seed {seed}");

            let b = problem.rhs()[i];
            for &j in &cls.j_minus {
                assert!(params.phi(problem.row(i)[j], 0.0) > b, "seed {seed}");
            }
            for &j in &cls.j_infinity {
                let a = problem.row(i)[j];
                let top = (0..=1000)
                    .map(|k| params.phi(a, k as f64 / 1000.0))
                    .fold(0.0, f64::max);
                assert!(top < b, "seed {seed}");
            }
        }
    }
}

#[test]
fn feasibility_agrees_with_oracle() {
    let mut infeasible = 0;
    for seed in 0..400 {
        let problem = if seed % 2 == 0 {
            common::small_instance(seed).problem
        } else {
            common::raw_instance(seed, 3, 4)
        };
        let oracle = exhaustive_candidates(&problem, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(problem_feasible(&problem), oracle.feasible(), "seed {seed}");
        infeasible += usize::from(!oracle.feasible());
    }
    assert!(infeasible > 50, "too few infeasible samples: {infeasible}");
}

#[test]
fn candidates_match_oracle() {
    for seed in 0..200 {
        let problem = common::small_instance(seed).problem;
        let set =
            enumerate_candidates(&problem, &classify_all(&problem), DEFAULT_ENUMERATION_LIMIT)
                .unwrap();
        let oracle = exhaustive_candidates(&problem, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(set.all.len(), oracle.candidates.len(), "seed {seed}");
        assert!(common::equivalent_points(
            &problem,
            &set.x_max,
            oracle.x_max.as_ref().unwrap()
        ));
        for (ours, theirs) in set.all.iter().zip(&oracle.candidates) {
            assert_eq!(ours.e, theirs.e, "seed {seed}");
            assert!(
                common::equivalent_points(&problem, &ours.point, &theirs.point),
                "seed {seed}"
            );
        }
        let ours: Vec<_> = set.feasible.iter().map(|c| &c.point).collect();
        for p in oracle.feasible_points() {
            assert!(
                ours.iter()
                    .any(|q| common::equivalent_points(&problem, q, &p)),
                "seed {seed}"
            );
        }
    }
}

#[test]
fn cells_are_inside_the_solution_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..200 {
        let problem = common::small_instance(seed).problem;
        let set =
            enumerate_candidates(&problem, &classify_all(&problem), DEFAULT_ENUMERATION_LIMIT)
                .unwrap();
        assert!(
            check_membership(&problem, &set.x_max, FEASIBILITY_EPS)
                .unwrap()
                .0
        );
        for cand in &set.feasible {
            assert!(
                check_membership(&problem, &cand.point, FEASIBILITY_EPS)
                    .unwrap()
                    .0
            );
            for _ in 0..100 {
                let x: Vec<f64> = cand
                    .point
                    .iter()
                    .zip(&set.x_max)
                    .map(|(&lo, &hi)| {
                        if hi > lo {
                            rng.random_range(lo..=hi)
                        } else {
                            hi.max(lo).min(1.0)
                        }
                    })
                    .collect();
                assert!(
                    check_membership(&problem, &x, FEASIBILITY_EPS).unwrap().0,
                    "seed {seed}"
                );
            }
        }
    }
}

#[test]
fn grid_solutions_are_covered_by_cells() {
    let tol = 1e-3;
    for seed in 0..60 {
        let problem = common::small_instance(seed).problem;
        let per_axis = if problem.cols() <= 3 { 51 } else { 21 };
        let points = grid_feasible_set(&problem, &GridSpec::new(per_axis, tol)).unwrap();
        let cells = exhaustive_candidates(&problem, DEFAULT_ORACLE_BUDGET).unwrap();
        let slack = common::residual_slack(&problem, tol);
        for x in &points {
            assert!(
                covered_by_cells(x, &cells, &slack),
                "seed {seed}: {x:?} slack {slack:?}"
            );
        }
    }
}

#[test]
fn simplification_preserves_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for seed in 0..200 {
        let problem = common::small_instance(seed).problem;
        let (simplified, log) = simplify_pipeline(&problem, false).unwrap();
        assert!(log.choices_after <= log.choices_before);

        let before = classify_all(&problem);
        let after = classify_all(&simplified);
        for (b, a) in before.iter().zip(&after) {
            assert!(
                a.j_active.iter().all(|j| b.j_active.contains(j)),
                "seed {seed}"
            );
        }

        let (p0, p1) = (feasible_points(&problem), feasible_points(&simplified));
        assert_eq!(p0.len(), p1.len(), "seed {seed}");
        for (x, y) in p0.iter().zip(&p1) {
            assert!(
                x.iter().zip(y).all(|(a, b)| (a - b).abs() <= 1e-9),
                "seed {seed}"
            );
        }

        let x0 = enumerate_candidates(&problem, &before, DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .x_max;
        let x1 = enumerate_candidates(&simplified, &after, DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .x_max;
        assert!(
            x0.iter().zip(&x1).all(|(a, b)| (a - b).abs() <= 1e-12),
            "seed {seed}"
        );

        for _ in 0..1000 {
            let x: Vec<f64> = (0..problem.cols()).map(|_| rng.random::<f64>()).collect();
            assert_eq!(
                check_membership(&problem, &x, FEASIBILITY_EPS).unwrap().0,
                check_membership(&simplified, &x, FEASIBILITY_EPS)
                    .unwrap()
                    .0,
                "seed {seed}"
            );
        }
    }
}

#[test]
fn optimum_beats_every_cell_corner() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for seed in 0..200 {
        let problem = common::small_instance(seed).problem;
        let report = solve(&problem, &SolveOptions::default()).unwrap();
        let plain = solve(
            &problem,
            &SolveOptions {
                simplify: false,
                ..Default::default()
            },
        )
        .unwrap();
        let z = report.z_star.unwrap();
        assert!((z - plain.z_star.unwrap()).abs() <= 1e-9, "seed {seed}");
        assert!(
            check_membership(&problem, report.x_star.as_ref().unwrap(), FEASIBILITY_EPS)
                .unwrap()
                .0
        );

        let x_max = report.x_max.unwrap();
        for cand in plain.candidates.iter().filter(|c| c.feasible) {
            let corner: Vec<f64> = (0..problem.cols())
                .map(|j| {
                    if problem.cost()[j] < 0.0 {
                        x_max[j]
                    } else {
                        cand.point[j]
                    }
                })
                .collect();
            assert!(z <= problem.objective(&corner) + 1e-9, "seed {seed}");
            // the sign-selected corner is the best point of its cell
            let corner_value = problem.objective(&corner);
            for _ in 0..100 {
                let x: Vec<f64> = cand
                    .point
                    .iter()
                    .zip(&x_max)
                    .map(|(&lo, &hi)| {
                        if hi > lo {
                            rng.random_range(lo..=hi)
                        } else {
                            hi
                        }
                    })
                    .collect();
                assert!(corner_value <= problem.objective(&x) + 1e-9, "seed {seed}");
            }
        }
    }
}

#[test]
fn minimal_and_maximal_at_reference_operator() {
    // With w = 0.75 and p = 3 a 1e-3 step is resolvable in double precision,
    // so a residual above 1e-12 marks a violated equality.
    let params = WpmParams::new(0.75, 3.0).unwrap();
    for seed in 0..200 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, n) = (rng.random_range(1..=3), rng.random_range(1..=4));
        let problem = wpm_fre::generate_instance(m, n, params, seed).problem;
        let set =
            enumerate_candidates(&problem, &classify_all(&problem), DEFAULT_ENUMERATION_LIMIT)
                .unwrap();
        let violated = |x: &[f64]| !check_membership(&problem, x, 1e-12).unwrap().0;

        for j in 0..n {
            if set.x_max[j] < 1.0 {
                let mut x = set.x_max.clone();
                x[j] = (x[j] + 1e-3).min(1.0);
                assert!(violated(&x), "seed {seed} column {j}");
            }
        }
        let dominated = |p: &[f64]| {
            set.feasible
                .iter()
                .any(|q| q.point != p && q.point.iter().zip(p).all(|(a, b)| *a <= b + 1e-9))
        };
        for cand in set.feasible.iter().filter(|c| !dominated(&c.point)) {
            for j in (0..n).filter(|&j| cand.point[j] > 0.0) {
                let mut x = cand.point.clone();
                x[j] = (x[j] - 1e-3).max(0.0);
                assert!(violated(&x), "seed {seed} {:?} column {j}", cand.e);
            }
        }
    }
}
