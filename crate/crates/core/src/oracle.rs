//! Brute-force reference engine for small instances.
//!
//! Nothing here uses the closed-form thresholds or inverses of the solver:
//! per-entry equations `phi(a, x) = b` are solved by bisection, the choice
//! space is walked recursively, and the feasible set is sampled on a grid.
//! Only `phi` itself is shared.

use crate::error::{FreError, Result};
use crate::lattice::{CandidateMinimal, ChoiceVector};
use crate::model::Problem;
use crate::wpm::WpmParams;

/// Default cap on grid evaluations and on oracle enumeration.
pub const DEFAULT_ORACLE_BUDGET: u128 = 10_000_000;

/// Tolerance, in `b` units, for deciding whether an entry can reach `b`.
const REACH_EPS: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub points_per_axis: usize,
    pub residual_tolerance: f64,
    pub max_evaluations: u128,
}

impl GridSpec {
    pub fn new(points_per_axis: usize, residual_tolerance: f64) -> Self {
        GridSpec {
            points_per_axis,
            residual_tolerance,
            max_evaluations: DEFAULT_ORACLE_BUDGET,
        }
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::new(21, 1e-3)
    }
}

/// Residuals `|max_j phi(a_ij, x_j) - b_i|` and whether all are within `tol`.
pub fn check_membership(problem: &Problem, x: &[f64], tol: f64) -> Result<(bool, Vec<f64>)> {
    if x.len() != problem.cols() {
        return Err(FreError::Dimension(format!(
            "point has {} entries, expected {}",
            x.len(),
            problem.cols()
        )));
    }
    if let Some(j) = x.iter().position(|v| !(0.0..=1.0).contains(v)) {
        return Err(FreError::Domain {
            field: format!("x[{j}]"),
            detail: format!("{} is not in [0, 1]", x[j]),
        });
    }
    let params = problem.params();
    let mut residuals = Vec::with_capacity(problem.rows());
    for (row, &b) in problem.matrix().iter().zip(problem.rhs()) {
        let mut best = f64::NEG_INFINITY;
        for (&a, &xj) in row.iter().zip(x) {
            best = best.max(params.phi(a, xj));
        }
        residuals.push((best - b).abs());
    }
    Ok((residuals.iter().all(|&r| r <= tol), residuals))
}

/// Every point of the regular grid on `[0,1]^n` whose residuals are within
/// the grid's residual tolerance, in lexicographic grid order.
pub fn grid_feasible_set(problem: &Problem, spec: &GridSpec) -> Result<Vec<Vec<f64>>> {
    if spec.points_per_axis < 2 {
        return Err(FreError::Parse(
            "grid needs at least 2 points per axis".into(),
        ));
    }
    let n = problem.cols();
    let required = (spec.points_per_axis as u128).saturating_pow(n as u32);
    if required > spec.max_evaluations {
        return Err(FreError::OracleBudget {
            required,
            limit: spec.max_evaluations,
        });
    }
    let step = 1.0 / (spec.points_per_axis - 1) as f64;
    let mut idx = vec![0usize; n];
    let mut x = vec![0.0; n];
    let mut out = Vec::new();
    loop {
        for (xj, &k) in x.iter_mut().zip(&idx) {
            *xj = (k as f64 * step).min(1.0);
        }
        if check_membership(problem, &x, spec.residual_tolerance)?.0 {
            out.push(x.clone());
        }
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < spec.points_per_axis {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Outcome of solving `phi(a, x) = b` for `x` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntryRoot {
    /// `phi(a, 0) > b`: the entry alone already overshoots.
    Overshoots,
    /// `phi(a, 1) < b`: the entry can never reach `b`.
    Unreachable,
    At(f64),
}

pub fn entry_root(params: &WpmParams, a: f64, b: f64) -> EntryRoot {
    if params.phi(a, 0.0) > b + REACH_EPS {
        return EntryRoot::Overshoots;
    }
    if params.phi(a, 1.0) < b - REACH_EPS {
        return EntryRoot::Unreachable;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if params.phi(a, mid) < b {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    EntryRoot::At(0.5 * (lo + hi))
}

/// Everything the oracle knows about a problem's cell structure.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleCells {
    /// `None` when some row overshoots or has no reachable entry.
    pub x_max: Option<Vec<f64>>,
    pub candidates: Vec<CandidateMinimal>,
}

impl OracleCells {
    pub fn feasible(&self) -> bool {
        self.candidates.iter().any(|c| c.feasible)
    }

    pub fn feasible_points(&self) -> Vec<Vec<f64>> {
        self.candidates
            .iter()
            .filter(|c| c.feasible)
            .map(|c| c.point.clone())
            .collect()
    }
}

/// Enumerates every choice of one reachable column per row, without any
/// simplification or deduplication.
pub fn exhaustive_candidates(problem: &Problem, budget: u128) -> Result<OracleCells> {
    let params = problem.params();
    let (m, n) = (problem.rows(), problem.cols());
    let mut roots = vec![vec![None; n]; m];
    let mut x_max = vec![1.0f64; n];
    for (i, row_roots) in roots.iter_mut().enumerate() {
        for j in 0..n {
            match entry_root(params, problem.row(i)[j], problem.rhs()[i]) {
                EntryRoot::Overshoots => {
                    return Ok(OracleCells {
                        x_max: None,
                        candidates: Vec::new(),
                    })
                }
                EntryRoot::Unreachable => {}
                EntryRoot::At(x) => {
                    row_roots[j] = Some(x);
                    x_max[j] = x_max[j].min(x);
                }
            }
        }
        if row_roots.iter().all(Option::is_none) {
            return Ok(OracleCells {
                x_max: None,
                candidates: Vec::new(),
            });
        }
    }

    let required = roots.iter().fold(1u128, |acc, r| {
        acc.saturating_mul(r.iter().filter(|v| v.is_some()).count() as u128)
    });
    if required > budget {
        return Err(FreError::OracleBudget {
            required,
            limit: budget,
        });
    }

    let mut candidates = Vec::new();
    let mut prefix = Vec::with_capacity(m);
    walk(&roots, &x_max, &mut prefix, &mut candidates);
    Ok(OracleCells {
        x_max: Some(x_max),
        candidates,
    })
}

fn walk(
    roots: &[Vec<Option<f64>>],
    x_max: &[f64],
    prefix: &mut Vec<usize>,
    out: &mut Vec<CandidateMinimal>,
) {
    let i = prefix.len();
    if i == roots.len() {
        let mut point = vec![0.0; x_max.len()];
        for (row, &j) in prefix.iter().enumerate() {
            let v = roots[row][j].unwrap();
            if v > point[j] {
                point[j] = v;
            }
        }
        let feasible = (0..point.len()).all(|j| point[j] <= x_max[j] + 1e-9);
        out.push(CandidateMinimal {
            e: ChoiceVector(prefix.clone()),
            point,
            feasible,
        });
        return;
    }
    for j in 0..roots[i].len() {
        if roots[i][j].is_some() {
            prefix.push(j);
            walk(roots, x_max, prefix, out);
            prefix.pop();
        }
    }
}

/// `true` iff `lo - slack <= x <= hi + slack` for some feasible cell `[lo, hi]`.
pub fn covered_by_cells(x: &[f64], cells: &OracleCells, slack: &[f64]) -> bool {
    let Some(hi) = &cells.x_max else {
        return false;
    };
    let below_max = x.iter().zip(hi).zip(slack).all(|((v, h), s)| *v <= h + s);
    below_max
        && cells.candidates.iter().filter(|c| c.feasible).any(|c| {
            x.iter()
                .zip(&c.point)
                .zip(slack)
                .all(|((v, lo), s)| *v >= lo - s)
        })
}
