//! Maximum solution, per-row minimal solutions and the cells `[X(e), X̄]`
//! whose union is the solution set.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{FreError, Result};
use crate::model::{row_feasible, Problem, RowClassification};
use crate::CLASSIFY_EPS;

/// Default cap on `|E| = prod_i |J(i)|`.
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 1_000_000;

/// Maximum solution of row `i`: the inverse value on active columns, 1 on
/// inert ones.
pub fn max_solution_row(problem: &Problem, cls: &RowClassification) -> Result<Vec<f64>> {
    if !row_feasible(cls) {
        return Err(FreError::InfeasibleRow { row: cls.row_index });
    }
    let i = cls.row_index;
    let params = problem.params();
    let bi = problem.rhs()[i];
    let mut out = vec![1.0; problem.cols()];
    for &j in &cls.j_active {
        out[j] = params.phi_inverse_x(problem.row(i)[j], bi)?;
    }
    Ok(out)
}

pub fn max_solution_rows(
    problem: &Problem,
    classes: &[RowClassification],
) -> Result<Vec<Vec<f64>>> {
    classes
        .iter()
        .map(|cls| max_solution_row(problem, cls))
        .collect()
}

/// Componentwise minimum of the per-row maximum solutions.
pub fn global_max_solution(per_row: &[Vec<f64>]) -> Vec<f64> {
    let mut out = per_row[0].clone();
    for row in &per_row[1..] {
        for (o, &v) in out.iter_mut().zip(row) {
            *o = o.min(v);
        }
    }
    out
}

/// The minimal solution of row `i` supported on column `j`.
pub fn minimal_solution_row(
    problem: &Problem,
    cls: &RowClassification,
    j: usize,
) -> Result<Vec<f64>> {
    if !row_feasible(cls) {
        return Err(FreError::InfeasibleRow { row: cls.row_index });
    }
    if cls.j_active.binary_search(&j).is_err() {
        return Err(FreError::InactiveColumn {
            row: cls.row_index,
            column: j,
        });
    }
    let i = cls.row_index;
    let mut out = vec![0.0; problem.cols()];
    out[j] = problem
        .params()
        .phi_inverse_x(problem.row(i)[j], problem.rhs()[i])?;
    Ok(out)
}

/// One active column per row. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChoiceVector(pub Vec<usize>);

impl ChoiceVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateMinimal {
    pub e: ChoiceVector,
    pub point: Vec<f64>,
    /// `point <= X̄` componentwise, i.e. the cell `[point, X̄]` is nonempty.
    pub feasible: bool,
}

/// Every candidate in lexicographic order of `e`, plus the feasible ones
/// deduplicated by point.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSet {
    pub x_max: Vec<f64>,
    pub all: Vec<CandidateMinimal>,
    pub feasible: Vec<CandidateMinimal>,
}

/// `prod_i |J(i)|`, saturating.
pub fn choice_space_size(classes: &[RowClassification]) -> u128 {
    classes.iter().fold(1u128, |acc, cls| {
        acc.saturating_mul(cls.j_active.len() as u128)
    })
}

pub fn enumerate_candidates(
    problem: &Problem,
    classes: &[RowClassification],
    limit: u128,
) -> Result<CandidateSet> {
    if let Some(cls) = classes.iter().find(|c| !row_feasible(c)) {
        return Err(FreError::InfeasibleRow { row: cls.row_index });
    }
    let required = choice_space_size(classes);
    if required > limit {
        return Err(FreError::Budget { required, limit });
    }

    let per_row = max_solution_rows(problem, classes)?;
    let x_max = global_max_solution(&per_row);
    let n = problem.cols();
    let m = classes.len();

    let mut all = Vec::with_capacity(required as usize);
    let mut cursor = vec![0usize; m];
    loop {
        let e: Vec<usize> = cursor
            .iter()
            .zip(classes)
            .map(|(&k, cls)| cls.j_active[k])
            .collect();
        let mut point = vec![0.0f64; n];
        for (i, &j) in e.iter().enumerate() {
            point[j] = point[j].max(per_row[i][j]);
        }
        let feasible = point
            .iter()
            .zip(&x_max)
            .all(|(&lo, &hi)| lo <= hi + CLASSIFY_EPS);
        all.push(CandidateMinimal {
            e: ChoiceVector(e),
            point,
            feasible,
        });

        // odometer, last row fastest
        let mut i = m;
        loop {
            if i == 0 {
                let feasible = dedup_feasible(&all);
                return Ok(CandidateSet {
                    x_max,
                    all,
                    feasible,
                });
            }
            i -= 1;
            cursor[i] += 1;
            if cursor[i] < classes[i].j_active.len() {
                break;
            }
            cursor[i] = 0;
        }
    }
}

fn dedup_feasible(all: &[CandidateMinimal]) -> Vec<CandidateMinimal> {
    let mut seen = HashSet::new();
    all.iter()
        .filter(|c| c.feasible)
        .filter(|c| seen.insert(c.point.iter().map(|v| v.to_bits()).collect::<Vec<_>>()))
        .cloned()
        .collect()
}
