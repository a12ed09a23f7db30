//! Equivalence operations: matrix entries that cannot influence the solution
//! set are reset to zero, which shrinks the active sets `J(i)` and `|E|`.

use serde::{Deserialize, Serialize};

use crate::error::{FreError, Result};
use crate::lattice::choice_space_size;
use crate::model::{classify_all, row_feasible, Problem, RowClassification};
use crate::CLASSIFY_EPS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// Entry in an inert column `J∞(i)`.
    First,
    /// Active entry dominated by the same column of another row.
    Second,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogEntry {
    pub rule: Rule,
    pub row: usize,
    pub column: usize,
    pub old_value: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SimplificationLog {
    pub entries: Vec<LogEntry>,
    pub choices_before: u128,
    pub choices_after: u128,
}

impl SimplificationLog {
    fn merge(&mut self, other: SimplificationLog) {
        self.entries.extend(other.entries);
        self.choices_after = other.choices_after;
    }

    pub fn zeroed(&self, rule: Rule) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries
            .iter()
            .filter(move |e| e.rule == rule)
            .map(|e| (e.row, e.column))
    }
}

fn require_feasible(classes: &[RowClassification]) -> Result<()> {
    match classes.iter().find(|c| !row_feasible(c)) {
        Some(cls) => Err(FreError::InfeasibleRow { row: cls.row_index }),
        None => Ok(()),
    }
}

fn apply(
    problem: Problem,
    rule: Rule,
    cells: Vec<(usize, usize)>,
    before: u128,
) -> (Problem, SimplificationLog) {
    let mut entries = Vec::new();
    let mut problem = problem;
    for (row, column) in cells {
        let old_value = problem.row(row)[column];
        if old_value == 0.0 {
            continue;
        }
        problem = problem.with_entry(row, column, 0.0);
        entries.push(LogEntry {
            rule,
            row,
            column,
            old_value,
        });
    }
    let after = choice_space_size(&classify_all(&problem));
    let log = SimplificationLog {
        entries,
        choices_before: before,
        choices_after: after,
    };
    (problem, log)
}

/// Zero every entry in an inert column.
pub fn simplify_first(
    problem: &Problem,
    classes: &[RowClassification],
) -> Result<(Problem, SimplificationLog)> {
    require_feasible(classes)?;
    let cells = classes
        .iter()
        .flat_map(|cls| cls.j_infinity.iter().map(move |&j| (cls.row_index, j)))
        .collect();
    Ok(apply(
        problem.clone(),
        Rule::First,
        cells,
        choice_space_size(classes),
    ))
}

/// Zero `a_kj` for every active `j` in row `k` for which another row `i`, also
/// active in `j`, satisfies `b_i^p - b_k^p < w (a_ij^p - a_kj^p)`.
///
/// Eligibility is decided on the input matrix for all pairs at once, then all
/// zeros are applied together.
pub fn simplify_second(
    problem: &Problem,
    classes: &[RowClassification],
) -> Result<(Problem, SimplificationLog)> {
    require_feasible(classes)?;
    let params = problem.params();
    let w = params.w();
    let bp: Vec<f64> = problem.rhs().iter().map(|&b| params.pow(b)).collect();

    let mut cells = Vec::new();
    for k in classes {
        for &j in &k.j_active {
            let akj = params.pow(problem.row(k.row_index)[j]);
            let dominated = classes.iter().any(|i| {
                i.row_index != k.row_index
                    && i.j_active.binary_search(&j).is_ok()
                    && bp[i.row_index] - bp[k.row_index]
                        < w * (params.pow(problem.row(i.row_index)[j]) - akj) - CLASSIFY_EPS
            });
            if dominated {
                cells.push((k.row_index, j));
            }
        }
    }
    Ok(apply(
        problem.clone(),
        Rule::Second,
        cells,
        choice_space_size(classes),
    ))
}

/// First rule, then second rule. With `fixpoint` the pair is repeated until
/// nothing changes.
pub fn simplify_pipeline(
    problem: &Problem,
    fixpoint: bool,
) -> Result<(Problem, SimplificationLog)> {
    let classes = classify_all(problem);
    let (mut current, mut log) = simplify_first(problem, &classes)?;
    loop {
        let (next, second) = simplify_second(&current, &classify_all(&current))?;
        let changed = !second.entries.is_empty();
        log.merge(second);
        current = next;
        if !(fixpoint && changed) {
            break;
        }
        let (next, first) = simplify_first(&current, &classify_all(&current))?;
        log.merge(first);
        current = next;
    }
    Ok((current, log))
}
