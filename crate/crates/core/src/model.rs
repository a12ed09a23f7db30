//! Problem data and the per-row column classification.

use serde::{Deserialize, Serialize};

use crate::error::{FreError, Result};
use crate::lattice::{global_max_solution, max_solution_rows};
use crate::wpm::{row_composition, WpmParams};
use crate::{CLASSIFY_EPS, FEASIBILITY_EPS};

/// `min c.x  s.t.  max_j phi(a_ij, x_j) = b_i  for every row,  x in [0,1]^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    a: Vec<Vec<f64>>,
    b: Vec<f64>,
    c: Vec<f64>,
    params: WpmParams,
}

fn check_unit(field: &str, v: f64) -> Result<()> {
    if (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(FreError::Domain {
            field: field.to_string(),
            detail: format!("{v} is not in [0, 1]"),
        })
    }
}

impl Problem {
    pub fn new(a: Vec<Vec<f64>>, b: Vec<f64>, c: Vec<f64>, params: WpmParams) -> Result<Self> {
        let m = a.len();
        if m == 0 {
            return Err(FreError::Dimension("A has no rows".into()));
        }
        let n = a[0].len();
        if n == 0 {
            return Err(FreError::Dimension("A has no columns".into()));
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(FreError::Dimension(format!(
                    "A[{i}] has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                check_unit(&format!("A[{i}][{j}]"), v)?;
            }
        }
        if b.len() != m {
            return Err(FreError::Dimension(format!(
                "b has {} entries but A has {m} rows",
                b.len()
            )));
        }
        for (i, &v) in b.iter().enumerate() {
            check_unit(&format!("b[{i}]"), v)?;
        }
        if c.len() != n {
            return Err(FreError::Dimension(format!(
                "c has {} entries but A has {n} columns",
                c.len()
            )));
        }
        if let Some(j) = c.iter().position(|v| !v.is_finite()) {
            return Err(FreError::Domain {
                field: format!("c[{j}]"),
                detail: format!("{} is not finite", c[j]),
            });
        }
        Ok(Problem { a, b, c, params })
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.a[0].len()
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.a
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.a[i]
    }

    pub fn rhs(&self) -> &[f64] {
        &self.b
    }

    pub fn cost(&self) -> &[f64] {
        &self.c
    }

    pub fn params(&self) -> &WpmParams {
        &self.params
    }

    /// Returns a copy with `A[i][j]` replaced. Used by the simplification rules.
    pub(crate) fn with_entry(mut self, i: usize, j: usize, value: f64) -> Self {
        self.a[i][j] = value;
        self
    }

    /// `|phi(a_i, x) - b_i|` for every row.
    pub fn residuals(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(row, &bi)| Ok((row_composition(row, x, &self.params)? - bi).abs()))
            .collect()
    }

    pub fn objective(&self, x: &[f64]) -> f64 {
        self.c.iter().zip(x).map(|(c, x)| c * x).sum()
    }
}

/// Partition of a row's columns into `J-` (too large), `J∞` (inert) and
/// `J` (active). Column indices are 0-based and ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowClassification {
    pub row_index: usize,
    pub j_minus: Vec<usize>,
    pub j_infinity: Vec<usize>,
    pub j_active: Vec<usize>,
}

impl RowClassification {
    pub fn is_feasible(&self) -> bool {
        row_feasible(self)
    }
}

pub fn classify_row(problem: &Problem, i: usize) -> RowClassification {
    let params = problem.params();
    let bi = problem.rhs()[i];
    let upper = params.upper_threshold(bi);
    let lower = params.lower_threshold(bi);

    let mut cls = RowClassification {
        row_index: i,
        j_minus: Vec::new(),
        j_infinity: Vec::new(),
        j_active: Vec::new(),
    };
    for (j, &a) in problem.row(i).iter().enumerate() {
        if a > upper + CLASSIFY_EPS {
            cls.j_minus.push(j);
        } else if matches!(lower, Some(t) if a < t - CLASSIFY_EPS) {
            cls.j_infinity.push(j);
        } else {
            cls.j_active.push(j);
        }
    }
    cls
}

pub fn classify_all(problem: &Problem) -> Vec<RowClassification> {
    (0..problem.rows())
        .map(|i| classify_row(problem, i))
        .collect()
}

pub fn row_feasible(cls: &RowClassification) -> bool {
    cls.j_minus.is_empty() && !cls.j_active.is_empty()
}

/// Why a problem has no solution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Infeasibility {
    /// Some entries of the row exceed `b_i / w^(1/p)`.
    EntryTooLarge { row: usize, columns: Vec<usize> },
    /// No entry of the row can reach `b_i`.
    NoActiveColumn { row: usize },
    /// Every row is solvable on its own but the maximum solution misses some rows.
    MaxSolutionResiduals { residuals: Vec<f64> },
}

/// Full feasibility verdict with a diagnostic when the answer is negative.
pub fn check_feasibility(problem: &Problem) -> std::result::Result<(), Infeasibility> {
    let classes = classify_all(problem);
    for cls in &classes {
        if !cls.j_minus.is_empty() {
            return Err(Infeasibility::EntryTooLarge {
                row: cls.row_index,
                columns: cls.j_minus.clone(),
            });
        }
        if cls.j_active.is_empty() {
            return Err(Infeasibility::NoActiveColumn { row: cls.row_index });
        }
    }
    let per_row = max_solution_rows(problem, &classes).expect("rows checked feasible");
    let x_max = global_max_solution(&per_row);
    let residuals = problem
        .residuals(&x_max)
        .expect("dimensions are consistent");
    if residuals.iter().any(|&r| r > FEASIBILITY_EPS) {
        return Err(Infeasibility::MaxSolutionResiduals { residuals });
    }
    Ok(())
}

/// `true` iff the system has a solution: every row is solvable and the
/// maximum solution satisfies every row.
pub fn problem_feasible(problem: &Problem) -> bool {
    check_feasibility(problem).is_ok()
}
