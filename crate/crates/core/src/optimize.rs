//! Linear objective over the solution set.
//!
//! The cost vector is split into its negative part, minimized by the maximum
//! solution `X̄`, and its nonnegative part, minimized by the best feasible
//! candidate `X(e*)`. The optimum takes `X̄_j` where `c_j < 0` and `X(e*)_j`
//! elsewhere; it lies in the cell `[X(e*), X̄]` and is therefore feasible.

use serde::{Deserialize, Serialize};

use crate::error::{FreError, Result};
use crate::lattice::{
    choice_space_size, enumerate_candidates, CandidateMinimal, ChoiceVector,
    DEFAULT_ENUMERATION_LIMIT,
};
use crate::model::{check_feasibility, classify_all, Infeasibility, Problem};
use crate::simplify::{simplify_pipeline, SimplificationLog};
use crate::FEASIBILITY_EPS;

#[derive(Debug, Clone, PartialEq)]
pub struct CostSplit {
    pub c_plus: Vec<f64>,
    pub c_minus: Vec<f64>,
}

impl CostSplit {
    pub fn new(c: &[f64]) -> Self {
        CostSplit {
            c_plus: c.iter().map(|&v| v.max(0.0)).collect(),
            c_minus: c.iter().map(|&v| v.min(0.0)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub simplify: bool,
    /// Repeat the simplification rules until nothing changes.
    pub fixpoint: bool,
    /// Cap on `|E|` after simplification.
    pub limit: u128,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            simplify: true,
            fixpoint: false,
            limit: DEFAULT_ENUMERATION_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagnostic: Option<Infeasibility>,
    pub x_max: Option<Vec<f64>>,
    pub e_star: Option<ChoiceVector>,
    pub x_star: Option<Vec<f64>>,
    pub z_star: Option<f64>,
    pub candidates_total: usize,
    pub candidates_feasible: usize,
    pub candidates: Vec<CandidateMinimal>,
    pub simplification: SimplificationLog,
}

/// Best feasible candidate for the nonnegative part of the cost.
/// Ties go to the lexicographically smallest `e`.
pub fn solve_z2<'a>(
    candidates: &'a [CandidateMinimal],
    c_plus: &[f64],
) -> Result<&'a CandidateMinimal> {
    let score =
        |c: &CandidateMinimal| -> f64 { c.point.iter().zip(c_plus).map(|(x, c)| x * c).sum() };
    candidates
        .iter()
        .filter(|c| c.feasible)
        .map(|c| (score(c), c))
        .min_by(|(sa, a), (sb, b)| sa.total_cmp(sb).then_with(|| a.e.cmp(&b.e)))
        .map(|(_, c)| c)
        .ok_or(FreError::Infeasible)
}

/// `x*_j = x_max[j]` where `c_j < 0`, `x_min_star[j]` otherwise.
pub fn assemble_optimum(x_max: &[f64], x_min_star: &[f64], c: &[f64]) -> Vec<f64> {
    c.iter()
        .zip(x_max.iter().zip(x_min_star))
        .map(|(&cj, (&hi, &lo))| if cj < 0.0 { hi } else { lo })
        .collect()
}

pub fn solve(problem: &Problem, options: &SolveOptions) -> Result<SolveReport> {
    let original_choices = choice_space_size(&classify_all(problem));
    if let Err(diagnostic) = check_feasibility(problem) {
        return Ok(SolveReport {
            feasible: false,
            diagnostic: Some(diagnostic),
            x_max: None,
            e_star: None,
            x_star: None,
            z_star: None,
            candidates_total: 0,
            candidates_feasible: 0,
            candidates: Vec::new(),
            simplification: SimplificationLog {
                entries: Vec::new(),
                choices_before: original_choices,
                choices_after: original_choices,
            },
        });
    }

    let (working, simplification) = if options.simplify {
        simplify_pipeline(problem, options.fixpoint)?
    } else {
        let log = SimplificationLog {
            entries: Vec::new(),
            choices_before: original_choices,
            choices_after: original_choices,
        };
        (problem.clone(), log)
    };

    let set = enumerate_candidates(&working, &classify_all(&working), options.limit)?;
    let split = CostSplit::new(problem.cost());
    let best = solve_z2(&set.feasible, &split.c_plus)?;
    let x_star = assemble_optimum(&set.x_max, &best.point, problem.cost());

    let max_residual = problem
        .residuals(&x_star)?
        .into_iter()
        .fold(0.0f64, f64::max);
    if max_residual > FEASIBILITY_EPS {
        return Err(FreError::Numerical { max_residual });
    }

    Ok(SolveReport {
        feasible: true,
        diagnostic: None,
        z_star: Some(problem.objective(&x_star)),
        e_star: Some(best.e.clone()),
        x_star: Some(x_star),
        x_max: Some(set.x_max),
        candidates_total: set.all.len(),
        candidates_feasible: set.feasible.len(),
        candidates: set.all,
        simplification,
    })
}
