//! Linear optimization over fuzzy relational equalities under the
//! max–weighted-power-mean composition:
//!
//! ```text
//!     min  c·x
//!     s.t. max_j phi(a_ij, x_j) = b_i   for every row i
//!          x in [0,1]^n
//!     phi(a, x) = (w a^p + (1 - w) x^p)^(1/p)
//! ```
//!
//! The solution set is a finite union of boxes `[X(e), X̄]` sharing the
//! maximum solution `X̄`. The crate decides feasibility, builds `X̄` and the
//! candidate minimal points `X(e)`, prunes inert matrix entries, and
//! assembles the optimum from `X̄` and the best candidate.
//!
//! ```
//! use wpm_fre::{solve, Problem, SolveOptions, WpmParams};
//!
//! let params = WpmParams::new(0.9, 3.0).unwrap();
//! let b = params.phi(0.6, 0.4);
//! // column 1 cannot reach b even at x = 1, so x[0] alone carries the row
//! let problem = Problem::new(vec![vec![0.6, 0.2]], vec![b], vec![1.0, -1.0], params).unwrap();
//! let report = solve(&problem, &SolveOptions::default()).unwrap();
//! let x = report.x_star.unwrap();
//! assert!((x[0] - 0.4).abs() < 1e-12);
//! assert_eq!(x[1], 1.0);
//! ```
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod error;
pub mod generate;
pub mod io;
pub mod lattice;
pub mod model;
pub mod optimize;
pub mod oracle;
pub mod simplify;
pub mod wpm;

#[cfg(test)]
mod testutil;

/// Tolerance on threshold comparisons when classifying columns and when
/// comparing candidate points against `X̄`.
pub const CLASSIFY_EPS: f64 = 1e-9;

/// Residual tolerance for accepting a point as a solution.
pub const FEASIBILITY_EPS: f64 = 1e-6;

pub use error::{FreError, Result};
pub use generate::{generate_instance, GeneratedInstance};
pub use io::{parse_problem, serialize_problem};
pub use lattice::{
    enumerate_candidates, global_max_solution, max_solution_row, minimal_solution_row,
    CandidateMinimal, CandidateSet, ChoiceVector, DEFAULT_ENUMERATION_LIMIT,
};
pub use model::{
    check_feasibility, classify_all, classify_row, problem_feasible, row_feasible, Infeasibility,
    Problem, RowClassification,
};
pub use optimize::{assemble_optimum, solve, solve_z2, CostSplit, SolveOptions, SolveReport};
pub use simplify::{simplify_first, simplify_pipeline, simplify_second, Rule, SimplificationLog};
pub use wpm::{row_composition, WpmParams};
