//! Cross-checking the solver against the independent oracle: exhaustive
//! cells, and a coarse grid of the feasible set.
//!
//!     cargo run --release --example oracle_check [seed]

use wpm_fre::oracle::{exhaustive_candidates, grid_feasible_set, GridSpec, DEFAULT_ORACLE_BUDGET};
use wpm_fre::{generate_instance, problem_feasible, solve, SolveOptions, WpmParams};

fn main() -> wpm_fre::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let inst = generate_instance(2, 3, WpmParams::new(0.6, 2.0)?, seed);
    let problem = &inst.problem;

    let cells = exhaustive_candidates(problem, DEFAULT_ORACLE_BUDGET)?;
    println!(
        "solver feasible: {}  oracle feasible: {}",
        problem_feasible(problem),
        cells.feasible()
    );

    let report = solve(problem, &SolveOptions::default())?;
    let z = report.z_star.unwrap();
    println!("z* = {z:.6}  x* = {:.4?}", report.x_star.unwrap());

    let grid = grid_feasible_set(problem, &GridSpec::new(101, 1e-3))?;
    // a grid point within the residual tolerance may sit just outside the
    // exact solution set, so it can undercut z* by a little
    let Some(best) = grid
        .iter()
        .min_by(|x, y| problem.objective(x).total_cmp(&problem.objective(y)))
    else {
        println!("no grid point within tolerance");
        return Ok(());
    };
    let residual = problem.residuals(best)?.into_iter().fold(0.0, f64::max);
    println!(
        "{} grid points within tolerance; best {:.4?} has objective {:.6} and residual {residual:.1e}",
        grid.len(),
        best,
        problem.objective(best)
    );
    Ok(())
}
