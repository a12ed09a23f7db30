//! Classifying each row and reporting why a system has no solution.
//!
//!     cargo run --example feasibility

use wpm_fre::{check_feasibility, classify_all, Problem, WpmParams};

fn main() -> wpm_fre::Result<()> {
    let params = WpmParams::new(0.5, 2.0)?;
    let feasible = Problem::new(
        vec![vec![0.2, 0.7, 0.1], vec![0.5, 0.3, 0.9]],
        vec![0.6, 0.7],
        vec![1.0, -1.0, 2.0],
        params,
    )?;
    // the second row has 0.95 > b / w^(1/p) in column 1
    let overshoot = Problem::new(
        vec![vec![0.2, 0.7, 0.1], vec![0.5, 0.95, 0.1]],
        vec![0.6, 0.4],
        vec![1.0, -1.0, 2.0],
        params,
    )?;

    for (name, problem) in [("feasible", &feasible), ("overshoot", &overshoot)] {
        println!("{name}:");
        for cls in classify_all(problem) {
            println!(
                "  row {}: J = {:?}  J-inf = {:?}  J- = {:?}",
                cls.row_index, cls.j_active, cls.j_infinity, cls.j_minus
            );
        }
        match check_feasibility(problem) {
            Ok(()) => println!("  feasible"),
            Err(diag) => println!("  infeasible: {}", serde_json::to_string(&diag).unwrap()),
        }
    }
    Ok(())
}
