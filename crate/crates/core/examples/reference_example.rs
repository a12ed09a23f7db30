//! Solving the bundled 5x7 instance end to end and printing the JSON
//! report the CLI would emit.
//!
//!     cargo run --example reference_example

use wpm_fre::io::report_document;
use wpm_fre::{parse_problem, solve, SolveOptions};

fn main() -> wpm_fre::Result<()> {
    let problem = parse_problem(include_str!("../data/reference_example.json"))?;
    let report = solve(&problem, &SolveOptions::default())?;

    let z = report.z_star.expect("feasible");
    println!("x* = {:.4?}", report.x_star.as_ref().unwrap());
    println!("e* = {:?}", report.e_star.as_ref().unwrap().as_slice());
    println!("Z* = {z:.4}");
    println!("{}", report_document(&report, None));
    Ok(())
}
