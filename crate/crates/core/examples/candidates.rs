//! The maximum solution and the candidate minimal solutions. Every feasible
//! candidate spans a box `[candidate, max]` inside the solution set.
//!
//!     cargo run --example candidates

use wpm_fre::{
    check_feasibility, classify_all, enumerate_candidates, parse_problem, DEFAULT_ENUMERATION_LIMIT,
};

fn main() -> wpm_fre::Result<()> {
    let problem = parse_problem(include_str!("../data/reference_example.json"))?;
    check_feasibility(&problem).expect("bundled instance is feasible");
    let set = enumerate_candidates(&problem, &classify_all(&problem), DEFAULT_ENUMERATION_LIMIT)?;

    println!("max solution: {:.4?}", set.x_max);
    for cand in &set.all {
        let mark = if cand.feasible { "feasible" } else { "empty" };
        println!("e = {:?}  {mark:8}  {:.4?}", cand.e.as_slice(), cand.point);
    }
    println!(
        "{} choice vectors, {} distinct nonempty cells",
        set.all.len(),
        set.feasible.len()
    );
    Ok(())
}
