//! Both reduction rules on the bundled 5x7 instance, with the log of
//! zeroed entries.
//!
//!     cargo run --example simplification

use wpm_fre::{parse_problem, simplify_pipeline, Rule};

fn main() -> wpm_fre::Result<()> {
    let problem = parse_problem(include_str!("../data/reference_example.json"))?;
    let (reduced, log) = simplify_pipeline(&problem, false)?;

    println!(
        "first rule zeroed {} entries",
        log.zeroed(Rule::First).count()
    );
    for entry in log.entries.iter().filter(|e| e.rule == Rule::Second) {
        println!(
            "second rule: A[{}][{}] = {} -> 0",
            entry.row, entry.column, entry.old_value
        );
    }
    println!(
        "choice vectors: {} -> {}",
        log.choices_before, log.choices_after
    );

    for (i, row) in reduced.matrix().iter().enumerate() {
        println!("row {i}: {row:?}");
    }
    Ok(())
}
