//! Random feasible instances of growing size, solved with and without the
//! reduction rules.
//!
//!     cargo run --release --example generate_and_solve

use std::time::Instant;

use wpm_fre::{generate_instance, solve, FreError, SolveOptions, WpmParams};

fn main() -> wpm_fre::Result<()> {
    let params = WpmParams::new(0.75, 3.0)?;
    for (m, n) in [(3, 4), (5, 7), (8, 10), (12, 15)] {
        let inst = generate_instance(m, n, params, 42);
        for simplify in [true, false] {
            let start = Instant::now();
            let options = SolveOptions {
                simplify,
                ..Default::default()
            };
            match solve(&inst.problem, &options) {
                Ok(r) => println!(
                    "{m}x{n} simplify={simplify:<5}  |E| = {:<8} z* = {:>9.4}  {:?}",
                    r.candidates_total,
                    r.z_star.unwrap(),
                    start.elapsed()
                ),
                Err(FreError::Budget { required, .. }) => {
                    println!("{m}x{n} simplify={simplify:<5}  |E| = {required} is over budget")
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}
