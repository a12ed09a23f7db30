//! The weighted power mean operator, its inverse and the two thresholds
//! that classify a coefficient against a right-hand side.
//!
//!     cargo run --example operator

use wpm_fre::WpmParams;

fn main() -> wpm_fre::Result<()> {
    let params = WpmParams::new(0.75, 3.0)?;
    let b = 0.6;
    println!("w = {}, p = {}, b = {b}", params.w(), params.p());
    println!(
        "upper threshold b / w^(1/p) = {:.6}",
        params.upper_threshold(b)
    );
    match params.lower_threshold(b) {
        Some(t) => println!("lower threshold                = {t:.6}"),
        None => println!("no lower threshold: every a can reach b from x = 1"),
    }

    for a in [0.0, 0.3, 0.5, 0.62, 0.9] {
        match params.phi_inverse_x(a, b) {
            Ok(x) => println!(
                "a = {a:<4}  x = {x:.6}  phi(a, x) = {:.6}",
                params.phi(a, x)
            ),
            Err(e) => println!("a = {a:<4}  {e}"),
        }
    }
    Ok(())
}
