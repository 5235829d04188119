//! Period collapse in the plane: a triangle family where the counting
//! function is a polynomial no matter how large the denominator gets.
//!
//! ```sh
//! cargo run --example triangle_family
//! ```

use ehrhart::counting::CountOptions;
use ehrhart::{period_report, triangle};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    println!("triangle (0,0), (1,(D-1)/D), (D,0):");
    println!("{:>4} {:>13} {:>16} {:>10}   fitted polynomial", "D", "denominator", "minimal period", "collapse");
    for d in 2..=9 {
        let spec = triangle(d)?;
        let report = period_report(&spec.polytope, &opts)?;
        println!(
            "{:>4} {:>13} {:>16} {:>10}   {}",
            d,
            report.denominator,
            report.minimal_period,
            if report.collapse { "yes" } else { "no" },
            report.quasipolynomial.constituent(1)
        );
    }
    println!();
    println!("every denominator D is realized, yet every counting function has period 1");
    Ok(())
}
