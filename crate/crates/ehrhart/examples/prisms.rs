//! Period collapse in every dimension d ≥ 3: crossing a pentagon with a
//! unit cube multiplies the counting function by (n+1)^(d-2) and keeps the
//! minimum period. Counts of the product are verified against brute-force
//! enumeration of the full-dimensional polytope.
//!
//! ```sh
//! cargo run --example prisms
//! ```

use ehrhart::counting::{count_closed, CountOptions};
use ehrhart::{pentagon, period_report, prism};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    for (d, s, dim) in [(2i64, 2i64, 3i64), (3, 1, 4), (4, 2, 3)] {
        let spec = prism(d, s, dim)?;
        let base = pentagon(d, s)?.polytope;
        println!(
            "prism(D = {d}, s = {s}, dim = {dim}): {} vertices in R^{}",
            spec.polytope.vertices().len(),
            spec.polytope.ambient_dim()
        );
        print!("  counts vs (n+1)^{}·pentagon:", dim - 2);
        for n in 1..=5 {
            let brute = count_closed(&spec.polytope, n, &opts)?;
            let factored = ((n + 1) as u64).pow((dim - 2) as u32) * count_closed(&base, n, &opts)?;
            assert_eq!(brute, factored);
            print!(" {brute}");
        }
        println!();
        let report = period_report(&spec.polytope, &opts)?;
        println!(
            "  denominator {}, minimal period {} (= s), collapse: {}",
            report.denominator,
            report.minimal_period,
            if report.collapse { "yes" } else { "no" }
        );
        println!();
    }
    Ok(())
}
