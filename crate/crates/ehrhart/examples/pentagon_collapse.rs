//! Dialing in any minimum period: for every divisor s of D, the pentagon
//! (0,0), (1,(D-1)/D), (D,0), (D,-1/s), (0,-1/s) has denominator D and
//! minimum period exactly s. Its counts decompose as the triangle counts
//! plus floor(n/s)·(Dn+1) points in the added slab.
//!
//! ```sh
//! cargo run --example pentagon_collapse
//! ```

use ehrhart::counting::{count_closed, CountOptions};
use ehrhart::{pentagon, period_report, triangle};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    let d = 6;
    println!("pentagons with denominator D = {d}:");
    for s in [1, 2, 3, 6] {
        let spec = pentagon(d, s)?;
        let report = period_report(&spec.polytope, &opts)?;
        println!(
            "  s = {s}: denominator {}, minimal period {}, coefficient periods {:?}",
            report.denominator, report.minimal_period, report.coefficient_periods
        );
    }

    println!();
    let s = 3;
    let tri = triangle(d)?.polytope;
    let pent = pentagon(d, s)?.polytope;
    println!("count decomposition for s = {s} (pentagon = triangle + slab):");
    println!("{:>4} {:>10} {:>10} {:>14}", "n", "pentagon", "triangle", "floor(n/s)(Dn+1)");
    for n in 1..=9i64 {
        let p = count_closed(&pent, n, &opts)?;
        let t = count_closed(&tri, n, &opts)?;
        let slab = ((n / s) * (d * n + 1)) as u64;
        assert_eq!(p, t + slab);
        println!("{n:>4} {p:>10} {t:>10} {slab:>14}");
    }
    Ok(())
}
