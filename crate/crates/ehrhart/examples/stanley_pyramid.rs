//! The classic 3-D pyramid with a half-integral apex: denominator 2, yet
//! the counting function is the binomial coefficient C(n+3, 3).
//!
//! ```sh
//! cargo run --example stanley_pyramid
//! ```

use ehrhart::counting::{count_closed, CountOptions};
use ehrhart::{period_report, stanley_pyramid};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    let spec = stanley_pyramid();
    println!("pyramid vertices:");
    for v in spec.polytope.vertices() {
        println!("  {v}");
    }
    println!("denominator: {}", spec.polytope.denominator());

    print!("counts n = 1..8:");
    for n in 1..=8u64 {
        let count = count_closed(&spec.polytope, n as i64, &opts)?;
        assert_eq!(count, (n + 1) * (n + 2) * (n + 3) / 6);
        print!(" {count}");
    }
    println!("  (= C(n+3, 3))");

    let report = period_report(&spec.polytope, &opts)?;
    println!(
        "minimal period: {} — a polynomial despite denominator {}",
        report.minimal_period, report.denominator
    );
    println!("fitted: {}", report.quasipolynomial.constituent(1));
    Ok(())
}
