//! Reciprocity: evaluating the fitted quasi-polynomial at -n and flipping
//! the sign by (-1)^dim yields the number of interior lattice points of the
//! n-th dilate.
//!
//! ```sh
//! cargo run --example reciprocity
//! ```

use ehrhart::counting::{count_interior, CountOptions};
use ehrhart::{example_triangle, period_report, stanley_pyramid, verify_reciprocity};

fn main() -> ehrhart::Result<()> {
    let opts = CountOptions::default();
    for spec in [stanley_pyramid(), example_triangle(2)?] {
        let dim = spec.polytope.dim();
        println!("{} (dimension {dim}):", spec.name);
        let report = period_report(&spec.polytope, &opts)?;
        let qp = &report.quasipolynomial;
        let sign = if dim % 2 == 0 { 1 } else { -1 };
        println!("{:>4} {:>10} {:>18}", "n", "interior", "(-1)^dim q(-n)");
        for n in 1..=6 {
            let interior = count_interior(&spec.polytope, n, &opts)?;
            let reflected = qp.eval(-n) * ehrhart::rat_int(sign);
            println!("{n:>4} {interior:>10} {reflected:>18}");
        }
        let outcome = verify_reciprocity(&spec.polytope, qp, 6, &opts)?;
        assert!(outcome.holds());
        println!("  all {} checks agree", outcome.checked_up_to);
        println!();
    }
    Ok(())
}
