//! The half-open parallelogram tile behind the triangle family's collapse.
//!
//! Q has vertices (0,0), (1,(D-1)/D), (D,0), (D-1,-(D-1)/D) with the two
//! edges adjacent to (1,(D-1)/D) removed. Its dilates tile by translates,
//! every translate Q - (0, t/D) holds exactly D-1 lattice points, so
//! i_Q(n) = (D-1)n² on the nose; the closure adds n+1 boundary points.
//!
//! ```sh
//! cargo run --example halfopen_tiling
//! ```

use ehrhart::counting::{count_halfopen_parallelogram, count_parallelogram_closure};

fn main() -> ehrhart::Result<()> {
    let d = 4;
    println!("translates at n = 1 (each must hold D-1 = {} points):", d - 1);
    for t in 0..d {
        println!(
            "  Q - (0, {t}/{d}): {} lattice points",
            count_halfopen_parallelogram(d, 1, t)?
        );
    }

    println!();
    println!("{:>4} {:>12} {:>12} {:>12}", "n", "half-open", "(D-1)n^2", "closure");
    for n in 1..=8 {
        let half_open = count_halfopen_parallelogram(d, n, 0)?;
        let closure = count_parallelogram_closure(d, n)?;
        assert_eq!(half_open, ((d - 1) * n * n) as u64);
        assert_eq!(closure, half_open + n as u64 + 1);
        println!(
            "{n:>4} {half_open:>12} {:>12} {closure:>12}",
            ((d - 1) * n * n) as u64
        );
    }
    Ok(())
}
