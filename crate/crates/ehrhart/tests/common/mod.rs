//! Shared generators for the integration suites. Everything is seeded so
//! test runs are reproducible.
#![allow(dead_code)]

use ehrhart::{rat, rat_int, Polynomial, Rational, RationalPoint, RationalPolytope};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A reduced fraction with (reduced) denominator ≤ `max_den` and value in
/// roughly `[-3, 3]`.
pub fn random_rational(rng: &mut ChaCha8Rng, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-3 * den..=3 * den);
    rat(num, den)
}

/// A segment `[lo, hi]` with `lo < hi` and reduced endpoint denominators
/// ≤ `max_den`.
pub fn random_segment(rng: &mut ChaCha8Rng, max_den: i64) -> (Rational, Rational) {
    loop {
        let a = random_rational(rng, max_den);
        let b = random_rational(rng, max_den);
        if a < b {
            return (a, b);
        }
        if b < a {
            return (b, a);
        }
    }
}

/// A random polygon whose coordinates are multiples of `1/q` for some
/// `q ≤ 6` and lie in `[-3, 3]`, so the denominator of the polygon divides
/// `q`. Degenerate samples are rejected.
pub fn random_polygon(rng: &mut ChaCha8Rng) -> RationalPolytope {
    loop {
        let q = rng.gen_range(1..=6);
        let corners = rng.gen_range(3..=6);
        let points: Vec<RationalPoint> = (0..corners)
            .map(|_| {
                RationalPoint::new(vec![
                    rat(rng.gen_range(-3 * q..=3 * q), q),
                    rat(rng.gen_range(-3 * q..=3 * q), q),
                ])
            })
            .collect();
        if let Ok(polygon) = RationalPolytope::polygon(points) {
            return polygon;
        }
    }
}

/// The binomial-coefficient polynomial `C(n, k)` of degree `k`.
pub fn binomial_poly(k: usize) -> Polynomial {
    let mut p = Polynomial::constant(rat_int(1));
    let mut factorial = 1i64;
    for i in 0..k {
        p = &p * &Polynomial::new(vec![rat_int(-(i as i64)), rat_int(1)]);
        factorial *= i as i64 + 1;
    }
    p.scaled(&rat(1, factorial))
}

/// An integer-valued polynomial of degree ≤ `max_deg` that is nonnegative at
/// every `n ≥ 0` (nonnegative combination of binomial coefficients).
pub fn random_integer_valued_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Polynomial {
    let mut p = Polynomial::zero();
    for k in 0..=max_deg {
        let c = rng.gen_range(0..=9);
        if c > 0 {
            p = &p + &binomial_poly(k).scaled(&rat_int(c));
        }
    }
    p
}
