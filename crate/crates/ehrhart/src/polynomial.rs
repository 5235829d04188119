//! Univariate polynomials with exact rational coefficients.

use crate::rational::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial in one variable `n`, stored densely by ascending power.
///
/// Canonical form: trailing zero coefficients are never stored, so equality
/// is plain coefficient-list equality and the zero polynomial has an empty
/// coefficient list (degree `None`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending-power coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c · n^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![rat_int(0); power + 1];
        coeffs[power] = c;
        Polynomial { coeffs }
    }

    /// Convenience for integer-coefficient literals in tests and fixtures.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `n^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact evaluation at an integer argument (Horner).
    pub fn eval(&self, n: i64) -> Rational {
        let x = Rational::from_integer(BigInt::from(n));
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = &acc * &x + c;
        }
        acc
    }

    pub fn scaled(&self, factor: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn pow(&self, exp: usize) -> Polynomial {
        let mut acc = Polynomial::constant(rat_int(1));
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

/// Renders descending powers: `1/2 n^2 + 3/2 n + 1`, `n^2 - n`, `0`.
/// Unit coefficients are omitted on nonconstant terms.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = rat_int(1);
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c < &rat_int(0);
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag == one && k > 0;
            if !unit {
                write!(f, "{mag}")?;
                if k > 0 {
                    write!(f, " ")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn eval_square_identity() {
        // (n + 1)^2 at n = 3
        let p = Polynomial::from_ints(&[1, 2, 1]);
        assert_eq!(p.eval(3), rat_int(16));
    }

    #[test]
    fn eval_half_square() {
        // 1/2 n^2 + 3/2 n + 1 at n = 2
        let p = Polynomial::new(vec![rat_int(1), rat(3, 2), rat(1, 2)]);
        assert_eq!(p.eval(2), rat_int(6));
    }

    #[test]
    fn eval_zero_polynomial() {
        assert_eq!(Polynomial::zero().eval(7), rat_int(0));
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Polynomial::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p, Polynomial::from_ints(&[1]));
        assert_eq!(p.degree(), Some(0));
    }

    #[test]
    fn arithmetic() {
        let p = Polynomial::from_ints(&[1, 1]); // n + 1
        let sq = &p * &p;
        assert_eq!(sq, Polynomial::from_ints(&[1, 2, 1]));
        assert_eq!(&sq - &sq, Polynomial::zero());
        assert_eq!(p.pow(3), Polynomial::from_ints(&[1, 3, 3, 1]));
        assert_eq!(
            p.scaled(&rat(1, 2)),
            Polynomial::new(vec![rat(1, 2), rat(1, 2)])
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_ints(&[1, 0, 1]).to_string(), "n^2 + 1");
        assert_eq!(Polynomial::from_ints(&[1, 1, 1]).to_string(), "n^2 + n + 1");
        assert_eq!(
            Polynomial::new(vec![rat_int(1), rat(3, 2), rat(1, 2)]).to_string(),
            "1/2 n^2 + 3/2 n + 1"
        );
        assert_eq!(
            Polynomial::new(vec![rat(3, 4), rat_int(1), rat(1, 4)]).to_string(),
            "1/4 n^2 + n + 3/4"
        );
        assert_eq!(Polynomial::from_ints(&[0, -1, 1]).to_string(), "n^2 - n");
        assert_eq!(
            Polynomial::new(vec![rat(-1, 2), rat_int(0), rat_int(-1)]).to_string(),
            "-n^2 - 1/2"
        );
        assert_eq!(Polynomial::from_ints(&[0, 1]).to_string(), "n");
        assert_eq!(Polynomial::from_ints(&[5]).to_string(), "5");
    }
}
