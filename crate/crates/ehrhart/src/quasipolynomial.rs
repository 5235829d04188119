//! Quasi-polynomials: finitely many polynomial constituents selected by the
//! residue of the argument modulo a period.

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use num_integer::Integer;

/// A quasi-polynomial of period `π`: polynomials `f_1, …, f_π` with
/// `f(n) = f_j(n)` whenever `n ≡ j (mod π)`.
///
/// Constituents are indexed `1..=π` and constituent `π` serves the residue-0
/// class, so `f(0)` and `f(π)` use the same constituent. Evaluation is
/// defined on all of `ℤ`: a negative argument selects the representative of
/// its residue class in `{1, …, π}` (e.g. `n = -1` with period 2 selects
/// constituent 1).
///
/// Equality compares the stored constituents; the dimension hint is
/// presentation metadata and does not participate.
#[derive(Debug, Clone, Eq)]
pub struct QuasiPolynomial {
    constituents: Vec<Polynomial>,
    dimension_hint: Option<usize>,
}

impl PartialEq for QuasiPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.constituents == other.constituents
    }
}

impl QuasiPolynomial {
    /// Builds a quasi-polynomial from constituents `f_1, …, f_π` (index 0
    /// holds `f_1`). Errors on an empty list.
    pub fn new(constituents: Vec<Polynomial>) -> Result<Self> {
        if constituents.is_empty() {
            return Err(Error::InvalidParameter(
                "a quasi-polynomial needs at least one constituent".into(),
            ));
        }
        Ok(QuasiPolynomial {
            constituents,
            dimension_hint: None,
        })
    }

    /// A period-1 quasi-polynomial (a plain polynomial).
    pub fn from_polynomial(p: Polynomial) -> Self {
        QuasiPolynomial {
            constituents: vec![p],
            dimension_hint: None,
        }
    }

    /// Attaches the dimension of the underlying polytope. Errors if any
    /// constituent has degree above the hint.
    pub fn with_dimension_hint(mut self, dim: usize) -> Result<Self> {
        for (i, c) in self.constituents.iter().enumerate() {
            if c.degree().is_some_and(|d| d > dim) {
                return Err(Error::InvalidParameter(format!(
                    "constituent {} has degree {} above the dimension hint {}",
                    i + 1,
                    c.degree().unwrap(),
                    dim
                )));
            }
        }
        self.dimension_hint = Some(dim);
        Ok(self)
    }

    pub fn period(&self) -> usize {
        self.constituents.len()
    }

    pub fn constituents(&self) -> &[Polynomial] {
        &self.constituents
    }

    pub fn dimension_hint(&self) -> Option<usize> {
        self.dimension_hint
    }

    /// Constituent `f_j` for `j` in `1..=period`.
    pub fn constituent(&self, j: usize) -> &Polynomial {
        assert!(
            (1..=self.period()).contains(&j),
            "constituent index {} out of 1..={}",
            j,
            self.period()
        );
        &self.constituents[j - 1]
    }

    /// The representative of `n`'s residue class in `{1, …, π}`.
    pub fn residue_class(&self, n: i64) -> usize {
        let period = self.period() as i64;
        ((n - 1).mod_floor(&period) + 1) as usize
    }

    /// Exact evaluation at any integer via the residue rule.
    pub fn eval(&self, n: i64) -> Rational {
        self.constituent(self.residue_class(n)).eval(n)
    }

    /// Largest constituent degree, or `None` if all constituents are zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.constituents.iter().filter_map(Polynomial::degree).max()
    }

    /// The smallest divisor `d` of the stored period such that constituents
    /// repeat with period `d`.
    pub fn minimal_period(&self) -> usize {
        let period = self.period();
        divisors(period)
            .into_iter()
            .find(|&d| {
                (0..period).all(|i| self.constituents[i] == self.constituents[i % d])
            })
            .unwrap_or(period)
    }

    /// The equivalent quasi-polynomial with the minimal period.
    pub fn reduced(&self) -> QuasiPolynomial {
        let d = self.minimal_period();
        QuasiPolynomial {
            constituents: self.constituents[..d].to_vec(),
            dimension_hint: self.dimension_hint,
        }
    }

    /// Per-coefficient periods `[s_0, …, s_d]`: `s_k` is the smallest divisor
    /// of the period such that the `n^k` coefficient depends only on the
    /// residue modulo `s_k`. The list length is `d + 1` with `d` the
    /// dimension hint when set, otherwise the maximal constituent degree.
    pub fn coefficient_periods(&self) -> Vec<usize> {
        let period = self.period();
        let top = self.dimension_hint.or(self.max_degree()).unwrap_or(0);
        (0..=top)
            .map(|k| {
                divisors(period)
                    .into_iter()
                    .find(|&d| {
                        (0..period).all(|i| {
                            self.constituents[i].coeff(k) == self.constituents[i % d].coeff(k)
                        })
                    })
                    .unwrap_or(period)
            })
            .collect()
    }

    /// The same function stored with period `factor · π` (constituents
    /// replicated).
    pub fn expanded(&self, factor: usize) -> QuasiPolynomial {
        assert!(factor >= 1, "expansion factor must be positive");
        let period = self.period();
        let constituents = (0..period * factor)
            .map(|i| self.constituents[i % period].clone())
            .collect();
        QuasiPolynomial {
            constituents,
            dimension_hint: self.dimension_hint,
        }
    }

    /// Whether `self` and `other` are equal as functions on `ℤ`
    /// (their reduced forms coincide).
    pub fn equivalent_to(&self, other: &QuasiPolynomial) -> bool {
        self.reduced().constituents == other.reduced().constituents
    }
}

/// Renders one line per constituent: `j: c_d n^d + ... + c_0`.
impl std::fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, c) in self.constituents.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", i + 1, c)?;
        }
        Ok(())
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
