//! Exact rational polynomials in one variable and finite-difference fitting.
//!
//! Sequences like `ir(I^n)` agree with a polynomial for large `n` but carry
//! no effective bound on where the agreement starts. [`fit_polynomial`]
//! therefore certifies a tail: it takes the smallest degree `d` whose
//! `(d+1)`-st forward differences vanish on an entire tail of the window,
//! requiring at least `d + 3` supporting points, and refuses to guess
//! otherwise. All arithmetic is exact.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::FitError;

/// A dense polynomial with exact rational coefficients, constant term first.
/// Trailing zero coefficients are trimmed; the zero polynomial has no
/// coefficients and no degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(value: BigRational) -> Self {
        Self::new(vec![value])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn evaluate(&self, n: &BigInt) -> BigRational {
        let x = BigRational::from_integer(n.clone());
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn evaluate_at(&self, n: i64) -> BigRational {
        self.evaluate(&BigInt::from(n))
    }

    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::new(coeffs)
    }

    fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Coefficients as exact `p/q` strings, constant term first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{}", mag.numer())?;
                if !mag.denom().is_one() {
                    write!(f, "/{}", mag.denom())?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{}n", if unit_coeff { "" } else { "*" })?,
                _ => write!(f, "{}n^{}", if unit_coeff { "" } else { "*" }, k)?,
            }
        }
        Ok(())
    }
}

/// The falling-factorial binomial `C(n - origin, k)` expanded in `n`.
fn binomial_basis(origin: i64, k: usize) -> RationalPolynomial {
    let mut acc = RationalPolynomial::constant(BigRational::one());
    for i in 0..k {
        // factor (n - origin - i)
        let shift = BigRational::from_integer(BigInt::from(-(origin + i as i64)));
        let factor = RationalPolynomial::new(vec![shift, BigRational::one()]);
        acc = acc.mul(&factor);
    }
    let mut k_factorial = BigRational::one();
    for i in 1..=k {
        k_factorial *= BigRational::from_integer(BigInt::from(i as i64));
    }
    acc.scale(&k_factorial.recip())
}

fn forward_differences(values: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut table = vec![values.to_vec()];
    while table.last().map(Vec::len).unwrap_or(0) > 1 {
        let prev = table.last().expect("nonempty");
        let next: Vec<BigInt> = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        table.push(next);
    }
    table
}

/// Fits the smallest-degree polynomial that reproduces a certified tail of
/// the sequence exactly. `values[i]` is the sequence value at `n_start + i`.
///
/// A degree `d` is accepted at tail start `s` when the `(d+1)`-st forward
/// differences of `values[s..]` are all zero and the tail has at least
/// `d + 3` points. The returned polynomial is the Newton forward form
/// `sum_k diff^k f(t) * C(n - t, k)` expanded over the rationals, with `t`
/// the certified tail start. Values before the tail may disagree; that is
/// the point of tail certification.
pub fn fit_polynomial(values: &[u64], n_start: i64) -> Result<RationalPolynomial, FitError> {
    if values.len() < 4 {
        return Err(FitError::InsufficientData { need: 4, got: values.len() });
    }
    let len = values.len();
    let big: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
    for degree in 0..=len.saturating_sub(3) {
        for start in 0..=(len - (degree + 3)) {
            let table = forward_differences(&big[start..]);
            let Some(row) = table.get(degree + 1) else { continue };
            if row.is_empty() || !row.iter().all(Zero::is_zero) {
                continue;
            }
            let origin = n_start + start as i64;
            let mut poly = RationalPolynomial::zero();
            for (k, row) in table.iter().enumerate().take(degree + 1) {
                let lead = BigRational::from_integer(row[0].clone());
                poly = poly.add(&binomial_basis(origin, k).scale(&lead));
            }
            return Ok(poly);
        }
    }
    Err(FitError::NotStabilized)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn fits_a_shifted_line() {
        let p = fit_polynomial(&[2, 3, 4, 5, 6], 1).unwrap();
        assert_eq!(p, RationalPolynomial::from_integers(&[1, 1]));
        assert_eq!(p.to_string(), "n + 1");
    }

    #[test]
    fn fits_a_constant() {
        let p = fit_polynomial(&[5, 5, 5, 5], 1).unwrap();
        assert_eq!(p, RationalPolynomial::from_integers(&[5]));
        assert_eq!(p.degree(), Some(0));
    }

    #[test]
    fn fits_the_triangular_numbers() {
        // n(n+1)/2: second differences are constant
        let p = fit_polynomial(&[1, 3, 6, 10, 15], 1).unwrap();
        assert_eq!(p.degree(), Some(2));
        for n in 1..=12 {
            assert_eq!(p.evaluate_at(n), rat(n * (n + 1) / 2));
        }
    }

    #[test]
    fn certifies_a_tail_after_noise() {
        // junk at n=1..2, then 3n from n=3 on; needs d+3 = 4 tail points
        let p = fit_polynomial(&[7, 1, 9, 12, 15, 18], 1).unwrap();
        assert_eq!(p, RationalPolynomial::from_integers(&[0, 3]));
        assert_eq!(p.evaluate_at(4), rat(12));
    }

    #[test]
    fn refuses_unstable_sequences() {
        assert_eq!(fit_polynomial(&[1, 2, 4, 8, 16, 32], 1), Err(FitError::NotStabilized));
        assert_eq!(
            fit_polynomial(&[1, 2, 3], 1),
            Err(FitError::InsufficientData { need: 4, got: 3 })
        );
    }

    #[test]
    fn exactness_on_every_tail_point() {
        let values = [4, 10, 20, 35, 56, 84];
        // C(n+3, 3) starting at n=1
        let p = fit_polynomial(&values, 1).unwrap();
        assert_eq!(p.degree(), Some(3));
        for (i, &v) in values.iter().enumerate() {
            assert_eq!(p.evaluate_at(1 + i as i64), rat(v as i64));
        }
    }

    #[test]
    fn display_shows_rational_coefficients() {
        let p = fit_polynomial(&[1, 3, 6, 10, 15], 1).unwrap();
        assert_eq!(p.to_string(), "1/2*n^2 + 1/2*n");
        assert_eq!(p.coefficient_strings(), vec!["0/1", "1/2", "1/2"]);
    }
}
