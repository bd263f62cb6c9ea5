//! Univariate polynomials with exact rational coefficients and Newton
//! forward-difference interpolation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A polynomial in `n`, coefficients listed constant term first. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    /// Strips trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPolynomial::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, n: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_int(&self, n: i64) -> BigRational {
        self.eval(&BigRational::from_integer(n.into()))
    }

    pub fn mul(&self, other: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            for (b, y) in other.coeffs.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        RationalPolynomial::new(out)
    }

    fn add_scaled(&mut self, other: &RationalPolynomial, scale: &BigRational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * scale;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Multiplies by `(n - root) / divisor`.
    fn mul_linear(&self, root: &BigRational, divisor: &BigRational) -> RationalPolynomial {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c / divisor;
            out[k] -= c * root / divisor;
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    /// `a_d n^d + ... + a_1 n + a_0`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
                if k > 0 {
                    f.write_str(" ")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("n")?,
                _ => write!(f, "n^{k}")?,
            }
        }
        Ok(())
    }
}

/// Forward-difference table of `values`: row `k` holds `Δ^k f`.
pub fn forward_differences(values: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut table = Vec::with_capacity(values.len());
    let mut row = values.to_vec();
    while !row.is_empty() {
        let next: Vec<BigInt> = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        table.push(row);
        row = next;
    }
    table
}

/// Smallest `d` such that `Δ^{d+1}` vanishes identically on the data, or
/// `None` if no difference row of the table vanishes.
pub fn stabilized_degree(values: &[BigInt]) -> Option<usize> {
    let table = forward_differences(values);
    let vanishing = table.iter().position(|row| row.iter().all(Zero::is_zero))?;
    Some(vanishing.saturating_sub(1))
}

/// The polynomial through `(n, values[n-1])` for `n = 1..N-1`, checked
/// against the held-out value at `n = N`.
///
/// Newton's forward form `f(n) = sum_k Δ^k f(1) C(n-1, k)` is expanded into
/// monomials over the rationals.
pub fn interpolate<T: Clone + Into<BigInt>>(values: &[T]) -> Result<RationalPolynomial> {
    if values.len() < 2 {
        return Err(Error::NoSparePoint);
    }
    let values: Vec<BigInt> = values.iter().cloned().map(Into::into).collect();
    let fit = &values[..values.len() - 1];
    let leading: Vec<BigInt> = forward_differences(fit)
        .into_iter()
        .map(|row| row[0].clone())
        .collect();

    let mut poly = RationalPolynomial::zero();
    // basis = C(n - 1, k)
    let mut basis = RationalPolynomial::constant(BigRational::one());
    for (k, delta) in leading.iter().enumerate() {
        if k > 0 {
            let kq = BigRational::from_integer(BigInt::from(k));
            basis = basis.mul_linear(&kq, &kq);
        }
        if !delta.is_zero() {
            poly.add_scaled(&basis, &BigRational::from_integer(delta.clone()));
        }
    }

    let n = values.len() as i64;
    if poly.eval_int(n) != BigRational::from_integer(values[values.len() - 1].clone()) {
        return Err(Error::DegreeOverflow);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn interpolation_examples() {
        let p = interpolate(&ints(&[2, 3, 4, 5])).unwrap();
        assert_eq!(p.coeffs(), &[q(1), q(1)]);
        let p = interpolate(&ints(&[1, 1, 1])).unwrap();
        assert_eq!(p.coeffs(), &[q(1)]);
        assert_eq!(interpolate(&ints(&[7])), Err(Error::NoSparePoint));
        assert_eq!(interpolate::<BigInt>(&[]), Err(Error::NoSparePoint));
    }

    #[test]
    fn degree_overflow_detected() {
        // n^2 sampled at 1..3 does not fit a line through the first two.
        assert_eq!(interpolate(&ints(&[1, 4, 9])), Err(Error::DegreeOverflow));
        assert!(interpolate(&ints(&[1, 4, 9, 16])).is_ok());
    }

    #[test]
    fn triangular_numbers() {
        // n(n+1)/2
        let p = interpolate(&ints(&[1, 3, 6, 10, 15])).unwrap();
        assert_eq!(p.coeffs(), &[q(0), frac(1, 2), frac(1, 2)]);
        assert_eq!(p.to_string(), "1/2 n^2 + 1/2 n");
    }

    #[test]
    fn differences() {
        let t = forward_differences(&ints(&[2, 3, 4, 5]));
        assert_eq!(t[0][0], 2.into());
        assert_eq!(t[1][0], 1.into());
        assert_eq!(t[2][0], 0.into());
        assert_eq!(stabilized_degree(&ints(&[2, 3, 4, 5])), Some(1));
        assert_eq!(stabilized_degree(&ints(&[1, 1, 1])), Some(0));
        assert_eq!(stabilized_degree(&ints(&[1, 4, 9])), None);
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(RationalPolynomial::new(ints(&[1, 1]).into_iter().map(BigRational::from_integer).collect()).to_string(), "n + 1");
        assert_eq!(RationalPolynomial::new(vec![q(-1), q(1)]).to_string(), "n - 1");
        assert_eq!(RationalPolynomial::new(vec![q(3), q(0), q(-2)]).to_string(), "-2 n^2 + 3");
        assert_eq!(RationalPolynomial::constant(q(1)).to_string(), "1");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
        assert_eq!(RationalPolynomial::new(vec![q(0), q(0)]), RationalPolynomial::zero());
    }

    #[test]
    fn multiplication() {
        let a = RationalPolynomial::new(vec![q(1), q(1)]);
        let b = RationalPolynomial::new(vec![q(-1), q(1)]);
        assert_eq!(a.mul(&b).coeffs(), &[q(-1), q(0), q(1)]);
        assert!(a.mul(&RationalPolynomial::zero()).is_zero());
    }

    proptest! {
        #[test]
        fn recovers_integer_polynomials(coeffs in proptest::collection::vec(-20i64..20, 1..7)) {
            let p = RationalPolynomial::new(coeffs.iter().map(|&c| q(c)).collect());
            let deg = p.degree().unwrap_or(0);
            let values: Vec<BigInt> = (1..=deg as i64 + 2)
                .map(|n| p.eval_int(n).to_integer())
                .collect();
            prop_assert_eq!(interpolate(&values).unwrap(), p);
        }

        #[test]
        fn extra_points_do_not_change_the_fit(coeffs in proptest::collection::vec(-9i64..9, 1..5), extra in 0usize..4) {
            let p = RationalPolynomial::new(coeffs.iter().map(|&c| q(c)).collect());
            let deg = p.degree().unwrap_or(0);
            let values: Vec<BigInt> = (1..=(deg + 2 + extra) as i64)
                .map(|n| p.eval_int(n).to_integer())
                .collect();
            let fit = interpolate(&values).unwrap();
            prop_assert_eq!(&fit, &p);
            for (n, v) in values.iter().enumerate() {
                prop_assert_eq!(fit.eval_int(n as i64 + 1), BigRational::from_integer(v.clone()));
            }
        }
    }
}
