//! Stretched Kostka coefficients `n -> K(n lambda, n beta)`.
//!
//! Values come from lattice-point counts of the dilated GT-polytopes; the
//! polynomial is recovered by exact interpolation at `n = 1, ..., d + 2`,
//! where `d` is the degree predicted from the primitive decomposition. The
//! last sample is held out to check the fit.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::gt::count_dilated;
use crate::poly::{interpolate, RationalPolynomial};
use crate::tiling::dim_gt_polytope;
use crate::weights::{primitive_decomposition, Composition, Partition};
use crate::{Error, Result};

/// `[K(n lambda, n beta) for n in 1..=count]`.
pub fn stretched_values(lambda: &Partition, beta: &Composition, count: u64) -> Result<Vec<BigUint>> {
    (1..=count).map(|n| count_dilated(lambda, beta, n)).collect()
}

/// Interpolates `count` dilation counts without any degree expectation.
/// Needs `count >= 2`; fails with [`Error::DegreeOverflow`] when the true
/// degree exceeds `count - 2`.
pub fn interpolate_stretched(
    lambda: &Partition,
    beta: &Composition,
    count: u64,
) -> Result<RationalPolynomial> {
    let values = stretched_values(lambda, beta, count)?;
    let poly = interpolate(&values)?;
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly)
}

/// The stretched Kostka polynomial of a dominated pair.
///
/// Samples `dim GT + 2` dilations and insists that the interpolated degree
/// equals the formula degree.
pub fn stretched_polynomial(lambda: &Partition, beta: &Composition) -> Result<RationalPolynomial> {
    let formula = dim_gt_polytope(lambda, beta)?;
    let poly = interpolate_stretched(lambda, beta, formula as u64 + 2)?;
    let interpolated = poly.degree().ok_or(Error::ZeroPolynomial)?;
    if interpolated != formula {
        return Err(Error::DegreeMismatch {
            formula,
            interpolated,
        });
    }
    Ok(poly)
}

/// Degree of the stretched Kostka polynomial from the formula alone; no
/// counting happens here.
pub fn degree_stretched(lambda: &Partition, beta: &Composition) -> Result<usize> {
    dim_gt_polytope(lambda, beta)
}

/// Whether the stretched polynomial of `(lambda, beta)` is the product of
/// the stretched polynomials of its primitive pieces.
pub fn factorization_check(lambda: &Partition, beta: &Composition) -> Result<bool> {
    let whole = stretched_polynomial(lambda, beta)?;
    let decomposition = primitive_decomposition(lambda, beta)?;
    let mut product = RationalPolynomial::constant(BigRational::one());
    for (piece, piece_beta) in &decomposition.pairs {
        let factor = stretched_polynomial(piece, &piece_beta.to_composition())?;
        product = product.mul(&factor);
    }
    Ok(product == whole)
}

/// Whether every coefficient is nonnegative.
pub fn positivity_check(poly: &RationalPolynomial) -> bool {
    poly.coeffs().iter().all(|c| !c.is_negative())
}
