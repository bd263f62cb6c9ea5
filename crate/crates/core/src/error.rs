use core::fmt;

/// Errors raised by the operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two weight vectors that must share a length do not.
    LengthMismatch { lambda: usize, beta: usize },
    /// A vector required to be a partition is not weakly decreasing.
    NotWeaklyDecreasing,
    /// `beta` is not dominated by `lambda`, so the GT-polytope is empty.
    NotDominated,
    /// A triangular array violates the Gelfand-Tsetlin inequalities.
    NotGtPattern,
    /// A triangular array does not have `r(r+1)/2` entries.
    BadPatternShape { entries: usize },
    /// A list of tiles does not partition the index triangle.
    InvalidTiling,
    /// The degree formula was asked about a partition with a single distinct
    /// part and at least two rows.
    SinglePartValue { r: usize },
    /// Interpolation needs at least two values, one of them held out.
    NoSparePoint,
    /// The held-out value does not lie on the interpolating polynomial.
    DegreeOverflow,
    /// The interpolated degree disagrees with the degree formula.
    DegreeMismatch { formula: usize, interpolated: usize },
    /// Interpolation produced the zero polynomial where a count of at least
    /// one was expected.
    ZeroPolynomial,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { lambda, beta } => write!(
                f,
                "lambda and beta must have the same length (got {lambda} and {beta})"
            ),
            Error::NotWeaklyDecreasing => f.write_str("lambda is not weakly decreasing"),
            Error::NotDominated => f.write_str("beta is not dominated by lambda"),
            Error::NotGtPattern => {
                f.write_str("array violates the Gelfand-Tsetlin interlacing inequalities")
            }
            Error::BadPatternShape { entries } => write!(
                f,
                "a triangular array needs r(r+1)/2 entries, got {entries}"
            ),
            Error::InvalidTiling => {
                f.write_str("tiles must be disjoint, nonempty and cover the index triangle")
            }
            Error::SinglePartValue { r } => write!(
                f,
                "degree formula needs at least two distinct parts when r = {r} >= 2"
            ),
            Error::NoSparePoint => {
                f.write_str("interpolation needs at least two values (one spare for validation)")
            }
            Error::DegreeOverflow => f.write_str(
                "degree overflow: the spare value does not fit the interpolating polynomial",
            ),
            Error::DegreeMismatch {
                formula,
                interpolated,
            } => write!(
                f,
                "interpolated degree {interpolated} disagrees with formula degree {formula}"
            ),
            Error::ZeroPolynomial => f.write_str("interpolation produced the zero polynomial"),
        }
    }
}

impl core::error::Error for Error {}
