//! JSON encodings of tilings, tiling matrices, polynomials and the CLI's
//! reports.
//!
//! Big integers and rationals are written as strings (`"12"`, `"3/2"`) so no
//! precision is lost on the way through a JSON reader.

use kostka_core::matrix::TilingMatrix;
use kostka_core::poly::RationalPolynomial;
use kostka_core::tiling::Tiling;
use serde::{Deserialize, Serialize};

use crate::format::{parse_rational, render_rational, FormatError};

/// `{"r": 3, "tiles": [[[1,1]], [[1,2],[1,3]], ...], "free": [false, ...]}`
/// with one-based `[i, j]` cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingJson {
    pub r: usize,
    pub tiles: Vec<Vec<[usize; 2]>>,
    pub free: Vec<bool>,
}

impl From<&Tiling> for TilingJson {
    fn from(t: &Tiling) -> Self {
        TilingJson {
            r: t.r(),
            tiles: t
                .tiles()
                .iter()
                .map(|tile| tile.iter().map(|&(i, j)| [i, j]).collect())
                .collect(),
            free: t.free_flags().to_vec(),
        }
    }
}

impl TryFrom<&TilingJson> for Tiling {
    type Error = kostka_core::Error;

    fn try_from(t: &TilingJson) -> Result<Self, Self::Error> {
        let tiling = Tiling::from_tiles(
            t.r,
            t.tiles
                .iter()
                .map(|tile| tile.iter().map(|&[i, j]| (i, j)).collect())
                .collect(),
        )?;
        if tiling.free_flags() != t.free.as_slice() {
            return Err(kostka_core::Error::InvalidTiling);
        }
        Ok(tiling)
    }
}

/// Row-major integer rows.
pub fn matrix_rows(a: &TilingMatrix) -> Vec<Vec<u64>> {
    a.to_rows()
}

/// `{"coeffs": ["1", "1/2", ...]}`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<String>,
}

impl From<&RationalPolynomial> for PolynomialJson {
    fn from(p: &RationalPolynomial) -> Self {
        PolynomialJson {
            coeffs: p.coeffs().iter().map(render_rational).collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for RationalPolynomial {
    type Error = FormatError;

    fn try_from(p: &PolynomialJson) -> Result<Self, Self::Error> {
        let coeffs = p
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RationalPolynomial::new(coeffs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaReport {
    pub lambda: Vec<u64>,
    pub beta: Vec<u64>,
    pub count: String,
    /// The tableau count, present with `--verify`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ssyt_count: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub lambda: Vec<u64>,
    pub beta: Vec<u64>,
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub interpolated: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub lambda: Vec<u64>,
    pub beta: Vec<u64>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecePair {
    pub lambda: Vec<u64>,
    pub beta: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub lambda: Vec<u64>,
    pub beta: Vec<u64>,
    pub sorted_beta: Vec<u64>,
    pub beta_was_reordered: bool,
    pub split_indices: Vec<usize>,
    pub pairs: Vec<PiecePair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingReport {
    /// Rows bottom first.
    pub pattern: Vec<Vec<String>>,
    pub tiling: TilingJson,
    pub matrix: Vec<Vec<u64>>,
    pub kernel_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTerm {
    pub beta: Vec<u64>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurReport {
    pub lambda: Vec<u64>,
    pub terms: Vec<SchurTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<String>,
}
