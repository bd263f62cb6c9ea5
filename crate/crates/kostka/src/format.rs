//! Text formats: comma-separated weight vectors and row-per-line pattern
//! files.
//!
//! A pattern file lists rows bottom row first, one row per line, entries
//! separated by whitespace and written as integers or `p/q`. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use kostka_core::gt::GtPattern;
use kostka_core::tiling::Tiling;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("invalid weight entry {0:?}: expected a nonnegative integer")]
    BadWeight(String),
    #[error("invalid rational {0:?}: expected an integer or p/q")]
    BadRational(String),
    #[error("pattern row {row} has {found} entries, expected {row}")]
    RaggedPattern { row: usize, found: usize },
    #[error("pattern file has no rows")]
    EmptyPattern,
}

/// Parses `"4,2,2,0,0,0"`. The empty string is the empty vector.
pub fn parse_weights(s: &str) -> Result<Vec<u64>, FormatError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.parse::<u64>()
                .map_err(|_| FormatError::BadWeight(part.to_string()))
        })
        .collect()
}

pub fn render_weights(parts: &[u64]) -> String {
    parts
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses an integer or `p/q` (with nonzero `q`).
pub fn parse_rational(s: &str) -> Result<BigRational, FormatError> {
    let bad = || FormatError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// Comma-separated rationals, e.g. `"5/2,1,1,-1/3"`.
pub fn parse_rational_weights(s: &str) -> Result<Vec<BigRational>, FormatError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// `p/q` in lowest terms, or a bare integer.
pub fn render_rational(q: &BigRational) -> String {
    q.to_string()
}

pub fn parse_pattern(text: &str) -> Result<GtPattern<BigRational>, FormatError> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        let expected = rows.len() + 1;
        if row.len() != expected {
            return Err(FormatError::RaggedPattern {
                row: expected,
                found: row.len(),
            });
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(FormatError::EmptyPattern);
    }
    Ok(GtPattern::from_rows(rows).expect("row lengths checked"))
}

pub fn render_pattern(x: &GtPattern<BigRational>) -> String {
    let mut out = String::new();
    for row in x.rows() {
        let line: Vec<String> = row.iter().map(render_rational).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Draws the tiling as a triangle, top row first, each cell labelled with
/// its tile index. Non-free tiles carry a `*`.
pub fn render_tiling(tiling: &Tiling) -> String {
    let r = tiling.r();
    let labels = tiling.labels();
    let free = tiling.free_flags();
    // Even column width so each row can be offset by half a cell.
    let longest = labels.iter().map(|&t| t.to_string().len() + 1).max().unwrap_or(1);
    let width = (longest + 3) / 2 * 2;
    let mut out = String::new();
    for j in (1..=r).rev() {
        let indent = (r - j) * width / 2;
        out.push_str(&" ".repeat(indent));
        for i in 1..=j {
            let t = labels[kostka_core::gt::index(i, j)];
            let label = if free[t] {
                t.to_string()
            } else {
                format!("{t}*")
            };
            let _ = write!(out, "{label:<width$}");
        }
        let trimmed = out.trim_end().len();
        out.truncate(trimmed);
        out.push('\n');
    }
    out
}
