//! Gelfand-Tsetlin patterns and exact Kostka counting.
//!
//! A pattern of size `r` is a triangular array `x[i][j]`, `1 <= i <= j <= r`.
//! Row `j` holds `x[1][j], ..., x[j][j]`; row 1 is the single bottom entry
//! and row `r` is the top row. Entries are stored row by row from the bottom
//! up and left to right within a row, which is also the reading order used
//! to index free tiles.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Sub};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::weights::{compositions_of, sort_to_partition, Composition, Partition};
use crate::{Error, Result};

/// Position of `(i, j)` (one-based) in the bottom-up, left-to-right storage.
pub fn index(i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j);
    j * (j - 1) / 2 + (i - 1)
}

/// The one-based `(i, j)` stored at position `k`.
pub fn position(k: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2 + 1, j)
}

/// Number of entries of a size-`r` triangular array, `C(r + 1, 2)`.
pub fn ambient_dimension(r: usize) -> usize {
    r * (r + 1) / 2
}

/// A triangular array; not necessarily satisfying the interlacing
/// inequalities (see [`GtPattern::is_gt_pattern`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtPattern<T> {
    r: usize,
    entries: Vec<T>,
}

impl<T> GtPattern<T> {
    /// Builds an array from its entries in storage order.
    pub fn from_entries(entries: Vec<T>) -> Result<Self> {
        let n = entries.len();
        let mut r = 0;
        while ambient_dimension(r) < n {
            r += 1;
        }
        if r == 0 || ambient_dimension(r) != n {
            return Err(Error::BadPatternShape { entries: n });
        }
        Ok(GtPattern { r, entries })
    }

    /// Builds an array from rows listed bottom row first; row `j` must have
    /// `j` entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let total: usize = rows.iter().map(Vec::len).sum();
        if rows.is_empty() || rows.iter().enumerate().any(|(k, row)| row.len() != k + 1) {
            return Err(Error::BadPatternShape { entries: total });
        }
        Ok(GtPattern {
            r: rows.len(),
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// Entry `x[i][j]`, one-based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[index(i, j)]
    }

    /// Row `j` (one-based), left to right.
    pub fn row(&self, j: usize) -> &[T] {
        let start = index(1, j);
        &self.entries[start..start + j]
    }

    /// Rows from the bottom (`j = 1`) up.
    pub fn rows(&self) -> impl Iterator<Item = &[T]> + '_ {
        (1..=self.r).map(move |j| self.row(j))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> GtPattern<U> {
        GtPattern {
            r: self.r,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> GtPattern<T> {
    /// The pattern `x[i][j] = lambda_i`; a GT-pattern whenever `lambda` is
    /// weakly decreasing.
    pub fn constant(lambda: &[T]) -> Result<Self> {
        let r = lambda.len();
        let mut entries = Vec::with_capacity(ambient_dimension(r));
        for j in 1..=r {
            entries.extend_from_slice(&lambda[..j]);
        }
        GtPattern::from_entries(entries)
    }

    /// Highest weight: the top row `(x[1][r], ..., x[r][r])`.
    pub fn hwt(&self) -> Vec<T> {
        self.row(self.r).to_vec()
    }
}

impl<T> GtPattern<T>
where
    T: Clone + Zero + for<'a> Add<&'a T, Output = T> + Sub<Output = T>,
{
    /// Weight: `beta_j` is the sum of row `j` minus the sum of row `j - 1`.
    pub fn wt(&self) -> Vec<T> {
        let mut prev = T::zero();
        self.rows()
            .map(|row| {
                let sum = row.iter().fold(T::zero(), |acc, x| acc + x);
                let beta = sum.clone() - prev.clone();
                prev = sum;
                beta
            })
            .collect()
    }
}

impl<T: PartialOrd> GtPattern<T> {
    /// Checks `x[i][j+1] >= x[i][j] >= x[i+1][j+1]` for `1 <= i <= j < r`.
    pub fn is_gt_pattern(&self) -> bool {
        (1..self.r).all(|j| {
            (1..=j).all(|i| {
                let x = self.get(i, j);
                self.get(i, j + 1) >= x && x >= self.get(i + 1, j + 1)
            })
        })
    }
}

/// Calls `f` with every integer row `x` of length `above.len() - 1` that
/// interlaces `above` (`above[k] >= x[k] >= above[k + 1]`) and sums to `sum`.
/// Rows are produced in lexicographic order.
pub fn for_each_interlacing_row(above: &[u64], sum: u64, mut f: impl FnMut(&[u64])) {
    let len = above.len().saturating_sub(1);
    // suffix_lo[k] / suffix_hi[k]: least / greatest possible sum of x[k..].
    let mut suffix_lo = vec![0u64; len + 1];
    let mut suffix_hi = vec![0u64; len + 1];
    for k in (0..len).rev() {
        suffix_lo[k] = suffix_lo[k + 1] + above[k + 1];
        suffix_hi[k] = suffix_hi[k + 1] + above[k];
    }
    if sum < suffix_lo[0] || sum > suffix_hi[0] {
        return;
    }
    let mut row = Vec::with_capacity(len);
    fill(above, 0, sum, &suffix_lo, &suffix_hi, &mut row, &mut f);

    fn fill(
        above: &[u64],
        k: usize,
        rem: u64,
        lo: &[u64],
        hi: &[u64],
        row: &mut Vec<u64>,
        f: &mut impl FnMut(&[u64]),
    ) {
        if k == lo.len() - 1 {
            f(row);
            return;
        }
        // x[k] must leave a remainder reachable by x[k+1..].
        let min = above[k + 1].max(rem.saturating_sub(hi[k + 1]));
        let max = above[k].min(rem - lo[k + 1]);
        for x in min..=max {
            row.push(x);
            fill(above, k + 1, rem - x, lo, hi, row, f);
            row.pop();
        }
    }
}

fn check_lengths(lambda: &Partition, beta: &Composition) -> Result<()> {
    if lambda.len() != beta.len() {
        return Err(Error::LengthMismatch {
            lambda: lambda.len(),
            beta: beta.len(),
        });
    }
    Ok(())
}

/// `K_{lambda beta}` as the number of integer GT-patterns with highest
/// weight `lambda` and weight `beta`.
///
/// Rows are chosen from the top down. The weight fixes the sum of row `j`
/// to `beta_1 + ... + beta_j`, so each level only carries the distinct rows
/// reachable so far together with their multiplicities.
pub fn count_lattice_points(lambda: &Partition, beta: &Composition) -> Result<BigUint> {
    check_lengths(lambda, beta)?;
    let r = lambda.len();
    if lambda.size() != beta.size() {
        return Ok(BigUint::zero());
    }
    if r == 0 {
        return Ok(BigUint::one());
    }
    let prefix: Vec<u64> = beta
        .parts()
        .iter()
        .scan(0u64, |acc, &b| {
            *acc += b;
            Some(*acc)
        })
        .collect();

    let mut level: BTreeMap<Vec<u64>, BigUint> = BTreeMap::new();
    level.insert(lambda.parts().to_vec(), BigUint::one());
    for j in (1..r).rev() {
        let mut next: BTreeMap<Vec<u64>, BigUint> = BTreeMap::new();
        for (row, mult) in &level {
            for_each_interlacing_row(row, prefix[j - 1], |below| {
                *next.entry(below.to_vec()).or_insert_with(BigUint::zero) += mult;
            });
        }
        if next.is_empty() {
            return Ok(BigUint::zero());
        }
        level = next;
    }
    Ok(level.into_values().sum())
}

/// `K_{n lambda, n beta}`.
pub fn count_dilated(lambda: &Partition, beta: &Composition, n: u64) -> Result<BigUint> {
    count_lattice_points(&lambda.stretch(n), &beta.stretch(n))
}

/// `K_{lambda beta}` as the number of semistandard Young tableaux of shape
/// `lambda` and content `beta`, by plain backtracking over the cells.
pub fn kostka_ssyt(lambda: &Partition, beta: &Composition) -> Result<BigUint> {
    check_lengths(lambda, beta)?;
    if lambda.size() != beta.size() {
        return Ok(BigUint::zero());
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(row, &len)| (0..len).map(move |col| (row, col)))
        .collect();
    let mut remaining: Vec<u64> = beta.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut count: u64 = 0;
    place(&cells, 0, &mut grid, &mut remaining, &mut count);
    return Ok(BigUint::from(count));

    fn place(
        cells: &[(usize, usize)],
        k: usize,
        grid: &mut [Vec<usize>],
        remaining: &mut [u64],
        count: &mut u64,
    ) {
        let Some(&(row, col)) = cells.get(k) else {
            *count += 1;
            return;
        };
        // Values are 1-based letters; weakly increasing along rows,
        // strictly increasing down columns.
        let mut min = 1;
        if col > 0 {
            min = min.max(grid[row][col - 1]);
        }
        if row > 0 {
            min = min.max(grid[row - 1][col] + 1);
        }
        for v in min..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[row][col] = v;
            place(cells, k + 1, grid, remaining, count);
            remaining[v - 1] += 1;
        }
        grid[row][col] = 0;
    }
}

/// Monomial expansion of the Schur polynomial `s_lambda` in `r` variables:
/// `beta -> K_{lambda beta}` over compositions of `|lambda|`, zero
/// coefficients omitted.
pub fn schur_monomials(lambda: &Partition) -> BTreeMap<Composition, BigUint> {
    let mut by_sorted: BTreeMap<Partition, BigUint> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for beta in compositions_of(lambda.size(), lambda.len()) {
        let key = sort_to_partition(&beta);
        let coeff = by_sorted
            .entry(key)
            .or_insert_with_key(|sorted| {
                count_lattice_points(lambda, &sorted.to_composition())
                    .expect("lengths agree by construction")
            })
            .clone();
        if !coeff.is_zero() {
            out.insert(beta, coeff);
        }
    }
    out
}

/// Every integer GT-pattern with highest weight `lambda` and weight `beta`.
/// Exponential; meant for small sweeps.
pub fn enumerate_patterns(lambda: &Partition, beta: &Composition) -> Result<Vec<GtPattern<u64>>> {
    check_lengths(lambda, beta)?;
    let r = lambda.len();
    let mut out = Vec::new();
    if r == 0 || lambda.size() != beta.size() {
        return Ok(out);
    }
    let prefix: Vec<u64> = beta
        .parts()
        .iter()
        .scan(0u64, |acc, &b| {
            *acc += b;
            Some(*acc)
        })
        .collect();
    // Rows top-down; reversed into storage order at the leaf.
    let mut stack: Vec<Vec<u64>> = vec![lambda.parts().to_vec()];
    descend(&prefix, &mut stack, &mut out);
    return Ok(out);

    fn descend(prefix: &[u64], stack: &mut Vec<Vec<u64>>, out: &mut Vec<GtPattern<u64>>) {
        let top = stack.last().expect("nonempty");
        if top.len() == 1 {
            let rows: Vec<Vec<u64>> = stack.iter().rev().cloned().collect();
            out.push(GtPattern::from_rows(rows).expect("triangular"));
            return;
        }
        let j = top.len() - 1;
        let mut belows = Vec::new();
        for_each_interlacing_row(top, prefix[j - 1], |row| belows.push(row.to_vec()));
        for row in belows {
            stack.push(row);
            descend(prefix, stack, out);
            stack.pop();
        }
    }
}
