//! Dense nonnegative integer matrices with exact rank.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

/// A row-major nonnegative integer matrix. Tiling matrices have one row per
/// free row of a pattern and one column per free tile.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TilingMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl TilingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        TilingMatrix {
            rows,
            cols,
            data: alloc::vec![0; rows * cols],
        }
    }

    /// Builds a matrix from row vectors; `None` if they are ragged.
    /// An empty list gives a `0 x cols` matrix only through [`Self::zeros`].
    pub fn from_rows(rows: &[Vec<u64>]) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(TilingMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u64) {
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Column sums.
    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.get(r, c)).sum())
            .collect()
    }

    /// Reorders the columns: column `k` of the result is column `perm[k]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        let mut out = TilingMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for (k, &src) in perm.iter().enumerate() {
                out.set(r, k, self.get(r, src));
            }
        }
        out
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate entry is a minor of the input, so all divisions are
    /// exact and no fractions appear.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let mut prev_pivot = BigInt::from(1);
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let (head, tail) = a.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            let pivot = pivot_row[col].clone();
            for row in tail.iter_mut() {
                let factor = row[col].clone();
                for k in col + 1..self.cols {
                    let v = &pivot * &row[k] - &factor * &pivot_row[k];
                    row[k] = v / &prev_pivot;
                }
                row[col] = BigInt::zero();
            }
            prev_pivot = pivot;
            rank += 1;
        }
        rank
    }

    /// `cols - rank`, the dimension of the kernel.
    pub fn kernel_dimension(&self) -> usize {
        self.cols - self.rank()
    }
}
