//! Tilings of GT-patterns, tiling matrices and the dimension formulas they
//! lead to.
//!
//! The tiling of a pattern groups equal entries that are adjacent along the
//! two diagonal directions of the triangle. Tiles avoiding both the bottom
//! entry `(1,1)` and the top row are *free*; the kernel dimension of the
//! tiling matrix (free-row entries per free tile) is the dimension of the
//! smallest face of the GT-polytope containing the pattern.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::gt::{ambient_dimension, index, position, GtPattern};
use crate::matrix::TilingMatrix;
use crate::union_find::UnionFind;
use crate::weights::{multiplicities, primitive_decomposition, Composition, Partition};
use crate::{Error, Result};

/// One-based `(i, j)`: entry `i` of row `j`.
pub type Cell = (usize, usize);

/// A partition of the index triangle into tiles.
///
/// Tiles are kept in canonical form: cells inside a tile in reading order
/// (rows bottom to top, each row left to right), and tiles ordered by their
/// first cell in that same order. Free tiles are therefore indexed in the
/// order they are first met while reading the pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    r: usize,
    tiles: Vec<Vec<Cell>>,
    free: Vec<bool>,
}

fn is_free_tile(r: usize, tile: &[Cell]) -> bool {
    tile.iter().all(|&(i, j)| (i, j) != (1, 1) && j != r)
}

impl Tiling {
    /// Canonicalizes and validates a list of tiles covering the size-`r`
    /// triangle. Connectivity is not required here; see
    /// [`Tiling::tiles_connected`].
    pub fn from_tiles(r: usize, tiles: Vec<Vec<Cell>>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidTiling);
        }
        let n = ambient_dimension(r);
        let mut seen = vec![false; n];
        let mut keyed: Vec<Vec<usize>> = Vec::with_capacity(tiles.len());
        for tile in &tiles {
            if tile.is_empty() {
                return Err(Error::InvalidTiling);
            }
            let mut keys = Vec::with_capacity(tile.len());
            for &(i, j) in tile {
                if i == 0 || i > j || j > r {
                    return Err(Error::InvalidTiling);
                }
                let k = index(i, j);
                if core::mem::replace(&mut seen[k], true) {
                    return Err(Error::InvalidTiling);
                }
                keys.push(k);
            }
            keys.sort_unstable();
            keyed.push(keys);
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTiling);
        }
        keyed.sort_unstable_by_key(|keys| keys[0]);
        let tiles: Vec<Vec<Cell>> = keyed
            .into_iter()
            .map(|keys| keys.into_iter().map(position).collect())
            .collect();
        let free = tiles.iter().map(|t| is_free_tile(r, t)).collect();
        Ok(Tiling { r, tiles, free })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn tiles(&self) -> &[Vec<Cell>] {
        &self.tiles
    }

    /// Per tile, whether it is free.
    pub fn free_flags(&self) -> &[bool] {
        &self.free
    }

    /// Free tiles `T_1, ..., T_s` in index order.
    pub fn free_tiles(&self) -> impl Iterator<Item = &[Cell]> + '_ {
        self.tiles
            .iter()
            .zip(&self.free)
            .filter(|(_, &f)| f)
            .map(|(t, _)| t.as_slice())
    }

    /// `s`, the number of free tiles.
    pub fn free_count(&self) -> usize {
        self.free.iter().filter(|&&f| f).count()
    }

    /// For each cell in storage order, the index of its tile.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; ambient_dimension(self.r)];
        for (t, tile) in self.tiles.iter().enumerate() {
            for &(i, j) in tile {
                labels[index(i, j)] = t;
            }
        }
        labels
    }

    /// Whether every tile is connected under the adjacency moves
    /// `(i, j±1)` and `(i±1, j±1)`.
    pub fn tiles_connected(&self) -> bool {
        let labels = self.labels();
        let mut uf = UnionFind::new(labels.len());
        for_each_adjacent(self.r, |a, b| {
            if labels[a] == labels[b] {
                uf.union(a, b);
            }
        });
        self.tiles.iter().all(|tile| {
            let root = uf.find(index(tile[0].0, tile[0].1));
            tile.iter().all(|&(i, j)| uf.find(index(i, j)) == root)
        })
    }
}

/// Calls `f(a, b)` for each adjacent pair of storage positions: `(i, j)`
/// with its upper-left `(i, j+1)` and upper-right `(i+1, j+1)` neighbours.
fn for_each_adjacent(r: usize, mut f: impl FnMut(usize, usize)) {
    for j in 1..r {
        for i in 1..=j {
            let k = index(i, j);
            f(k, index(i, j + 1));
            f(k, index(i + 1, j + 1));
        }
    }
}

/// The tiling of a GT-pattern: connected components of equal adjacent
/// entries.
pub fn tiling<T: PartialOrd>(x: &GtPattern<T>) -> Result<Tiling> {
    if !x.is_gt_pattern() {
        return Err(Error::NotGtPattern);
    }
    let r = x.r();
    let entries = x.entries();
    let mut uf = UnionFind::new(entries.len());
    for_each_adjacent(r, |a, b| {
        if entries[a] == entries[b] {
            uf.union(a, b);
        }
    });
    // Group by root; first cell met in reading order fixes the tile order.
    let mut tile_of_root = vec![usize::MAX; entries.len()];
    let mut tiles: Vec<Vec<Cell>> = Vec::new();
    for k in 0..entries.len() {
        let root = uf.find(k);
        if tile_of_root[root] == usize::MAX {
            tile_of_root[root] = tiles.len();
            tiles.push(Vec::new());
        }
        tiles[tile_of_root[root]].push(position(k));
    }
    let free = tiles.iter().map(|t| is_free_tile(r, t)).collect();
    Ok(Tiling { r, tiles, free })
}

/// The `(r-2) x s` matrix whose entry `(j, k)` counts the cells of free
/// tile `k` lying in pattern row `j + 1`.
pub fn tiling_matrix(tiling: &Tiling) -> TilingMatrix {
    let rows = tiling.r.saturating_sub(2);
    let mut a = TilingMatrix::zeros(rows, tiling.free_count());
    for (k, tile) in tiling.free_tiles().enumerate() {
        for &(_, row) in tile {
            // Free tiles only meet rows 2..=r-1.
            a.set(row - 2, k, a.get(row - 2, k) + 1);
        }
    }
    a
}

/// `s - rank(A)`.
pub fn kernel_dimension(a: &TilingMatrix) -> usize {
    a.kernel_dimension()
}

/// Dimension of the smallest face of `GT(x)` containing the GT-pattern `x`.
pub fn min_face_dimension<T: PartialOrd>(x: &GtPattern<T>) -> Result<usize> {
    Ok(kernel_dimension(&tiling_matrix(&tiling(x)?)))
}

type Blocks<T> = (Vec<(T, usize)>, Vec<usize>);

/// Multiplicities `v_1, ..., v_m` and their running sums `V_0 = 0, ..., V_m = r`.
fn block_bounds<T: PartialOrd + Clone>(lambda: &[T]) -> Result<Blocks<T>> {
    let runs = multiplicities(lambda)?;
    let mut bounds = Vec::with_capacity(runs.len() + 1);
    bounds.push(0);
    for (_, v) in &runs {
        bounds.push(bounds.last().unwrap() + v);
    }
    Ok((runs, bounds))
}

/// The tiling shared by every point in the relative interior of `GT_lambda`.
///
/// For each block of `v_p` equal top-row values there is a triangular tile
/// `T_p = {(i, j) : V_{p-1} < i <= V_p - (r - j)}`; every other cell is a
/// tile on its own.
pub fn generic_interior_tiling<T: PartialOrd + Clone>(lambda: &[T]) -> Result<Tiling> {
    let r = lambda.len();
    if r == 0 {
        return Err(Error::InvalidTiling);
    }
    let (_, bounds) = block_bounds(lambda)?;
    let mut tiles = Vec::new();
    let mut covered = vec![false; ambient_dimension(r)];
    for p in 1..bounds.len() {
        let mut tile = Vec::new();
        for j in 1..=r {
            let hi = (bounds[p] + j).saturating_sub(r);
            for i in bounds[p - 1] + 1..=hi.min(j) {
                tile.push((i, j));
                covered[index(i, j)] = true;
            }
        }
        tiles.push(tile);
    }
    for (k, c) in covered.iter().enumerate() {
        if !c {
            tiles.push(vec![position(k)]);
        }
    }
    Tiling::from_tiles(r, tiles)
}

/// Number of free tiles of the generic interior tiling,
/// `C(r,2) - sum_p C(v_p,2) - 1`, for `m >= 2`.
pub fn generic_free_tile_count(r: usize, block_sizes: &[usize]) -> usize {
    choose2(r) - block_sizes.iter().map(|&v| choose2(v)).sum::<usize>() - 1
}

/// A point of the relative interior of `GT_lambda`.
///
/// Entries of each triangle `T_p` equal `kappa_p`. The remaining cells on
/// the diagonals `V_{p-1} < i <= V_p` form `S_p`; read diagonal by diagonal
/// from left to right, each diagonal from its upper-left end down, they get
/// the equally spaced, strictly decreasing values
/// `kappa_p - t (kappa_p - kappa_{p+1}) / (L + 1)`, `t = 1..=L`.
pub fn interior_point(lambda: &[BigRational]) -> Result<GtPattern<BigRational>> {
    let r = lambda.len();
    if r == 0 {
        return Err(Error::BadPatternShape { entries: 0 });
    }
    let (runs, bounds) = block_bounds(lambda)?;
    let mut entries: Vec<Option<BigRational>> = vec![None; ambient_dimension(r)];
    for p in 1..bounds.len() {
        let kappa = &runs[p - 1].0;
        for j in 1..=r {
            let hi = (bounds[p] + j).saturating_sub(r);
            for i in bounds[p - 1] + 1..=hi.min(j) {
                entries[index(i, j)] = Some(kappa.clone());
            }
        }
    }
    for p in 1..runs.len() {
        let (upper, lower) = (&runs[p - 1].0, &runs[p].0);
        let mut cells = Vec::new();
        for i in bounds[p - 1] + 1..=bounds[p] {
            // Cells of diagonal i below T_p: j < r - V_p + i.
            let top = r - bounds[p] + i;
            for j in (i..top).rev() {
                cells.push(index(i, j));
            }
        }
        let step = (upper - lower) / BigRational::from_integer((cells.len() + 1).into());
        let mut value = upper.clone();
        for k in cells {
            value -= &step;
            entries[k] = Some(value.clone());
        }
    }
    let entries = entries
        .into_iter()
        .map(|e| e.expect("every cell lies in some T_p or S_p"))
        .collect();
    GtPattern::from_entries(entries)
}

/// `interior_point` for integer partitions.
pub fn interior_point_of(lambda: &Partition) -> Result<GtPattern<BigRational>> {
    let parts: Vec<BigRational> = lambda
        .parts()
        .iter()
        .map(|&p| BigRational::from_integer(p.into()))
        .collect();
    interior_point(&parts)
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `C(r-1, 2) - sum_p C(v_p, 2)` for weakly decreasing `lambda` over any
/// ordered scalar.
///
/// Only meaningful with at least two distinct parts; a single repeated value
/// with `r >= 2` is rejected rather than reported as `-(r - 1)`.
pub fn degree_formula_of<T: PartialOrd + Clone>(lambda: &[T]) -> Result<usize> {
    let r = lambda.len();
    let runs = multiplicities(lambda)?;
    if r <= 1 {
        return Ok(0);
    }
    if runs.len() < 2 {
        return Err(Error::SinglePartValue { r });
    }
    let repeated: usize = runs.iter().map(|(_, v)| choose2(*v)).sum();
    // With m >= 2 every free row holds a free tile, so this cannot go negative.
    Ok(choose2(r - 1) - repeated)
}

/// Degree formula for an integer partition.
pub fn degree_formula(lambda: &Partition) -> Result<usize> {
    degree_formula_of(lambda.parts())
}

/// `dim GT_{lambda beta}`: the degree formula summed over the primitive
/// pieces of `(lambda, prt(beta))`. Single-row pieces contribute nothing.
pub fn dim_gt_polytope(lambda: &Partition, beta: &Composition) -> Result<usize> {
    let decomposition = primitive_decomposition(lambda, beta)?;
    decomposition
        .pairs
        .iter()
        .map(|(piece, _)| degree_formula(piece))
        .sum()
}
