//! Partitions, compositions, dominance order and primitive pairs.
//!
//! Weight vectors carry an explicit length `r`; trailing zeros are part of
//! the value, so `(4,2,2)` and `(4,2,2,0,0,0)` are different weights.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A vector of nonnegative integers of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<u64>);

/// A weakly decreasing vector of nonnegative integers of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u64>);

impl Composition {
    pub fn new(parts: Vec<u64>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        size(&self.0)
    }

    /// Multiplies every part by `n`.
    pub fn stretch(&self, n: u64) -> Composition {
        Composition(self.0.iter().map(|&p| p * n).collect())
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.0
    }
}

impl Partition {
    /// Validates that `parts` is weakly decreasing.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        size(&self.0)
    }

    pub fn stretch(&self, n: u64) -> Partition {
        Partition(self.0.iter().map(|&p| p * n).collect())
    }

    /// Run-length encoding `[(kappa_1, v_1), ..., (kappa_m, v_m)]` with
    /// strictly decreasing values and positive multiplicities.
    pub fn multiplicities(&self) -> Vec<(u64, usize)> {
        // Already validated as weakly decreasing.
        runs(&self.0)
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.0
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

fn fmt_parts(parts: &[u64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str("(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// Sum of the parts.
pub fn size(parts: &[u64]) -> u64 {
    parts.iter().sum()
}

/// The weakly decreasing rearrangement of `beta`.
pub fn sort_to_partition(beta: &Composition) -> Partition {
    let mut parts = beta.0.clone();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

fn runs<T: PartialEq + Clone>(parts: &[T]) -> Vec<(T, usize)> {
    let mut out: Vec<(T, usize)> = Vec::new();
    for p in parts {
        match out.last_mut() {
            Some((value, count)) if value == p => *count += 1,
            _ => out.push((p.clone(), 1)),
        }
    }
    out
}

/// Run-length encoding of a weakly decreasing sequence over any ordered
/// scalar (integers or rationals).
pub fn multiplicities<T: PartialOrd + Clone>(parts: &[T]) -> Result<Vec<(T, usize)>> {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotWeaklyDecreasing);
    }
    Ok(runs(parts))
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

/// Prefix-sum gaps `sum_{k<=i} lambda_k - sum_{k<=i} prt(beta)_k` for
/// `1 <= i < r`, or `None` when the sizes differ.
fn prefix_gaps(lambda: &[u64], sorted_beta: &[u64]) -> Option<Vec<i128>> {
    if size(lambda) != size(sorted_beta) {
        return None;
    }
    let r = lambda.len();
    let mut gaps = Vec::with_capacity(r.saturating_sub(1));
    let mut acc: i128 = 0;
    for i in 0..r.saturating_sub(1) {
        acc += i128::from(lambda[i]) - i128::from(sorted_beta[i]);
        gaps.push(acc);
    }
    Some(gaps)
}

/// Whether `lambda` dominates `beta` (`beta ⊴ lambda`).
///
/// Only the multiset of `beta`'s parts matters. Differing lengths are an
/// error, never silently padded.
pub fn dominates(lambda: &Partition, beta: &Composition) -> Result<bool> {
    check_lengths(lambda, beta)?;
    let sorted = sort_to_partition(beta);
    Ok(prefix_gaps(&lambda.0, &sorted.0).is_some_and(|g| g.iter().all(|&d| d >= 0)))
}

/// Whether `(lambda, beta)` is a primitive pair: dominance with every proper
/// prefix inequality strict.
pub fn is_primitive_pair(lambda: &Partition, beta: &Composition) -> Result<bool> {
    check_lengths(lambda, beta)?;
    let sorted = sort_to_partition(beta);
    Ok(prefix_gaps(&lambda.0, &sorted.0).is_some_and(|g| g.iter().all(|&d| d > 0)))
}

/// The unique splitting of `(lambda, prt(beta))` into consecutive primitive
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    /// `prt(beta)`, the sorted weight the pieces are cut from.
    pub sorted_beta: Partition,
    /// Whether sorting actually permuted `beta`.
    pub beta_was_reordered: bool,
    /// One-based split points `1 = i_1 < ... < i_{s+1} = r + 1`.
    pub split_indices: Vec<usize>,
    /// The pieces `(lambda^(t), beta^(t))`, each a primitive pair.
    pub pairs: Vec<(Partition, Partition)>,
}

impl PrimitiveDecomposition {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Splits a dominated pair at every index where the prefix sums of `lambda`
/// and `prt(beta)` coincide.
pub fn primitive_decomposition(
    lambda: &Partition,
    beta: &Composition,
) -> Result<PrimitiveDecomposition> {
    check_lengths(lambda, beta)?;
    let sorted = sort_to_partition(beta);
    let gaps = prefix_gaps(&lambda.0, &sorted.0).ok_or(Error::NotDominated)?;
    if gaps.iter().any(|&d| d < 0) {
        return Err(Error::NotDominated);
    }
    let r = lambda.len();
    let mut split_indices = Vec::new();
    split_indices.push(1);
    // gaps[i - 2] compares the first i - 1 parts.
    for i in 2..=r {
        if gaps[i - 2] == 0 {
            split_indices.push(i);
        }
    }
    split_indices.push(r + 1);

    let pairs = if r == 0 {
        Vec::new()
    } else {
        split_indices
            .windows(2)
            .map(|w| {
                let (lo, hi) = (w[0] - 1, w[1] - 1);
                (
                    Partition(lambda.0[lo..hi].to_vec()),
                    Partition(sorted.0[lo..hi].to_vec()),
                )
            })
            .collect()
    };
    if r == 0 {
        split_indices.truncate(1);
    }
    Ok(PrimitiveDecomposition {
        beta_was_reordered: sorted.0 != beta.0,
        sorted_beta: sorted,
        split_indices,
        pairs,
    })
}

/// All partitions of `n` with exactly `r` parts (zeros allowed), in
/// reverse lexicographic order.
pub fn partitions_of(n: u64, r: usize) -> Vec<Partition> {
    fn go(rem: u64, max: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if rem == 0 {
                out.push(Partition(cur.clone()));
            }
            return;
        }
        // Remaining parts are each at most `max`.
        if rem > max.saturating_mul(slots as u64) {
            return;
        }
        for p in (0..=max.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// All compositions of `n` with exactly `r` parts, in lexicographic order.
pub fn compositions_of(n: u64, r: usize) -> Vec<Composition> {
    fn go(rem: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rem);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for p in 0..=rem {
            cur.push(p);
            go(rem - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if n == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    go(n, r, &mut Vec::with_capacity(r), &mut out);
    out
}
