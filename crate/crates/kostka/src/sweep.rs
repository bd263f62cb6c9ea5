//! Seeded random sweeps over rational highest weights.

use kostka_core::tiling::{
    degree_formula_of, generic_free_tile_count, generic_interior_tiling, interior_point,
    min_face_dimension, tiling,
};
use kostka_core::weights::multiplicities;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::render_rational;

pub const DEFAULT_SEED: u64 = 20_080_601;

/// A weakly decreasing vector of `r` rationals (`1 <= r <= max_r`) with a
/// random block structure: `m` distinct values of the form `n/d`, repeated
/// according to a random composition of `r` into `m` positive parts.
pub fn random_rational_partition<R: Rng>(rng: &mut R, max_r: usize) -> Vec<BigRational> {
    let r = rng.gen_range(1..=max_r.max(1));
    let m = rng.gen_range(1..=r);

    let mut values: Vec<BigRational> = Vec::with_capacity(m);
    while values.len() < m {
        let v = BigRational::new(rng.gen_range(-60i64..=60).into(), rng.gen_range(1i64..=7).into());
        if !values.contains(&v) {
            values.push(v);
        }
    }
    values.sort_unstable_by(|a, b| b.cmp(a));

    // Cut points split 1..r into m nonempty blocks.
    let mut cuts: Vec<usize> = (1..r).collect();
    cuts.shuffle(rng);
    cuts.truncate(m - 1);
    cuts.sort_unstable();
    cuts.push(r);

    let mut out = Vec::with_capacity(r);
    let mut start = 0;
    for (value, end) in values.into_iter().zip(cuts) {
        out.extend(std::iter::repeat_n(value, end - start));
        start = end;
    }
    out
}

/// Checks one highest weight; returns a description of every violated
/// property.
pub fn check_interior_point(lambda: &[BigRational]) -> Vec<String> {
    let label = lambda.iter().map(render_rational).collect::<Vec<_>>().join(",");
    let mut problems = Vec::new();
    let x = match interior_point(lambda) {
        Ok(x) => x,
        Err(e) => return vec![format!("({label}): interior_point failed: {e}")],
    };
    if !x.is_gt_pattern() || x.hwt() != lambda {
        problems.push(format!("({label}): interior point is not in GT_lambda"));
    }
    let (Ok(actual), Ok(generic)) = (tiling(&x), generic_interior_tiling(lambda)) else {
        problems.push(format!("({label}): tiling failed"));
        return problems;
    };
    if actual != generic {
        problems.push(format!("({label}): tiling differs from the generic interior tiling"));
    }
    let runs = multiplicities(lambda).expect("sorted");
    if runs.len() >= 2 {
        let sizes: Vec<usize> = runs.iter().map(|(_, v)| *v).collect();
        let expected_free = generic_free_tile_count(lambda.len(), &sizes);
        if actual.free_count() != expected_free {
            problems.push(format!(
                "({label}): {} free tiles, expected {expected_free}",
                actual.free_count()
            ));
        }
        let formula = degree_formula_of(lambda).expect("m >= 2");
        match min_face_dimension(&x) {
            Ok(d) if d == formula => {}
            Ok(d) => problems.push(format!("({label}): kernel dimension {d}, formula {formula}")),
            Err(e) => problems.push(format!("({label}): {e}")),
        }
    }
    problems
}

/// Runs `cases` seeded random checks with `r <= max_r`; one line per
/// failing case.
pub fn interior_sweep(seed: u64, cases: usize, max_r: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases)
        .map(|_| check_interior_point(&random_rational_partition(&mut rng, max_r)))
        .filter(|problems| !problems.is_empty())
        .map(|problems| problems.join("; "))
        .collect()
}
