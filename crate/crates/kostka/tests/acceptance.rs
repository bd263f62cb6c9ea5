//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the report is always
//! printed; exits nonzero if any hard criterion fails.

use std::time::{Duration, Instant};

use kostka::sweep::{check_interior_point, interior_sweep, DEFAULT_SEED};
use kostka_core::gt::{count_lattice_points, kostka_ssyt};
use kostka_core::matrix::TilingMatrix;
use kostka_core::poly::{interpolate, stabilized_degree, RationalPolynomial};
use kostka_core::stretch::{interpolate_stretched, positivity_check, stretched_polynomial, stretched_values};
use kostka_core::tiling::{degree_formula, dim_gt_polytope, kernel_dimension};
use kostka_core::weights::{
    compositions_of, dominates, is_primitive_pair, partitions_of, primitive_decomposition,
    Composition, Partition,
};
use kostka_core::{BigInt, BigRational, BigUint};
use num_traits::{One, Zero};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn p(v: &[u64]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn c(v: &[u64]) -> Composition {
    Composition::new(v.to_vec())
}

/// Every (lambda, beta) with |lambda| <= max_size, 1 <= r <= max_r, beta any
/// composition of |lambda| of length r.
fn sweep_pairs(max_size: u64, max_r: usize) -> Vec<(Partition, Composition)> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for n in 0..=max_size {
            for lambda in partitions_of(n, r) {
                for beta in compositions_of(n, r) {
                    out.push((lambda.clone(), beta));
                }
            }
        }
    }
    out
}

/// Every primitive pair with beta a partition, r <= max_r, |lambda| <= max_size.
fn primitive_corpus(max_size: u64, max_r: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for n in 0..=max_size {
            let parts = partitions_of(n, r);
            for lambda in &parts {
                for beta in &parts {
                    if is_primitive_pair(lambda, &beta.to_composition()).unwrap() {
                        out.push((lambda.clone(), beta.clone()));
                    }
                }
            }
        }
    }
    out
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Degree-formula value computed straight from the multiplicities.
fn formula_from_multiplicities(lambda: &Partition) -> usize {
    let r = lambda.len();
    if r <= 1 {
        return 0;
    }
    choose2(r - 1) - lambda.multiplicities().iter().map(|(_, v)| choose2(*v)).sum::<usize>()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let lambda = p(&[4, 2, 2, 0, 0, 0]);
    let beta = c(&[3, 1, 1, 1, 1, 1]);
    let formula = degree_formula(&lambda).unwrap();
    let dim = dim_gt_polytope(&lambda, &beta).unwrap();
    let values = stretched_values(&lambda, &beta, 8).unwrap();
    let ints: Vec<BigInt> = values.iter().cloned().map(BigInt::from).collect();
    let stabilized = stabilized_degree(&ints);
    let poly = interpolate(&ints);
    let elapsed = start.elapsed();
    let interpolated = poly.as_ref().ok().and_then(RationalPolynomial::degree);
    let detail = format!(
        "formula {formula}, dim {dim}, stabilized differences {stabilized:?}, interpolated {interpolated:?}, {:.2?}",
        elapsed
    );
    if formula == 6
        && dim == 6
        && stabilized == Some(6)
        && interpolated == Some(6)
        && elapsed < Duration::from_secs(120)
    {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_2() -> Outcome {
    let lambda = p(&[4, 2, 1]);
    let beta = c(&[3, 3, 1]);
    let poly = stretched_polynomial(&lambda, &beta);
    let formula = degree_formula(&lambda);
    let pieces = primitive_decomposition(&lambda, &beta).map(|d| d.pairs);
    let expected_pieces = vec![(p(&[4, 2]), p(&[3, 3])), (p(&[1]), p(&[1]))];
    // Also interpolate over more samples than the formula asks for.
    let wide = interpolate_stretched(&lambda, &beta, 6);
    let one = RationalPolynomial::constant(BigRational::one());
    let ok = poly.as_ref() == Ok(&one)
        && wide.as_ref() == Ok(&one)
        && formula == Ok(1)
        && pieces.as_ref() == Ok(&expected_pieces);
    let detail = format!(
        "polynomial {}, degree_formula {:?}, pieces {:?}",
        poly.as_ref().map(ToString::to_string).unwrap_or_else(|e| e.to_string()),
        formula,
        pieces.as_ref().map(|v| v.len())
    );
    if ok { pass(detail) } else { fail(detail) }
}

fn criterion_3(pairs: &[(Partition, Composition)]) -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for (lambda, beta) in pairs {
        let dp = count_lattice_points(lambda, beta).unwrap();
        let ssyt = kostka_ssyt(lambda, beta).unwrap();
        if dp != ssyt {
            mismatches.push(format!("{lambda}/{beta}: {dp} vs {ssyt}"));
        }
    }
    let detail = format!(
        "{} pairs, {} mismatches, {:.2?}{}",
        pairs.len(),
        mismatches.len(),
        start.elapsed(),
        mismatches.first().map(|m| format!(", first: {m}")).unwrap_or_default()
    );
    if mismatches.is_empty() && start.elapsed() < Duration::from_secs(300) {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_4(corpus: &[(Partition, Partition)]) -> (Outcome, Vec<(Partition, Partition, RationalPolynomial)>) {
    let mut bad = Vec::new();
    let mut polys = Vec::new();
    for (lambda, beta) in corpus {
        // Sample past the largest possible degree for this r so the fit does
        // not lean on the formula being checked.
        let samples = choose2(lambda.len().saturating_sub(1)) as u64 + 2;
        match interpolate_stretched(lambda, &beta.to_composition(), samples) {
            Ok(poly) => {
                let expected = formula_from_multiplicities(lambda);
                if poly.degree() != Some(expected) {
                    bad.push(format!("{lambda}/{beta}: degree {:?}, formula {expected}", poly.degree()));
                }
                polys.push((lambda.clone(), beta.clone(), poly));
            }
            Err(e) => bad.push(format!("{lambda}/{beta}: {e}")),
        }
    }
    let detail = format!(
        "{} primitive pairs, {} disagreements{}",
        corpus.len(),
        bad.len(),
        bad.first().map(|m| format!(", first: {m}")).unwrap_or_default()
    );
    (if bad.is_empty() { pass(detail) } else { fail(detail) }, polys)
}

fn criterion_5(pairs: &[(Partition, Composition)]) -> Outcome {
    let mut bad = 0;
    let mut dominated = 0;
    for (lambda, beta) in pairs {
        let positive = !count_lattice_points(lambda, beta).unwrap().is_zero();
        let dom = dominates(lambda, beta).unwrap();
        dominated += usize::from(dom);
        if positive != dom {
            bad += 1;
        }
    }
    let detail = format!("{} pairs ({dominated} dominated), {bad} violations", pairs.len());
    if bad == 0 { pass(detail) } else { fail(detail) }
}

fn criterion_6(pairs: &[(Partition, Composition)]) -> Outcome {
    let mut count_bad = Vec::new();
    let mut sorted_dominated = Vec::new();
    for (lambda, beta) in pairs {
        // Sorted betas only.
        if beta.parts().windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        let Ok(d) = primitive_decomposition(lambda, beta) else {
            continue;
        };
        let whole = count_lattice_points(lambda, beta).unwrap();
        let product: BigUint = d
            .pairs
            .iter()
            .map(|(l, b)| count_lattice_points(l, &b.to_composition()).unwrap())
            .product();
        if whole != product {
            count_bad.push(format!("{lambda}/{beta}: {whole} vs {product}"));
        }
        if d.len() > 1 {
            sorted_dominated.push((lambda.clone(), beta.clone()));
        }
    }

    // Deterministic, evenly spaced subsample of the decomposable pairs.
    let take = 50.min(sorted_dominated.len());
    let stride = sorted_dominated.len() as f64 / take.max(1) as f64;
    let mut poly_bad = Vec::new();
    for k in 0..take {
        let (lambda, beta) = &sorted_dominated[(k as f64 * stride) as usize];
        let whole = stretched_polynomial(lambda, beta).unwrap();
        let mut product = RationalPolynomial::constant(BigRational::one());
        for (l, b) in primitive_decomposition(lambda, beta).unwrap().pairs {
            product = product.mul(&stretched_polynomial(&l, &b.to_composition()).unwrap());
        }
        if whole != product {
            poly_bad.push(format!("{lambda}/{beta}"));
        }
    }
    let detail = format!(
        "{} count mismatches; {take} decomposable polynomial cases, {} mismatches",
        count_bad.len(),
        poly_bad.len()
    );
    if count_bad.is_empty() && poly_bad.is_empty() && take == 50 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_7() -> Outcome {
    let failures = interior_sweep(DEFAULT_SEED, 100, 12);
    // The block structure (3,1,2,1,4) with r = 11 has 44 free tiles.
    let lambda: Vec<BigRational> = [9, 9, 9, 7, 5, 5, 4, 1, 1, 1, 1]
        .iter()
        .map(|&n| BigRational::from_integer(n.into()))
        .collect();
    let fixed = check_interior_point(&lambda);
    let free = kostka_core::tiling::generic_interior_tiling(&lambda).unwrap().free_count();
    let detail = format!(
        "100 seeded cases (seed {DEFAULT_SEED}), {} failures; (3,1,2,1,4) free tiles {free}",
        failures.len()
    );
    if failures.is_empty() && fixed.is_empty() && free == 44 {
        pass(detail)
    } else {
        fail(format!("{detail}: {:?}", failures.iter().chain(&fixed).next()))
    }
}

fn criterion_8() -> Outcome {
    let a = TilingMatrix::from_rows(&[vec![1, 1, 0, 0, 0], vec![0, 1, 1, 1, 0], vec![0, 1, 0, 0, 1]]).unwrap();
    let b = TilingMatrix::from_rows(&[vec![1, 0, 0], vec![1, 1, 0], vec![2, 2, 0], vec![1, 1, 1]]).unwrap();
    let (ka, kb) = (kernel_dimension(&a), kernel_dimension(&b));
    let detail = format!("kernel dimensions {ka} and {kb}");
    if ka == 2 && kb == 0 { pass(detail) } else { fail(detail) }
}

fn criterion_9(polys: &[(Partition, Partition, RationalPolynomial)]) -> Outcome {
    let violations: Vec<String> = polys
        .iter()
        .filter(|(_, _, poly)| !positivity_check(poly))
        .map(|(l, b, poly)| format!("{l}/{b}: {poly}"))
        .collect();
    if violations.is_empty() {
        pass(format!("all {} polynomials have nonnegative coefficients", polys.len()))
    } else {
        fail(format!(
            "RESEARCH FINDING: {} polynomials with a negative coefficient, e.g. {}",
            violations.len(),
            violations[0]
        ))
    }
}

fn main() {
    let started = Instant::now();
    let sweep = sweep_pairs(8, 5);
    let corpus = primitive_corpus(7, 5);
    let (c4, polys) = criterion_4(&corpus);

    let results = [
        ("1", "worked example degree 6 by formula and by interpolation", criterion_1(), true),
        ("2", "(4,2,1)/(3,3,1): constant polynomial, formula upper bound 1", criterion_2(), true),
        ("3", "GT lattice count equals SSYT count (|lambda| <= 8, r <= 5)", criterion_3(&sweep), true),
        ("4", "interpolated degree equals formula on primitive pairs", c4, true),
        ("5", "K > 0 iff beta is dominated by lambda", criterion_5(&sweep), true),
        ("6", "primitive-pair factorization of counts and polynomials", criterion_6(&sweep), true),
        ("7", "interior points carry the generic interior tiling", criterion_7(), true),
        ("8", "kernel dimensions of the displayed tiling matrices", criterion_8(), true),
        // Conjecture check: reported, never fatal.
        ("9", "positivity of stretched Kostka coefficients (conjecture)", criterion_9(&polys), false),
    ];

    let mut hard_failures = 0;
    for (id, name, outcome, hard) in &results {
        let tag = match (outcome.passed, hard) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "WARN",
        };
        println!("[{tag}] criterion {id}: {name} -- {}", outcome.detail);
        if !outcome.passed && *hard {
            hard_failures += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.2?}",
        results.iter().filter(|r| r.2.passed).count(),
        results.len(),
        started.elapsed()
    );
    if hard_failures > 0 {
        std::process::exit(1);
    }
}
