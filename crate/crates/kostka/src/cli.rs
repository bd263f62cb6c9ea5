//! The `kostka` command line.
//!
//! Exit codes: 0 on success, 1 on a domain error (for example a weight that
//! is not dominated), 2 on a usage or input-format error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use kostka_core::gt::{count_lattice_points, kostka_ssyt, schur_monomials, GtPattern};
use kostka_core::stretch::{degree_stretched, interpolate_stretched, stretched_polynomial};
use kostka_core::tiling::{dim_gt_polytope, interior_point, kernel_dimension, tiling, tiling_matrix};
use kostka_core::weights::{primitive_decomposition, Composition, Partition};
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::format::{
    parse_pattern, parse_rational_weights, parse_weights, render_pattern, render_rational,
    render_tiling, render_weights, FormatError,
};
use crate::json::{
    DecompositionReport, DegreeReport, DimReport, KostkaReport, PiecePair, PolynomialJson,
    SchurReport, SchurTerm, SweepReport, TilingJson, TilingReport,
};
use crate::sweep::{interior_sweep, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(name = "kostka", version, about = "Kostka coefficients, stretched Kostka polynomials and GT-pattern tilings")]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Pair {
    /// Highest weight, comma separated (e.g. 4,2,2,0,0,0).
    #[arg(short = 'l', long = "lambda", allow_hyphen_values = true)]
    pub lambda: String,
    /// Weight, comma separated, same length as lambda.
    #[arg(short = 'b', long = "beta", allow_hyphen_values = true)]
    pub beta: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count integer GT-patterns (the Kostka coefficient).
    Kostka {
        #[command(flatten)]
        pair: Pair,
        /// Cross-check against semistandard tableau enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Stretched Kostka polynomial by exact interpolation.
    Poly {
        #[command(flatten)]
        pair: Pair,
        /// Interpolate over n = 1..=N instead of the predicted degree + 2.
        #[arg(long = "max-n")]
        max_n: Option<u64>,
    },
    /// Degree of the stretched Kostka polynomial from the formula.
    Degree {
        #[command(flatten)]
        pair: Pair,
        /// Also interpolate the counts and compare degrees.
        #[arg(long)]
        interpolate: bool,
        /// Number of dilations used with --interpolate.
        #[arg(long = "max-n")]
        max_n: Option<u64>,
    },
    /// Decompose (lambda, beta) into primitive pairs.
    Decompose {
        #[command(flatten)]
        pair: Pair,
    },
    /// Tiling, tiling matrix and kernel dimension of a pattern.
    Tiling {
        /// Pattern file: one row per line, bottom row first.
        #[arg(long, conflicts_with = "lambda", required_unless_present = "lambda")]
        pattern: Option<PathBuf>,
        /// Use the interior point of GT_lambda; rationals allowed (p/q).
        #[arg(short = 'l', long = "lambda", allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Dimension of the GT-polytope.
    Dim {
        #[command(flatten)]
        pair: Pair,
    },
    /// Monomial expansion of the Schur polynomial s_lambda.
    Schur {
        #[arg(short = 'l', long = "lambda")]
        lambda: String,
    },
    /// Seeded random check of interior points against the generic tiling.
    Sweep {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long = "max-r", default_value_t = 12)]
        max_r: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Domain(#[from] kostka_core::Error),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Format(_) | CliError::Read { .. } => 2,
            CliError::Domain(_) | CliError::Io(_) | CliError::Verification(_) => 1,
        }
    }
}

/// Parses `argv` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn parse_pair(pair: &Pair) -> Result<(Partition, Composition), CliError> {
    let lambda = parse_weights(&pair.lambda)?;
    let beta = parse_weights(&pair.beta)?;
    if lambda.len() != beta.len() {
        return Err(CliError::Usage(format!(
            "lambda and beta must have the same length (got {} and {})",
            lambda.len(),
            beta.len()
        )));
    }
    let lambda = Partition::new(lambda).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((lambda, Composition::new(beta)))
}

fn emit<S: Serialize>(out: &mut dyn Write, value: &S) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Kostka { pair, verify } => {
            let (lambda, beta) = parse_pair(pair)?;
            let count = count_lattice_points(&lambda, &beta)?;
            let ssyt = if *verify {
                Some(kostka_ssyt(&lambda, &beta)?)
            } else {
                None
            };
            if cli.json {
                emit(
                    out,
                    &KostkaReport {
                        lambda: lambda.parts().to_vec(),
                        beta: beta.parts().to_vec(),
                        count: count.to_string(),
                        ssyt_count: ssyt.as_ref().map(ToString::to_string),
                    },
                )?;
            } else {
                writeln!(out, "{count}")?;
            }
            if let Some(ssyt) = ssyt {
                if ssyt != count {
                    return Err(CliError::Verification(format!(
                        "GT-pattern count {count} but {ssyt} semistandard tableaux"
                    )));
                }
            }
        }
        Command::Poly { pair, max_n } => {
            let (lambda, beta) = parse_pair(pair)?;
            let poly = match max_n {
                Some(n) => {
                    // Still reject empty polytopes up front.
                    dim_gt_polytope(&lambda, &beta)?;
                    interpolate_stretched(&lambda, &beta, *n)?
                }
                None => stretched_polynomial(&lambda, &beta)?,
            };
            if cli.json {
                emit(out, &PolynomialJson::from(&poly))?;
            } else {
                writeln!(out, "{poly}")?;
            }
        }
        Command::Degree {
            pair,
            interpolate,
            max_n,
        } => {
            let (lambda, beta) = parse_pair(pair)?;
            let degree = degree_stretched(&lambda, &beta)?;
            let interpolated = if *interpolate {
                let n = max_n.unwrap_or(degree as u64 + 2);
                let poly = interpolate_stretched(&lambda, &beta, n)?;
                Some(poly.degree().unwrap_or(0))
            } else {
                None
            };
            if cli.json {
                emit(
                    out,
                    &DegreeReport {
                        lambda: lambda.parts().to_vec(),
                        beta: beta.parts().to_vec(),
                        degree,
                        interpolated,
                    },
                )?;
            } else {
                writeln!(out, "{degree}")?;
                if let Some(d) = interpolated {
                    writeln!(out, "interpolated: {d}")?;
                }
            }
            if let Some(d) = interpolated {
                if d != degree {
                    return Err(kostka_core::Error::DegreeMismatch {
                        formula: degree,
                        interpolated: d,
                    }
                    .into());
                }
            }
        }
        Command::Decompose { pair } => {
            let (lambda, beta) = parse_pair(pair)?;
            let d = primitive_decomposition(&lambda, &beta)?;
            if cli.json {
                emit(
                    out,
                    &DecompositionReport {
                        lambda: lambda.parts().to_vec(),
                        beta: beta.parts().to_vec(),
                        sorted_beta: d.sorted_beta.parts().to_vec(),
                        beta_was_reordered: d.beta_was_reordered,
                        split_indices: d.split_indices.clone(),
                        pairs: d
                            .pairs
                            .iter()
                            .map(|(l, b)| PiecePair {
                                lambda: l.parts().to_vec(),
                                beta: b.parts().to_vec(),
                            })
                            .collect(),
                    },
                )?;
            } else {
                if d.beta_was_reordered {
                    writeln!(out, "# beta sorted to {}", render_weights(d.sorted_beta.parts()))?;
                }
                for (l, b) in &d.pairs {
                    writeln!(out, "{} / {}", render_weights(l.parts()), render_weights(b.parts()))?;
                }
            }
        }
        Command::Tiling { pattern, lambda } => {
            let x: GtPattern<BigRational> = match (pattern, lambda) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                        path: path.clone(),
                        source,
                    })?;
                    parse_pattern(&text)?
                }
                (None, Some(l)) => {
                    let parts = parse_rational_weights(l)?;
                    if parts.is_empty() {
                        return Err(CliError::Usage("lambda must have at least one part".into()));
                    }
                    interior_point(&parts)?
                }
                (None, None) => return Err(CliError::Usage("give --pattern or --lambda".into())),
            };
            let t = tiling(&x)?;
            let a = tiling_matrix(&t);
            let kernel_dim = kernel_dimension(&a);
            if cli.json {
                emit(
                    out,
                    &TilingReport {
                        pattern: x
                            .rows()
                            .map(|row| row.iter().map(render_rational).collect())
                            .collect(),
                        tiling: TilingJson::from(&t),
                        matrix: a.to_rows(),
                        kernel_dim,
                    },
                )?;
            } else {
                writeln!(out, "pattern (bottom row first):")?;
                write!(out, "{}", render_pattern(&x))?;
                writeln!(out, "tiling (* = non-free):")?;
                write!(out, "{}", render_tiling(&t))?;
                writeln!(out, "matrix ({} x {}):", a.rows(), a.cols())?;
                for row in a.to_rows() {
                    let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                    writeln!(out, "{}", cells.join(" "))?;
                }
                writeln!(out, "kernel dimension: {kernel_dim}")?;
            }
        }
        Command::Dim { pair } => {
            let (lambda, beta) = parse_pair(pair)?;
            let dim = dim_gt_polytope(&lambda, &beta)?;
            if cli.json {
                emit(
                    out,
                    &DimReport {
                        lambda: lambda.parts().to_vec(),
                        beta: beta.parts().to_vec(),
                        dim,
                    },
                )?;
            } else {
                writeln!(out, "{dim}")?;
            }
        }
        Command::Schur { lambda } => {
            let parts = parse_weights(lambda)?;
            let lambda = Partition::new(parts).map_err(|e| CliError::Usage(e.to_string()))?;
            let terms = schur_monomials(&lambda);
            if cli.json {
                emit(
                    out,
                    &SchurReport {
                        lambda: lambda.parts().to_vec(),
                        terms: terms
                            .iter()
                            .map(|(beta, k)| SchurTerm {
                                beta: beta.parts().to_vec(),
                                coeff: k.to_string(),
                            })
                            .collect(),
                    },
                )?;
            } else {
                for (beta, k) in &terms {
                    writeln!(out, "{}\t{k}", render_weights(beta.parts()))?;
                }
            }
        }
        Command::Sweep { seed, count, max_r } => {
            if *max_r == 0 {
                return Err(CliError::Usage("--max-r must be at least 1".into()));
            }
            let failures = interior_sweep(*seed, *count, *max_r);
            if cli.json {
                emit(
                    out,
                    &SweepReport {
                        seed: *seed,
                        cases: *count,
                        failures: failures.clone(),
                    },
                )?;
            } else {
                for f in &failures {
                    writeln!(out, "FAIL {f}")?;
                }
                writeln!(
                    out,
                    "{} of {count} cases passed (seed {seed})",
                    count - failures.len()
                )?;
            }
            if !failures.is_empty() {
                return Err(CliError::Verification(format!(
                    "{} interior-point check(s) failed",
                    failures.len()
                )));
            }
        }
    }
    Ok(())
}
