//! Kostka coefficients through the polyhedral geometry of Gelfand-Tsetlin
//! polytopes.
//!
//! The crate counts integer GT-patterns with a fixed highest weight and
//! weight, recovers stretched Kostka polynomials `n -> K(n*lambda, n*beta)`
//! by exact interpolation, and computes their degrees from tilings of
//! GT-patterns and the primitive-pair decomposition of `(lambda, beta)`.
//!
//! Everything is exact: counts are arbitrary-precision integers, pattern
//! entries and polynomial coefficients are arbitrary-precision rationals.
//!
//! # `no_std` support
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command line live in the companion `kostka` crate.
//!
//! ```
//! use kostka_core::{weights::{Composition, Partition}, gt, stretch};
//!
//! let lambda = Partition::new(vec![4, 2, 2, 0, 0, 0]).unwrap();
//! let beta = Composition::new(vec![3, 1, 1, 1, 1, 1]);
//! assert_eq!(stretch::degree_stretched(&lambda, &beta).unwrap(), 6);
//!
//! let small = Partition::new(vec![2, 1, 0]).unwrap();
//! let content = Composition::new(vec![1, 1, 1]);
//! assert_eq!(gt::count_lattice_points(&small, &content).unwrap(), 2u32.into());
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod gt;
pub mod matrix;
pub mod poly;
pub mod stretch;
pub mod tiling;
mod union_find;
pub mod weights;

pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
