//! Exact linear algebra over Z and Z/m.
//!
//! Everything else in the crate reduces to three primitives here: the Smith
//! normal form with transforms, kernel bases, and linear-system solving.
//! Questions over Z/m are answered by lifting to Z and appending `m * I`
//! columns, so there is a single integer engine underneath.

mod linsys;
mod matrix;
mod ring;
mod smith;

use num_bigint::BigInt;
use thiserror::Error;

pub use linsys::{LinearSystem, Solution, Unknown};
pub use matrix::Matrix;
pub use ring::{mod_inverse, RingSpec};
pub use smith::{columns_in_span, determinant, kernel_basis, rank, snf, solve, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(BigInt),
    #[error("unrecognized ring '{0}' (expected Z or Z/m)")]
    BadRing(String),
    #[error("{len} entries do not fill a {rows}x{cols} matrix")]
    BadShape { rows: usize, cols: usize, len: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),
}
