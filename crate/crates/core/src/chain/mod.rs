//! Bounded chain complexes of finitely presented modules, chain maps and homology.
//!
//! Indexing is homological: `d_n : C_n -> C_{n-1}`. A complex stores the
//! window `lo..=hi`; every module outside it is zero.

mod complex;
mod homology;
mod map;

pub use complex::{direct_sum_complex, ses_to_complex, ChainComplex};
pub use homology::{homology_summary, induced_on_homology, is_quasi_iso, Homology};
pub use map::ChainMap;

use thiserror::Error;

use crate::exactlin::RingSpec;
use crate::fpmod::ModError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("not a complex: d∘d ≠ 0 at degree {0}")]
    NotAComplex(i64),
    #[error("not a chain map: square fails to commute at degree {0}")]
    SquareFails(i64),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error("malformed complex: {0}")]
    Shape(String),
    #[error("degree {degree}: {source}")]
    Module {
        degree: i64,
        #[source]
        source: ModError,
    },
}

#[cfg(test)]
mod tests;
