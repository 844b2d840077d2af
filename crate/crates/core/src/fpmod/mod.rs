//! Finitely presented modules over Z or Z/m and their homomorphisms.
//!
//! A module is the cokernel of its relation matrix (generators are rows,
//! relators are columns). Every module derived here (kernels, images,
//! cokernels, sums) is re-presented along its Smith basis so presentations
//! stay small; only the isomorphism class and the maps are meaningful.

mod hom;
mod module;

pub use hom::{compose, ModuleHom};
pub use module::{direct_sum, Decomposition, DirectSum, FpModule, ModuleElement, Reduced};

use thiserror::Error;

use crate::exactlin::{LinError, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModError {
    #[error("map is not well defined: relations of the domain are not sent into the relations of the codomain")]
    NotWellDefined,
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}
