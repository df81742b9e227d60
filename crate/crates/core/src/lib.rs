//! Exact computations with Lie triple systems over the rationals.
//!
//! A Lie triple system is a vector space `M` with a trilinear product
//! `(x, y, z)` such that `(x, x, y) = 0`, the cyclic sum of `(x, y, z)`
//! vanishes, and every map `z ↦ (x, y, z)` is a derivation. This crate checks
//! those identities, computes derived series, centers and radicals, builds
//! the graded Lie algebra `M + h` generated by the inner derivations, and
//! classifies systems of dimension 2 and 3 against a fixed catalog.
//!
//! ```
//! use lts_core::{catalog, classify, embed};
//!
//! let t = catalog::entry("dim3-II").unwrap().system;
//! assert!(t.is_valid());
//! assert_eq!(embed::standard_embedding(&t).unwrap().algebra.dim(), 4);
//! assert_eq!(classify::classify(&t).unwrap(), vec!["dim3-II"]);
//! ```

pub mod catalog;
pub mod classify;
pub mod embed;
pub mod error;
pub mod exactla;
pub mod lie;
pub mod triple;

pub use catalog::{CatalogEntry, SymmetricForm2D};
pub use classify::{Fingerprint, IsoResult, Verdict};
pub use embed::{Decomposition, StandardEmbedding};
pub use error::{Error, Result};
pub use exactla::{Matrix, Rational, Subspace, Vector};
pub use lie::{Grading, KillingSignature, LieAlgebra, LieSeries, Sign};
pub use triple::{AxiomViolation, DerivedSeries, Identity, TripleSystem};
