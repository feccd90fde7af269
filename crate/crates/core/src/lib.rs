//! Seshadri stratifications of flag varieties built from a sequence of dominant weights.
//!
//! The crate computes the DCP poset attached to a Schubert variety and an index poset,
//! checks tau-standardness, enumerates LS-paths and standard LS-tableaux, describes the
//! LS-fan, and compares counts against Demazure characters.

pub mod dcp;
pub mod demazure_oracle;
pub mod error;
pub mod fan;
pub mod lspath;
pub mod multidegree;
pub mod poset;
pub mod tableaux;
pub mod weyl;

pub use error::{Error, Result};

/// Exact rational scalar used for path cuts and fan coordinates.
pub type Rational = num_rational::Ratio<i64>;

/// Arbitrary-precision rational used for polynomial interpolation.
pub type BigRational = num_rational::BigRational;
