//! Exact verification of deformed-flip braid solutions, the 𝔤𝔩_{k,m}
//! representations built from them, and the 𝔤𝔩_{1,1} module combinatorics.
//!
//! All arithmetic is over Gaussian rationals; every check is an exact
//! equality.

pub mod bases;
pub mod braid;
pub mod context;
pub mod criteria;
pub mod error;
pub mod gl11;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod yangian;

pub use context::{BraidParams, RepContext};
pub use error::{Error, Result};
pub use linalg::{MatSeries, SparseMat, Vector};
pub use report::{CheckReport, Checker, SuiteReport, Witness};
pub use scalar::Scalar;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
