//! Exact-arithmetic toolkit for Hesse pencils of binary quartics and plane
//! cubics: field arithmetic, sparse polynomials, Plücker geometry, the skew
//! invariant of cubic triples, orbit and multidegree verification.

pub mod forms;
pub mod hessegeom;
pub mod invariant_r;
pub mod linalg;
pub mod multidegree;
pub mod orbits;
pub mod pluecker;
pub mod poly;
pub mod report;
pub mod reptheory;
pub mod sampling;
pub mod scalar;
pub mod varieties;

pub use poly::MPoly;
pub use report::{CheckResult, CheckStatus, Report};
pub use scalar::{FieldSpec, Scalar};
