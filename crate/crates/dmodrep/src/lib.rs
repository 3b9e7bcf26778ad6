//! Exact D-module representations of one-dimensional superconformal
//! algebras.
//!
//! The crate builds global supermultiplet representations with N = 1, 2, 4,
//! 7, 8 supercharges acting on component fields by differential operators in
//! one time variable, promotes them to conformal representations at a scaling
//! dimension λ, and closes the generated superalgebra by exact bracket
//! saturation. The scaling dimensions at which the closure exists are found
//! symbolically, the resulting finite-dimensional Lie superalgebras are
//! identified by their structure constants, and the associated conformally
//! invariant sigma models are tabulated.
//!
//! Everything is computed over arbitrary-precision rationals; the only
//! floating point lives in the independent curvature cross-check inside
//! [`geometry`].

pub mod algebra;
pub mod clifford;
pub mod conformal;
pub mod diffop;
pub mod exact;
pub mod geometry;
mod linalg;
pub mod multiplet;
pub mod poly;
pub mod span;
pub mod verify;
