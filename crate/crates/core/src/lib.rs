//! Exact freeness invariants of reduced plane projective curves.
//!
//! The crate computes minimal degrees of Jacobian syzygies, total Tjurina
//! numbers, ADE singularity censuses, and checks the maximizing-curve criteria
//! for curves and for unions with lines and conics.

pub mod bounds;
pub mod catalog;
pub mod curvefile;
pub mod error;
pub mod ext;
pub mod factor;
pub mod field;
pub mod gcd;
pub mod hompoly;
pub mod linalg;
pub mod modp;
pub mod parse;
pub mod report;
pub mod repro;
pub mod resultant;
pub mod scalar;
pub mod singular;
pub mod syzygy;
pub mod union;
pub mod unipoly;

pub use error::{Error, Result, ScalarError};
pub use hompoly::{BiPoly, HomPoly, LinearChange};
pub use parse::parse_poly;
pub use scalar::{quad_arith, rational, ArithOp, QuadElem, Rational};
