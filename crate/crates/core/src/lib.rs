//! Cyclic codes of odd length over Z4 and over R = Z4[v]/(v^2 - v).
//!
//! The crate factors `x^n - 1` over Z4, represents cyclic codes as
//! partitions of its factors, and computes duals, hulls and hull types.
//! Codes over R split as `v C1 + (1 - v) C2`; their Gray images are
//! enumerated exhaustively for minimum Lee distance.

pub mod analysis;
pub mod codes_ring;
pub mod codes_z4;
pub mod cyclotomic;
pub mod error;
pub mod gf2;
pub mod howell;
pub mod packed;
pub mod tables;
pub mod z4poly;

pub use error::{Error, Result};
pub use z4poly::Z4Poly;
