//! Counting non-crossing matchings on planar point sets in general position,
//! with runners (points whose vertical ray upward meets no edge).
//!
//! The crate has an exhaustive oracle for small sets, transfer recursions for
//! zigzag chains and r-chains with and without corners, exact spectral
//! analysis of the coupled band system behind the corner recursion, and the
//! doubling construction for perfect matchings.

pub mod chain_corner;
pub mod chain_free;
pub mod doubling;
pub mod error;
pub mod geometry;
pub mod numeric;
pub mod oracle;
pub mod quad;
pub mod spectral;
pub mod zigzag;

pub use error::{Error, Result};
