//! Exact-arithmetic engine for the B-orbit combinatorics of the height-2
//! nilpotent locus of a simple Lie algebra.
//!
//! The crate builds finite root systems with integer coordinates, the finite
//! and affine Weyl groups, the involution calculus attached to strongly
//! orthogonal sets of roots, the catalogue of height-2 nilpotent G-orbits
//! with their abelian ideals and resolutions, and the closure posets of
//! B-orbits together with independent brute-force cross-validators.

pub mod affine_weyl;
pub mod catalogue;
pub mod error;
pub mod export;
pub mod oracle;
pub mod orthogonal;
pub mod poset;
pub mod root_system;
pub mod table1;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{CartanType, Root, RootSystem, TypeLetter};
