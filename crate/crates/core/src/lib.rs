//! Exact computations with Clifford pairs of finite groups.
//!
//! A Clifford pair is a surjection `κ: Ĝ → G` of finite groups together with
//! an irreducible character `θ` of `N = ker κ`. This crate provides the
//! arithmetic needed to work with such pairs exactly: cyclotomic fields and
//! their Galois groups ([`cyclofield`]), finite groups given by Cayley tables
//! ([`groupkit`]), exact character tables ([`charkit`]), group algebra
//! idempotents and commutants ([`grpalg`]), the pair constructions themselves
//! ([`cliffordpairs`]) and second cohomology with cyclic coefficients
//! ([`cohomology`]).
//!
//! All arithmetic is exact. Values are immutable once built, and every
//! operation is a pure function of its inputs.

pub mod charkit;
pub mod cliffordpairs;
pub mod cohomology;
pub mod corpus;
pub mod cyclofield;
pub mod error;
pub mod groupkit;
pub mod grpalg;
pub mod linalg;
pub mod verify;

pub use error::{Error, Result};
