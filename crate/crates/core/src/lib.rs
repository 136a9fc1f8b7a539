//! Exact-arithmetic verification engine for mappings that satisfy the
//! (m,n)-derivation identity at a single point of a generalized matrix
//! algebra or a finite CSL pattern algebra.
//!
//! The crate computes, over arbitrary-precision rationals:
//! - solution spaces of the "derivable at Z" linear constraints for
//!   generated pairs (S, T) with S·T = Z,
//! - reference spaces of derivations, Jordan derivations, Lie derivations
//!   and general (m,n)-derivations,
//! - block decompositions of linear self-maps over the 2×2 corner structure
//!   together with the structure-condition checklists that characterize
//!   each mapping class,
//! and compares them exactly (bit-identical canonical bases).

pub mod algebra;
pub mod cli;
pub mod exactlin;
pub mod maps;
pub mod morita;
pub mod solver;
