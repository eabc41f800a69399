//! Counting engine for Nakayama algebras of linearly oriented `A_n` quivers
//! with monomial relations.
//!
//! The engine enumerates the indecomposable modules as intervals, computes
//! Hom and Ext dimensions by interval combinatorics, counts exceptional pairs
//! (ordered pairs `(M, N)` with `Hom(N, M) = 0` and `Ext^i(N, M) = 0` for all
//! `i >= 1`), evaluates the closed formulas known for the hereditary,
//! overlap-free, single-relation, radical-power and Auslander families, and
//! reproduces the associated integer-sequence tables. An independent
//! brute-force oracle ([`oracle`]) recomputes Hom and Ext from explicit
//! matrix representations so the combinatorial shortcuts are verified, not
//! trusted.

pub mod algebra;
pub mod census;
pub mod corpus;
pub mod error;
pub mod homology;
pub mod indec;
pub mod oracle;
pub mod sequences;

pub use algebra::{AlgebraPreset, NakayamaAlgebra, Relation};
pub use error::{Error, Result};
pub use indec::IntervalModule;
