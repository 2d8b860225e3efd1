//! Exact computation of PBW and canonical bases for the positive half of
//! type-ADE quantum groups, together with two independent oracles — a KLR
//! (quiver Hecke) algebra rewriting engine and a quiver-representation
//! toolkit — that machine-verify the structural theorems relating them:
//! positivity of canonical-to-PBW expansion coefficients, orthogonality of
//! lower/upper PBW families, unitriangularity of transition matrices, and the
//! determinant factorization of the Gram matrix, at small rank and height.
//!
//! The companion guide in `book/` walks through the mathematical conventions
//! chapter by chapter; every displayed computation there is mirrored by a
//! doc-test or unit test in this crate.
//!
//! # Example
//!
//! ```
//! use quantum_pbw::arith::{qint, LaurentPoly};
//!
//! // Balanced quantum integers: [2] = t + t^{-1}.
//! assert_eq!(qint(2), LaurentPoly::from_pairs([(1, 1), (-1, 1)]));
//! ```

pub mod arith;
pub mod error;

pub mod root_data;

pub mod word_space;

pub mod klr;

pub mod linalg;

pub mod pbw;

pub mod global;

pub mod quiver;

pub mod report;

pub(crate) mod rng;
