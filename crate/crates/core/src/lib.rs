//! Exact computation of scalar products, highest coefficients, and
//! Gaudin-determinant norms of Bethe vectors in o(2n+1)-invariant
//! integrable models.
//!
//! Everything runs over exact rational arithmetic: identities are checked
//! bit-exactly, limits and residues are taken in a univariate
//! rational-function field, and every algebraic formula is cross-validated
//! against a brute-force spin-chain oracle built from the R-matrix.
//!
//! Module map:
//! - [`field`] — exact rationals, univariate polynomials and rational
//!   functions (limits, residues), the [`field::Scalar`] abstraction.
//! - [`kinematics`] — the elementary rational weights, colored parameter
//!   collections, partition enumeration and the coefficient functions of
//!   the action/recurrence formulas.
//! - [`hc`] — the model-independent highest coefficient by two independent
//!   recurrences, the Izergin determinant, closed forms, the gl_n
//!   reduction, and the residue property.
//! - [`scalar`] — the generalized-model scalar product: sum formula,
//!   recurrence cross-check, modified models, residue/limit behavior.
//! - [`gaudin`] — Gaudin matrix, Korepin criteria, norm theorem.
//! - [`fock`] — the explicit finite-dimensional spin-chain oracle.
//! - [`verify`] — deterministic verification suites shared by the CLI and
//!   the acceptance tests.

// indexed loops mirror the color/index structure of the formulas
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod field;
pub mod fock;
pub mod gaudin;
pub mod hc;
pub mod io;
pub mod kinematics;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
