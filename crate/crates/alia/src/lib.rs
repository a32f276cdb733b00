//! Exact-arithmetic toolkit for left-Alia algebras.
//!
//! A left-Alia algebra is a vector space with a bilinear bracket satisfying
//! the symmetric Jacobi identity. This crate provides, over exact rational or
//! cyclotomic ground fields:
//!
//! - structure-constant algebras with brute-force identity checkers and
//!   classification flags,
//! - representations, duals, semidirect products, and matched pairs,
//! - symmetric invariant bilinear forms and quadratic left-Alia algebras,
//! - left-Alia coalgebras, bialgebras, double brackets, and Manin triples,
//! - sparse multivariate polynomials with pseudo-reflection detection and
//!   the induced twisted derivations and polynomial brackets.
//!
//! Every check is exact: a report either certifies an identity on all basis
//! tuples or lists the failing tuples with their residuals.

pub mod algebra;
pub mod bialgebra;
pub mod error;
pub mod io;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod quad;
pub mod reflection;
pub mod rep;
pub mod report;
pub mod scalar;

pub use algebra::{check_alia, classify, AlgebraSC, Side};
pub use error::{Error, Result};
pub use matrix::Mat;
pub use poly::MultiPoly;
pub use rep::{check_representation, Representation};
pub use report::{CheckReport, Violation};
pub use scalar::{primitive_root, FieldSpec, Rational, Scalar};
