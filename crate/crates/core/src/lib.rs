//! Rank-7 Strassen-type algorithms for 2x2 matrix multiplication, generated
//! from the volume form `g(a1, a2, a3) = tr(a1a2a3) - tr(a3a2a1)` on 2x2
//! matrices modulo scalars.
//!
//! The pipeline: pick vectors `v_i` and linear forms `λ_i` with `λ_i(v_i) = 0`
//! ([`decomp::Params`]), expand the trilinear form
//! `h = tr(a1)tr(a2)tr(a3) - tr(a1a2a3)` into six rank-one terms
//! ([`decomp::decompose_h`]), and dualize into a seven-product bilinear
//! algorithm ([`decomp::build_algorithm`]). The canonical choice of
//! parameters reproduces Strassen's original algorithm. Algorithms are
//! checked exactly ([`verify`]) and can drive a recursive n x n
//! multiplication ([`engine`]).
//!
//! All symbolic work happens over exact fields ([`arith`]): the rationals or
//! GF(p), including characteristic 2.

pub mod algorithm;
pub mod arith;
pub mod cli;
pub mod decomp;
pub mod demo;
pub mod engine;
pub mod error;
pub mod io;
pub mod sample;
pub mod suite;
pub mod tensor;
pub mod verify;

pub use algorithm::{BilinearAlgorithm, BilinearTerm, FactorMatrices};
pub use arith::{format_scalar, parse_scalar, Field, PrimeElem, Rational, Scalar};
pub use decomp::{
    build_algorithm, c_matrix, canonical_strassen_params, decompose_g_alpha, decompose_h,
    denominator, validate_params, HDecomposition, Params, QStarForm, ValidationReport,
};
pub use error::{Error, Result};
pub use tensor::{CoVec2, Mat2, Mat8, Perm3, Vec2};
pub use verify::{apply_algorithm, verify_bilinear, verify_brent, VerificationReport};
