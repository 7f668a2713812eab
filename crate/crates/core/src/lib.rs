//! Construction and analysis of 8×8 substitution boxes.
//!
//! Builds the AES S-box, the affine-power-affine (APA) S-box and its seven
//! output-rotated variants, and evaluates any S-box against nonlinearity,
//! SAC, BIC, differential uniformity, linear approximation probability and
//! algebraic complexity.

pub mod affine;
pub mod algebraic;
pub mod analysis;
pub mod error;
pub mod format;
pub mod gf256;
pub mod rational;
pub mod sbox;

pub use affine::{affine_apply, affine_invert, AffineMap};
pub use algebraic::{algebraic_complexity, evaluate, interpolate, FieldPolynomial};
pub use analysis::{analyze, AnalysisReport};
pub use error::SboxError;
pub use gf256::{gf_add, gf_inv, gf_mul, gf_pow, FieldElement};
pub use rational::Rational;
pub use sbox::{
    build_aes_sbox, build_apa_sbox, build_apa_sbox_with, build_rotation_sbox, builtin,
    is_bijective, rotate_byte, sbox_from_bytes, SBox, BUILTIN_NAMES,
};
