//! First-order joint projective invariants of planar points carrying
//! gradient data.
//!
//! A configuration of `n` points `(x_i, y_i)`, each with the gradient
//! `(p_i, q_i)` of an image function, is acted on diagonally by the
//! projective group. This crate evaluates the absolute invariants of that
//! action (`ζ_ij`, `τ`, `σ`), the relative invariants built from point
//! and gradient-line determinants (including the primitive `z_n`), and
//! checks the invariance laws, the weight equations and the algebraic
//! independence of the generating sets exactly over the rationals.

pub mod error;
pub mod geometry;
pub mod imaging;
pub mod invariants;
pub mod linalg;
pub mod scalar;
pub mod verification;

pub use error::{Error, Result};
pub use geometry::{Configuration, GradientSample, Homography, ProjLine, ProjPoint};
pub use invariants::{ExponentVector, InvariantDescriptor, Signature, Triple};
pub use scalar::{Dual, Rational, Scalar};
