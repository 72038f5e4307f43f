//! Certified analysis of the zeros of finite linear combinations of Hermite
//! polynomials.
//!
//! The crate constructs combinations of `K+1` consecutive Hermite
//! polynomials (standard `H_n` or the Appell normalization `H_n / (2^n n!)`)
//! and the generalized family driven by the backward shift operator
//! `p -> 2x p - p'`, then checks their structural properties — real-
//! rootedness, interlacing, Turan inequalities, non-real-count thresholds,
//! sign-count laws — exactly over the rationals with Sturm-chain
//! certificates. Zero asymptotics (Mehler-Heine limits, edge and non-real
//! zero tracking, the semicircle statistic) are verified numerically with
//! exact evaluation behind the floating comparison.

pub mod analysis;
pub mod asymptotics;
pub mod cli;
pub mod dyadic;
pub mod error;
pub mod generalized;
pub mod hermite;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod selftest;

pub use dyadic::{Dyadic, DyadicInterval};
pub use error::{Error, Result};
pub use hermite::{CombinationSpec, Normalization};
pub use poly::RationalPoly;
pub use rational::Rational;
pub use roots::{ComplexRootEstimate, ZeroReport};

/// Library version embedded in every report.
pub fn version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}
