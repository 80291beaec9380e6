//! Exact computations for the Temperley–Lieb loop model with one open
//! boundary of mixed type.
//!
//! The crate builds the polynomial solution of the associated qKZ system,
//! evaluates its sum rules, computes the stochastic ground state exactly and
//! enumerates symmetric fully packed loops to check the combinatorial
//! conjectures relating the two.

pub mod algebra;
pub mod error;
pub mod fpl;
pub mod groundstate;
pub mod linalg;
pub mod link;
pub mod operators;
pub mod qkz;
pub mod reference;
pub mod report;
pub mod sample;
pub mod suite;
pub mod sumrule;

pub use error::{Error, Result};
