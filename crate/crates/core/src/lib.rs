//! Multiplicity sequences of submodules of free modules over a graded
//! polynomial ring, used to test numerically for reductions.
//!
//! Every length is an exact rank computation over a prime field; every
//! polynomial is recovered from an exact Hilbert table by finite differences
//! and checked on held-out cells before its coefficients are trusted.
//!
//! The runnable programs under `examples/` walk through each capability:
//!
//! ```bash
//! cargo run --example multiplicity_sequence
//! cargo run --example reduction_check
//! ```

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod document;
pub mod error;
pub mod hilbert;
pub mod modules;
pub mod multiplicity;
pub mod reduction;
pub mod selftest;

pub use error::{Error, Result};
