//! Exact-arithmetic engine for accelerating hypergeometric series whose
//! Pochhammer symbols carry shifted indices.
//!
//! The pipeline runs bottom-up:
//!
//! - [`exact_arith`]: rationals, dense univariate and sparse multivariate
//!   polynomials, rational functions.
//! - [`hypergeom_terms`]: input families as products of Gamma factors and their
//!   exact shift ratios.
//! - [`telescoper`]: the printed symbolic recurrences, Gosper, and a
//!   two-term Zeilberger for instantiated families.
//! - [`accelerator`]: accelerated term streams, rates, Chu-style normalization.
//! - [`numerics`]: binary floats, enclosures, constants, series evaluation.
//! - [`catalog`]: the identity records and their verification drivers.
//!
//! The crate is `no_std` with `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod accelerator;
pub mod catalog;
pub mod error;
pub mod exact_arith;
pub mod hypergeom_terms;
pub mod numerics;
pub mod telescoper;

pub use error::{Error, Result};
