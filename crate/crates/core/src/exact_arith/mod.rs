//! Exact arithmetic substrate.
//!
//! - [`Rational`]: arbitrary-size rationals (canonical, positive denominator).
//! - [`UniPoly`]: dense univariate polynomials over Q.
//! - [`UniRatFunc`]: reduced univariate rational functions (the field Q(x)).
//! - [`MultiPoly`]: sparse polynomials over the fixed variable universe [`Var`].
//! - [`RatFunc`]: multivariate rational functions, equality by cross-multiplication.
//! - [`parse`]: a small reader for printed polynomial text.

mod multipoly;
pub mod parse;
mod ratfunc;
mod rational;
mod unipoly;
mod uniratfunc;

pub use multipoly::{Mono, MultiPoly};
pub use ratfunc::{ratfunc_eval, ratfunc_normalize, RatFunc};
pub use rational::{format_rational, int, parse_rational, rat, rational_to_f64, Rational};
pub use unipoly::{poly_shift, rational_roots, UniPoly};
pub use uniratfunc::UniRatFunc;
pub(crate) use rational::to_i64;
pub(crate) use unipoly::content as unipoly_content;

use core::fmt;

/// The fixed variable universe: six free parameters, `n`, `k`, and a spare
/// series index `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    C,
    D,
    E,
    F,
    N,
    K,
    J,
}

pub const NVARS: usize = 9;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::A,
        Var::B,
        Var::C,
        Var::D,
        Var::E,
        Var::F,
        Var::N,
        Var::K,
        Var::J,
    ];
    pub const PARAMS: [Var; 6] = [Var::A, Var::B, Var::C, Var::D, Var::E, Var::F];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["a", "b", "c", "d", "e", "f", "n", "k", "j"][self as usize]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A partial assignment of rationals to variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Binding {
    vals: [Option<Rational>; NVARS],
}

impl Binding {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, x: Rational) -> Self {
        self.vals[v.index()] = Some(x);
        self
    }

    pub fn set(&mut self, v: Var, x: Rational) {
        self.vals[v.index()] = Some(x);
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.vals[v.index()].as_ref()
    }

    /// Binds the first `xs.len()` parameters a, b, c, ... in order.
    pub fn params(xs: &[Rational]) -> Self {
        let mut b = Self::new();
        for (v, x) in Var::PARAMS.iter().zip(xs) {
            b.set(*v, x.clone());
        }
        b
    }
}
