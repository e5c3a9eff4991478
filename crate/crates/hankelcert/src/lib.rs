//! Upper bounds for the second Hankel determinant `|a2 a4 - a3^2|` over
//! bi-univalent function classes defined by subordination to the Chebyshev
//! generating function `H(z,t) = 1/(1 - 2 t z + z^2)`, together with an
//! independent numerical verification of every step of the derivation.
//!
//! A normalized analytic `f(z) = z + a2 z^2 + ...` on the unit disk belongs
//! to the class selected by `(lambda, mu, t)` when both
//! `(1-lambda)(f/z)^mu + lambda f'(z)(f/z)^(mu-1)` and the same expression
//! for the inverse function are subordinate to `H(., t)`. For such `f` the
//! determinant `|a2 a4 - a3^2|` admits a piecewise closed-form bound driven
//! by the signs of two polynomials `M1(lambda, mu; t)`, `M2(lambda, mu; t)`;
//! [`bounds::hankel_bound`] evaluates it.
//!
//! The verification side re-derives the bound numerically instead of
//! trusting the transcription:
//!
//! * [`series`] — truncated power-series arithmetic (products, real powers,
//!   composition, reversion) used to recompute every coefficient expansion
//!   from first principles;
//! * [`chebyshev`] — recurrence evaluation of `U_n`/`T_n` with identity
//!   checks against the trigonometric and generating-function definitions;
//! * [`oracles`] — admissible-coefficient sampling, brute-force grid
//!   maximization, bisection root finding, and seeded Monte-Carlo runs that
//!   try to break the bound;
//! * [`suites`] — the named check collections behind `hankelcert verify`.
//!
//! The `hankelcert` binary exposes all of it as subcommands (`bound`,
//! `sweep`, `verify`, `thresholds`, `series`); `examples/` holds one
//! runnable walkthrough per capability.

pub mod bounds;
pub mod chebyshev;
pub mod cli;
pub mod oracles;
pub mod params;
pub mod series;
pub mod suites;

mod grid;
mod roots;

pub use bounds::{hankel_bound, BoundResult, SignCase};
pub use oracles::{CoefficientTriple, GrenanderSample, McReport};
pub use params::{ClassParams, ParamError};
pub use series::TruncatedSeries;
