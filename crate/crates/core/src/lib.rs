//! Exact arithmetic for polynomial q-series identities.
//!
//! Three layers:
//! - [`laurent`]: sparse Laurent polynomials over the fixed alphabet
//!   (q, z, a, b, c) with arbitrary-precision integer coefficients;
//! - [`qkit`]: q-combinatorial primitives (triangular numbers, Pochhammer
//!   products, Gaussian binomials, partition counts) and a factored-ratio
//!   engine that evaluates sums of Pochhammer ratios exactly, clearing
//!   denominators without ever materializing rational functions;
//! - [`identities`]: the executable catalog of identities, each entry a pair
//!   of evaluators producing canonical polynomials after an explicit
//!   denominator-clearing normalizer, plus reduction checks tying general
//!   entries to their specializations.

pub mod identities;
pub mod laurent;
pub mod qkit;

pub use laurent::{
    ExponentVector, LaurentError, LaurentPolynomial, ParseError, RationalPoint, Replacement,
    SignedMonomial, Variable, VAR_COUNT,
};
