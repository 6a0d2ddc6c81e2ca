//! Exact arithmetic for the integer partition function `p(n)`.
//!
//! The crate computes `p(n)` by several independent routes and checks them
//! against each other:
//!
//! * brute-force enumeration of partitions (small `n` only),
//! * Euler's pentagonal-number recurrence (the fast classical route),
//! * a level decomposition `p(n) = S_1(n) + S_2(n) + ... + S_K(n)` with
//!   `K = floor(sqrt(n))`, where each level is a nested sum over index
//!   vectors,
//! * polynomial closed forms for the second and third levels,
//! * the Hardy-Ramanujan leading-term estimate (floating point, approximate).
//!
//! A companion module implements Gaussian (q-)binomial coefficients and
//! machine checks for the classical identities they satisfy, together with a
//! partition-counting interpretation of their coefficients.
//!
//! All counts are exact [`CountValue`]s (arbitrary-precision unsigned
//! integers); floating point appears only in the estimator module.

pub mod closed_forms;
pub mod error;
pub mod estimate;
pub mod euler;
pub mod identities;
pub mod levels;
pub mod multipoly;
pub mod partition;
pub mod qpoly;
pub mod verify;

pub mod cli;

pub use error::Error;

/// Exact nonnegative count used throughout the crate.
pub type CountValue = num_bigint::BigUint;

/// Convenient `Result` alias for fallible crate operations.
pub type Result<T> = std::result::Result<T, Error>;
