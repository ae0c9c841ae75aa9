//! Exact counting, coefficient extraction, and enumeration for generalized
//! compositions of natural numbers.
//!
//! A generalized composition of `n` is an ordered sequence of parts summing
//! to `n` in which every part of value `i` additionally carries one of `b_i`
//! distinguishable types. The weight vector `b = (b_1, ..., b_r)` fixes how
//! many types each part value has; part values above `r` are unavailable.
//! Classic compositions with parts at most `r` are the all-ones case, and
//! their totals are the r-generalized Fibonacci (k-bonacci) numbers.
//!
//! Everything is computed in arbitrary-precision integer arithmetic:
//!
//! - [`count_compositions`] counts compositions of `n` into exactly `k`
//!   parts through a dynamic program over the final part;
//! - [`count_all`] counts compositions of `n` into any number of parts
//!   through an order-`r` linear recurrence;
//! - [`DensePoly`] and [`weighted_polynomial_coefficient`] expand powers of
//!   the weight polynomial `b_1 + b_2 x + ... + b_r x^(r-1)`, whose
//!   coefficients count the same objects;
//! - [`enumerate_compositions`] generates the compositions themselves, a
//!   brute-force oracle independent of every recursion above;
//! - [`check_identity`] verifies the identities relating all of these on
//!   bounded parameter grids and reports any mismatch.

pub mod composition;
pub mod counting;
pub mod enumerate;
pub mod identities;
pub mod poly;
pub mod weights;

/// Arbitrary-precision nonnegative integer used for every count and
/// coefficient in the crate. All arithmetic is exact at any magnitude.
pub type Count = num_bigint::BigUint;

pub use composition::{CompositionError, GeneralizedComposition, TypedPart};
pub use counting::{
    binomial, count_all, count_all_via_coefficients, count_compositions, fibonacci_via_binomials,
    r_fibonacci, r_fibonacci_via_coefficients, CountTable,
};
pub use enumerate::{count_by_enumeration, enumerate_compositions, CompositionCursor};
pub use identities::{
    check_identity, GridBounds, Identity, IdentityFailure, IdentityReport, UnknownIdentity,
};
pub use poly::{polynomial_coefficient, weighted_polynomial_coefficient, DensePoly};
pub use weights::{WeightVector, WeightVectorError};
