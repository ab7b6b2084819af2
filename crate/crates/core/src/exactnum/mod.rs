//! Exact arithmetic: spins, big rationals and square roots of rationals.

mod factorial;
mod spin;
mod sqrt_rational;

pub use factorial::{factorial, primes_up_to, FactorialRatio, FACT_CACHE_ENV};
pub use spin::{spin_from_twice, Spin};
pub use sqrt_rational::{square_free_split, sqrt_rational_add, sqrt_rational_mul, SqrtRational};


/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;
