//! Exact substrate: rationals, the quadratic field ℚ(√D), a prime sieve and
//! `d_n = lcm(1, …, n)`.

mod quad;
mod rat;
mod sieve;

pub use quad::{exact_sqrt, QuadRat};
pub use rat::Rat;
pub use sieve::{d_upto, PrimeSieve, DEFAULT_SIEVE_LIMIT};
