//! Exact and high-precision machinery for upper bounds on the irrationality
//! measure `μ(α_k)` and the non-quadraticity measure `μ₂(α_k)` of
//!
//! `α_k = √(2k+1) · ln((√(2k+1) − 1) / (√(2k+1) + 1))`.
//!
//! * [`exact_arith`]: rationals, `ℚ(√D)`, a prime sieve and `lcm(1..n)`.
//! * [`forms`]: the auxiliary polynomial, exact `U`, `V`, `W` at `x_k` and
//!   the integer coefficients of the linear forms.
//! * [`omega`]: the set `Ω`, the prime products `Δ`, `Δ₁` and `N1`, `N2`.
//! * [`asymptotics`]: digamma, `α_k`, saddle points, `M1`, `M2`, `K1`, `K2`.
//! * [`measures`]: bound assembly, tables, verification, parameter search.
//! * [`cli`]: the `irrmeasure` command.

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod float;
pub mod forms;
pub mod measures;
pub mod omega;

pub use error::{Error, Result};
