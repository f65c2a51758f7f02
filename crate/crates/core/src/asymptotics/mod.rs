//! High-precision constants: digamma at rational points, `α_k`, the saddle
//! roots with `M1`, `M2`, and the scaling limits `K1`, `K2`.

mod constants;
mod digamma;
mod saddle;

pub use constants::{
    alpha_value, alpha_with_bits, growth_constants, k_constants, ladder, GrowthConstants, Laddered,
};
pub use digamma::{bernoulli_upto, digamma};
pub use saddle::{complex_cubic, real_cubic, saddle_complex, saddle_real, XPoint};
