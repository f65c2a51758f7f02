//! The set `Ω ⊂ [0, 1)` cut out by the floor inequality, the prime products
//! `Δ`, `Δ₁`, and the denominator-savings constants `N1`, `N2`.

mod compute;
mod floor;
mod interval;
mod savings;

pub use compute::{breakpoints, compute_omega, compute_omega_with_bound, OmegaReport};
pub use floor::{
    floor_groups, floor_sum_value, is_member, is_member_ratio, jump_multipliers, min_over_x,
    min_over_x_ratio,
};
pub use interval::{Interval, IntervalSet};
pub use savings::{
    delta_products, finite_n1_estimate, finite_n2_estimate, n_constants, saving_primes,
    SavingPrimes,
};
