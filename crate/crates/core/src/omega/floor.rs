//! The three-group floor expression
//!
//! `([x−2ay] − [x−(b−2a)y] − [(b−4a)y]) + ([x−ay] − [x−(b−a)y] − [(b−2a)y])
//!  + ([x] − [x−by] − [by])`
//!
//! and membership of `y` in the set where it is `>= 1` for every real `x`.

use num_traits::ToPrimitive;

use crate::exact_arith::Rat;
use crate::forms::Family;

fn fl(r: Rat) -> i64 {
    r.floor()
        .to_i64()
        .expect("floor of a bounded argument fits in i64")
}

/// The three groups separately; each lies in `{0, 1}`.
pub fn floor_groups(family: Family, x: &Rat, y: &Rat) -> [i64; 3] {
    let (a, b) = (family.a as i64, family.b as i64);
    let sh = |c: i64| fl(x - &(y * &Rat::from(c)));
    let m = |c: i64| fl(y * &Rat::from(c));
    [
        sh(2 * a) - sh(b - 2 * a) - m(b - 4 * a),
        sh(a) - sh(b - a) - m(b - 2 * a),
        sh(0) - sh(b) - m(b),
    ]
}

pub fn floor_sum_value(family: Family, x: &Rat, y: &Rat) -> i64 {
    floor_groups(family, x, y).iter().sum()
}

/// Multipliers `c` such that the expression, as a step function of `x`,
/// only jumps at `x ≡ c·y (mod 1)`.
pub fn jump_multipliers(family: Family) -> [u64; 6] {
    let (a, b) = (family.a, family.b);
    [0, a, 2 * a, b - 2 * a, b - a, b]
}

/// `min_x` of the expression, taken over the six jump points of `x`: the
/// expression is right-continuous and 1-periodic in `x`.
pub fn min_over_x(family: Family, y: &Rat) -> i64 {
    jump_multipliers(family)
        .iter()
        .map(|&c| floor_sum_value(family, &(y * &Rat::from(c as i64)).frac(), y))
        .min()
        .expect("six candidates")
}

pub fn is_member(family: Family, y: &Rat) -> bool {
    min_over_x(family, y) >= 1
}

/// Integer form of [`min_over_x`] at `y = r/q` with `0 <= r < q`.
pub fn min_over_x_ratio(family: Family, r: u64, q: u64) -> i64 {
    let (a, b) = (family.a as i128, family.b as i128);
    let (r, q) = (r as i128, q as i128);
    let m = |c: i128| (c * r).div_euclid(q);
    let fixed = m(b - 4 * a) + m(b - 2 * a) + m(b);
    jump_multipliers(family)
        .iter()
        .map(|&c| {
            let xn = (c as i128 * r).rem_euclid(q);
            let sh = |c: i128| (xn - c * r).div_euclid(q);
            (sh(2 * a) - sh(b - 2 * a) + sh(a) - sh(b - a) + sh(0) - sh(b) - fixed) as i64
        })
        .min()
        .expect("six candidates")
}

pub fn is_member_ratio(family: Family, r: u64, q: u64) -> bool {
    min_over_x_ratio(family, r, q) >= 1
}
