//! Coefficient transform turning `−Σ_{k≥1} P(−k) z^k` into a finite sum in
//! powers of `t = z/(z−1)`:
//!
//! `−Σ_{k≥1} P(−k) z^k = Σ_{j=0}^{d} c_j t^{j+1}`,
//! `c_j = Σ_{k=1}^{j+1} (−1)^{k−1} P(−k) C(j, k−1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::exact_arith::{QuadRat, Rat};

/// Numerators of `c_0..c_d` over `p.denominator()`.
///
/// `c_j` is `(−1)^j` times the `j`-th forward difference of
/// `i ↦ P(−1−i)` at 0, so the table of differences replaces the binomial sum.
pub fn transform_numerators(p: &IntPoly) -> Vec<BigInt> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    let mut row: Vec<BigInt> = (1..=d as i64 + 1).map(|k| p.eval_numerator(-k)).collect();
    let mut out = Vec::with_capacity(d + 1);
    for j in 0..=d {
        out.push(if j % 2 == 0 { row[0].clone() } else { -&row[0] });
        for i in 0..row.len() - 1 {
            row[i] = &row[i + 1] - &row[i];
        }
        row.pop();
    }
    out
}

pub fn transform_coeffs(p: &IntPoly) -> Vec<Rat> {
    transform_numerators(p)
        .into_iter()
        .map(|c| Rat::new(c, p.denominator().clone()).expect("positive denominator"))
        .collect()
}

/// `Σ_j (nums[j] / den) · t^{j+1}` evaluated exactly in ℚ(√D).
///
/// Horner's rule runs on integer numerator pairs over a running power of the
/// common denominator of `t`, reducing only once at the end.
pub fn transformed_sum(nums: &[BigInt], den: &BigInt, t: &QuadRat) -> QuadRat {
    let d = t.radicand();
    let dd = BigInt::from(d);
    let r = t.u().denom().lcm(t.v().denom());
    let p = t.u().numer() * (&r / t.u().denom());
    let q = t.v().numer() * (&r / t.v().denom());
    let (mut x, mut y) = (BigInt::zero(), BigInt::zero());
    let mut rpow = BigInt::one();
    for c in nums.iter().rev() {
        let nx = &x * &p + &dd * &y * &q;
        let ny = &x * &q + &y * &p;
        rpow *= &r;
        x = nx + c * &rpow;
        y = ny;
    }
    let fx = &x * &p + &dd * &y * &q;
    let fy = &x * &q + &y * &p;
    let total_den = rpow * &r * den;
    QuadRat::new(
        Rat::new(fx, total_den.clone()).expect("nonzero"),
        Rat::new(fy, total_den).expect("nonzero"),
        d,
    )
    .expect("radicand is positive")
}
