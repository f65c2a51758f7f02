use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_arith::Rat;
use crate::float::{bits_for_digits, BigFloat};

static BERNOULLI: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// `B_0 ..= B_m` (with `B_1 = −1/2`), exact and cached.
pub fn bernoulli_upto(m: usize) -> Vec<Rat> {
    let mut cache = BERNOULLI.lock().expect("bernoulli cache poisoned");
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    // Σ_{j=0}^{i} C(i+1, j) B_j = 0
    while cache.len() <= m {
        let i = cache.len();
        let mut binom = BigInt::one();
        let mut acc = Rat::zero();
        for (j, b) in cache.iter().enumerate() {
            acc += &(b * &Rat::from_int(binom.clone()));
            binom = binom * (i + 1 - j) / (j + 1);
        }
        let next = -(acc / Rat::from((i + 1) as i64));
        cache.push(next);
    }
    cache[..=m].to_vec()
}

/// `ψ(x)` for rational `x > 0`, accurate to about `digits` decimal digits.
///
/// Shifts the argument with `ψ(x) = ψ(x+s) − Σ_{i<s} 1/(x+i)`, the sum done
/// exactly, until it exceeds roughly `0.11·bits`, then sums the asymptotic
/// series `ln y − 1/(2y) − Σ B_{2j}/(2j·y^{2j})` until a term drops below the
/// working ulp. For real `y > 0` the remainder is bounded by the first
/// omitted term.
pub fn digamma(x: &Rat, digits: u32) -> Result<BigFloat> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("digamma needs x > 0, got {x}")));
    }
    let prec = bits_for_digits(digits);
    let wp = prec + 32;
    let threshold = Rat::from((0.12 * wp as f64).ceil() as i64 + 8);
    let mut y = x.clone();
    let mut shift_sum = Rat::zero();
    while y < threshold {
        shift_sum += &y.recip()?;
        y += &Rat::one();
    }
    let yf = BigFloat::from_rat(&y, wp);
    let mut acc = yf.ln()? - BigFloat::from_rat(&(y.recip()? / Rat::from(2)), wp);
    let inv_y2 = BigFloat::from_rat(&(&y * &y).recip()?, wp);
    let mut pow = inv_y2.clone();
    let stop = -(wp as i64) - 8;
    let mut j = 1usize;
    let mut prev_mag = i64::MAX;
    loop {
        let b = bernoulli_upto(2 * j).pop().expect("nonempty");
        let coef = b / Rat::from(2 * j as i64);
        let term = BigFloat::from_rat(&coef, wp) * &pow;
        let mag = term.log2_floor().unwrap_or(i64::MIN);
        if mag < stop {
            break;
        }
        if mag > prev_mag {
            return Err(Error::Domain(format!(
                "digamma series diverged before reaching {digits} digits"
            )));
        }
        prev_mag = mag;
        acc = acc - term;
        pow = &pow * &inv_y2;
        j += 1;
    }
    let acc = acc - BigFloat::from_rat(&shift_sum, wp);
    Ok(acc.with_precision(prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    const EULER: &str =
        "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467";

    fn close(a: &BigFloat, b: &BigFloat, digits: i64) -> bool {
        let d = (a - b).abs();
        d.is_zero() || d.log2_floor().unwrap() < -(digits as f64 * 3.32) as i64
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli_upto(12);
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], Rat::zero());
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[6], r(1, 42));
        assert_eq!(b[12], r(-691, 2730));
    }

    #[test]
    fn psi_one_and_half() {
        let p = bits_for_digits(70);
        let gamma = BigFloat::parse(EULER, p).unwrap();
        let psi1 = digamma(&Rat::one(), 70).unwrap();
        assert!(close(&psi1, &-&gamma, 68));
        let psi_half = digamma(&r(1, 2), 70).unwrap();
        let expect = -&gamma - BigFloat::ln2(p).mul_i64(2);
        assert!(close(&psi_half, &expect, 68));
    }

    #[test]
    fn recurrence() {
        let x = r(3, 7);
        let a = digamma(&(&x + &Rat::one()), 60).unwrap();
        let b = digamma(&x, 60).unwrap();
        let inv = BigFloat::from_rat(&x.recip().unwrap(), bits_for_digits(60));
        assert!(close(&(a - b), &inv, 58));
    }

    #[test]
    fn reflection_at_quarter() {
        // ψ(3/4) − ψ(1/4) = π·cot(π/4) = π
        let p = bits_for_digits(60);
        let d = digamma(&r(3, 4), 60).unwrap() - digamma(&r(1, 4), 60).unwrap();
        assert!(close(&d, &BigFloat::pi(p), 58));
    }

    #[test]
    fn large_argument_and_domain() {
        assert!(digamma(&Rat::zero(), 30).is_err());
        assert!(digamma(&r(-1, 2), 30).is_err());
        // ψ(1000) ≈ 6.9072551956...
        let v = digamma(&Rat::from(1000), 30).unwrap();
        assert!((v.to_f64() - 6.907_255_195_648_812).abs() < 1e-12);
    }
}
