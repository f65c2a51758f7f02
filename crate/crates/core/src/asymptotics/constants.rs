use crate::error::Result;
use crate::exact_arith::QuadRat;
use crate::float::{bits_for_digits, BigComplex, BigFloat};
use crate::forms::{x_point, Family};

use super::saddle::{saddle_complex, saddle_real, XPoint};

/// `α_k = √(2k+1)·ln x_k`.
pub fn alpha_value(k: u64, digits: u32) -> Result<BigFloat> {
    alpha_with_bits(k, bits_for_digits(digits))
}

/// `α_k` rounded to `prec` bits.
pub fn alpha_with_bits(k: u64, prec: u32) -> Result<BigFloat> {
    let wp = prec + 32;
    let x = x_point(k)?;
    let root = BigFloat::from_quad(&QuadRat::sqrt_d(x.radicand())?, wp);
    let value = root * BigFloat::from_quad(&x, wp).ln()?;
    Ok(value.with_precision(prec))
}

/// `(K1, K2)`, the limits of `(1/n)·ln S_{k,n}` and `(1/n)·ln T_{k,n}` with
/// the `R`-normalisation removed.
pub fn k_constants(k: u64, family: Family, digits: u32) -> Result<(BigFloat, BigFloat)> {
    let prec = bits_for_digits(digits) + 32;
    let ln = |v: u64| BigFloat::from_i64(v as i64, prec).ln();
    let (mid, low) = (family.mid() as i64, family.low() as i64);
    let (base, extra) = if k % 2 == 0 {
        (ln(k / 2)?, BigFloat::zero(prec))
    } else {
        (ln(k)?, BigFloat::ln2(prec).mul_i64(3 * mid).mul_pow2(-1))
    };
    let k1 = &extra - &base.mul_i64(mid).mul_pow2(-1);
    let k2 = &extra - &base.mul_i64(low).mul_pow2(-1);
    let out = bits_for_digits(digits);
    Ok((k1.with_precision(out), k2.with_precision(out)))
}

/// Saddle roots and the growth constants at `x = x_k`.
#[derive(Clone, Debug)]
pub struct GrowthConstants {
    pub m1: BigFloat,
    pub m2: BigFloat,
    pub z0: BigFloat,
    pub z1: BigComplex,
    pub x: BigFloat,
}

pub fn growth_constants(k: u64, family: Family, digits: u32) -> Result<GrowthConstants> {
    let x = XPoint::for_k(k, digits)?;
    let (z0, m1) = saddle_real(family, &x, digits)?;
    let (z1, m2) = saddle_complex(family, &x, digits)?;
    Ok(GrowthConstants {
        m1,
        m2,
        z0,
        z1,
        x: x.value.with_precision(bits_for_digits(digits)),
    })
}

/// A value recomputed at twice the digits.
#[derive(Clone, Debug)]
pub struct Laddered {
    pub value: BigFloat,
    pub check: BigFloat,
    pub digits: u32,
}

impl Laddered {
    /// Agreement to `digits − 5` significant digits (absolute below 1).
    pub fn agrees(&self) -> bool {
        let diff = (&self.value - &self.check).abs();
        if diff.is_zero() {
            return true;
        }
        let scale = self.check.log2_floor().unwrap_or(0).max(0);
        let allowed = -((self.digits as f64 - 5.0) * std::f64::consts::LOG2_10).floor() as i64;
        diff.log2_floor().expect("nonzero") - scale < allowed
    }
}

/// Runs `f` at `digits` and `2·digits`.
pub fn ladder<F>(digits: u32, f: F) -> Result<Laddered>
where
    F: Fn(u32) -> Result<BigFloat>,
{
    Ok(Laddered {
        value: f(digits)?,
        check: f(2 * digits)?,
        digits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &BigFloat, b: f64, tol: f64) -> bool {
        (a.to_f64() - b).abs() < tol
    }

    #[test]
    fn alpha_closed_cases() {
        let p = bits_for_digits(50);
        let a4 = alpha_value(4, 50).unwrap();
        let expect = BigFloat::ln2(p).mul_i64(-3);
        assert!((&a4 - &expect)
            .abs()
            .log2_floor()
            .map_or(true, |e| e < -160));
        let a12 = alpha_value(12, 50).unwrap();
        let expect = BigFloat::from_i64(2, p).div_i64(3).ln().unwrap().mul_i64(5);
        assert!((&a12 - &expect)
            .abs()
            .log2_floor()
            .map_or(true, |e| e < -160));
    }

    #[test]
    fn alpha_six_two_ways() {
        // √13·ln((√13−1)/(√13+1)) against √13·ln((7−√13)/6)
        let p = bits_for_digits(50) + 32;
        let s = BigFloat::from_i64(13, p).sqrt().unwrap();
        let one = BigFloat::from_i64(1, p);
        let direct = &s * &((&s - &one).checked_div(&(&s + &one)).unwrap().ln().unwrap());
        let a6 = alpha_value(6, 50).unwrap();
        assert!((&a6 - &direct)
            .abs()
            .log2_floor()
            .map_or(true, |e| e < -160));
        assert!(close(&a6, -2.053_787_267_114_671, 1e-13));
    }

    #[test]
    fn k_values() {
        let f = Family::new(1, 7).unwrap();
        let (k1, k2) = k_constants(6, f, 40).unwrap();
        assert!(close(&k1, -2.5 * 3f64.ln(), 1e-14));
        assert!(close(&k2, -1.5 * 3f64.ln(), 1e-14));
        let (k1, _) = k_constants(2, f, 40).unwrap();
        assert!(k1.is_zero());
        let (k1, _) = k_constants(7, f, 40).unwrap();
        assert!(close(&k1, -2.5 * 7f64.ln() + 7.5 * 2f64.ln(), 1e-14));
    }

    #[test]
    fn ladder_agreement() {
        let l = ladder(40, |d| alpha_value(6, d)).unwrap();
        assert!(l.agrees());
        let bad = Laddered {
            value: BigFloat::from_i64(1, 200),
            check: BigFloat::parse("1.0001", 200).unwrap(),
            digits: 40,
        };
        assert!(!bad.agrees());
    }
}
