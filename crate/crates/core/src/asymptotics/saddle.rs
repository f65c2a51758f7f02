//! The cubic saddle-point equations and the growth constants built from
//! their roots.
//!
//! Real saddle: `x·z(z−a)(z−2a) = (z−(b−2a))(z−(b−a))(z−b)`, root `z0 > b`.
//! Complex saddle: `x·(z+2a)(z+a)z = (z+(b−2a))(z+(b−a))(z+b)`, root with
//! `Im z1 > 0`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exact_arith::{QuadRat, Rat};
use crate::float::{bits_for_digits, BigComplex, BigFloat};
use crate::forms::{x_point, Family};

/// A point `x ∈ (0, 1)` as a working-precision value together with exact
/// rational bounds `lo <= x <= hi`.
#[derive(Clone, Debug)]
pub struct XPoint {
    pub value: BigFloat,
    pub lo: Rat,
    pub hi: Rat,
}

impl XPoint {
    pub fn from_rat(x: &Rat, prec: u32) -> Result<Self> {
        XPoint::checked(BigFloat::from_rat(x, prec), x.clone(), x.clone())
    }

    pub fn from_quad(x: &QuadRat, prec: u32) -> Result<Self> {
        if let Some(r) = x.as_rational() {
            return XPoint::from_rat(r, prec);
        }
        let value = BigFloat::from_quad(x, prec);
        // from_quad is good to a couple of ulps; widen generously
        let slack = &value.ulp() * &Rat::from(64);
        let centre = value.to_rat();
        XPoint::checked(value, &centre - &slack, &centre + &slack)
    }

    /// `x_k` at the working precision for `digits`.
    pub fn for_k(k: u64, digits: u32) -> Result<Self> {
        XPoint::from_quad(&x_point(k)?, bits_for_digits(digits) + 32)
    }

    fn checked(value: BigFloat, lo: Rat, hi: Rat) -> Result<Self> {
        if !lo.is_positive() || hi >= 1 {
            return Err(Error::Domain(format!("x must lie in (0, 1), got {value}")));
        }
        Ok(XPoint { value, lo, hi })
    }
}

fn sym(family: Family) -> (i64, i64, i64) {
    let (a, b) = (family.a as i64, family.b as i64);
    let (p, q, r) = (b - 2 * a, b - a, b);
    (p + q + r, p * q + p * r + q * r, p * q * r)
}

/// Coefficients `c0..c3` (ascending) of
/// `x·z(z−a)(z−2a) − (z−(b−2a))(z−(b−a))(z−b)`.
pub fn real_cubic(family: Family, x: &Rat) -> [Rat; 4] {
    let a = family.a as i64;
    let (e1, e2, e3) = sym(family);
    [
        Rat::from(e3),
        x * &Rat::from(2 * a * a) - Rat::from(e2),
        Rat::from(e1) - x * &Rat::from(3 * a),
        x - &Rat::one(),
    ]
}

/// Coefficients `c0..c3` (ascending) of
/// `x·(z+2a)(z+a)z − (z+(b−2a))(z+(b−a))(z+b)`, at working precision.
pub fn complex_cubic(family: Family, x: &BigFloat) -> [BigFloat; 4] {
    let a = family.a as i64;
    let p = x.precision();
    let (e1, e2, e3) = sym(family);
    let c = |v: i64| BigFloat::from_i64(v, p);
    [
        c(-e3),
        x.mul_i64(2 * a * a) - c(e2),
        x.mul_i64(3 * a) - c(e1),
        x - &c(1),
    ]
}

fn horner_rat(c: &[Rat; 4], z: &Rat) -> Rat {
    c.iter().rev().fold(Rat::zero(), |acc, ci| acc * z + ci)
}

fn horner(c: &[BigFloat; 4], z: &BigFloat) -> BigFloat {
    let mut acc = c[3].clone();
    for ci in c[..3].iter().rev() {
        acc = acc * z + ci;
    }
    acc
}

fn horner_deriv(c: &[BigFloat; 4], z: &BigFloat) -> BigFloat {
    (c[3].mul_i64(3) * z + c[2].mul_i64(2)) * z + &c[1]
}

fn horner_complex(c: &[BigFloat; 4], z: &BigComplex) -> (BigComplex, BigComplex) {
    let mut f = BigComplex::from_real(c[3].clone());
    let mut df = BigComplex::from_real(BigFloat::zero(c[3].precision()));
    for ci in c[..3].iter().rev() {
        df = &(&df * z) + &f;
        f = (&f * z).add_real(ci);
    }
    (f, df)
}

/// Deflates the cubic by a known root `r`: `c3 z² + B z + C`.
fn deflate(c: &[BigFloat; 4], r: &BigFloat) -> (BigFloat, BigFloat, BigFloat) {
    let b = &c[2] + &(&c[3] * r);
    let cc = &c[1] + &(&b * r);
    (c[3].clone(), b, cc)
}

fn tiny(prec: u32, scale: &BigFloat) -> BigFloat {
    let t = scale.abs().max(BigFloat::from_i64(1, prec));
    t.mul_pow2(-(prec as i64) + 8)
}

/// Newton on a real cubic from `start`, kept inside `[lo, hi]` by falling
/// back to bisection steps.
fn newton_bracketed(
    c: &[BigFloat; 4],
    start: BigFloat,
    mut lo: BigFloat,
    mut hi: BigFloat,
    prec: u32,
) -> BigFloat {
    let f_lo_sign = horner(c, &lo).cmp_value(&BigFloat::zero(prec));
    let mut z = start;
    for _ in 0..400 {
        let fz = horner(c, &z);
        if fz.is_zero() {
            return z;
        }
        if fz.cmp_value(&BigFloat::zero(prec)) == f_lo_sign {
            lo = z.clone();
        } else {
            hi = z.clone();
        }
        let dz = horner_deriv(c, &z);
        let mut next = match fz.checked_div(&dz) {
            Ok(step) => &z - &step,
            Err(_) => (&lo + &hi).mul_pow2(-1),
        };
        if next.cmp_value(&lo) != Ordering::Greater || next.cmp_value(&hi) != Ordering::Less {
            next = (&lo + &hi).mul_pow2(-1);
        }
        let moved = (&next - &z).abs();
        z = next;
        if moved.cmp_value(&tiny(prec, &z)) != Ordering::Greater {
            break;
        }
    }
    z
}

/// `Σ_i w_i·ln(t_i)` over positive reals.
fn weighted_ln(terms: &[(i64, BigFloat)]) -> Result<BigFloat> {
    let p = terms[0].1.precision();
    let mut acc = BigFloat::zero(p);
    for (w, t) in terms {
        acc = acc + t.ln()?.mul_i64(*w);
    }
    Ok(acc)
}

/// `(b−4a)ln(b−4a) + (b−2a)ln(b−2a) + b ln b + (b/2) ln x`, shared by `M1`, `M2`.
fn shared_terms(family: Family, x: &BigFloat) -> Result<BigFloat> {
    let p = x.precision();
    let (lo, mid, b) = (family.low() as i64, family.mid() as i64, family.b as i64);
    let c = |v: i64| BigFloat::from_i64(v, p);
    let fixed = weighted_ln(&[(lo, c(lo)), (mid, c(mid)), (b, c(b))])?;
    Ok(fixed + x.ln()?.mul_i64(b).mul_pow2(-1))
}

/// The real saddle `z0 > b` and `M1`.
pub fn saddle_real(family: Family, x: &XPoint, digits: u32) -> Result<(BigFloat, BigFloat)> {
    let prec = bits_for_digits(digits) + 32;
    let (a, b) = (family.a as i64, family.b as i64);
    let c_lo = real_cubic(family, &x.lo);
    let c_hi = real_cubic(family, &x.hi);
    // f grows with x when z > 2a: positive at x_lo certifies f > 0, negative
    // at x_hi certifies f < 0.
    let mut zl = Rat::from(b);
    if !horner_rat(&c_lo, &zl).is_positive() {
        return Err(Error::NotApplicable(
            "real saddle: no sign change above b".into(),
        ));
    }
    let mut step = Rat::one();
    let mut zh = &zl + &step;
    let mut tries = 0;
    while !horner_rat(&c_hi, &zh).is_negative() {
        zl = zh.clone();
        step = &step * &Rat::from(2);
        zh = &zh + &step;
        tries += 1;
        if tries > 200 {
            return Err(Error::NotApplicable(
                "real saddle: no sign change above b".into(),
            ));
        }
    }
    for _ in 0..64 {
        let mid = (&zl + &zh) / Rat::from(2);
        if horner_rat(&c_lo, &mid).is_positive() {
            zl = mid;
        } else if horner_rat(&c_hi, &mid).is_negative() {
            zh = mid;
        } else {
            break;
        }
    }
    let xv = x.value.with_precision(prec);
    let c = real_cubic_float(family, &xv);
    let start = BigFloat::from_rat(&((&zl + &zh) / Rat::from(2)), prec);
    let z0 = newton_bracketed(
        &c,
        start,
        BigFloat::from_rat(&zl, prec),
        BigFloat::from_rat(&zh, prec),
        prec,
    );
    // no second root above b
    let (qa, qb, qc) = deflate(&c, &z0);
    let disc = &qb * &qb - &(&qa * &qc).mul_i64(4);
    if !disc.is_negative() {
        let s = disc.sqrt()?;
        let bf = BigFloat::from_i64(b, prec);
        for r in [(-&qb + &s), (-&qb - &s)] {
            let root = r.checked_div(&qa.mul_i64(2))?;
            if root.cmp_value(&bf) == Ordering::Greater {
                return Err(Error::NotApplicable(
                    "real saddle: more than one root above b".into(),
                ));
            }
        }
    }
    let f = |v: i64| &z0 - &BigFloat::from_i64(v, prec);
    let mid = family.mid() as i64;
    let top = weighted_ln(&[
        (mid, f(mid)),
        (b - a, f(b - a)),
        (b, f(b)),
        (-2 * a, f(2 * a)),
        (-a, f(a)),
    ])?;
    let m1 = top - shared_terms(family, &xv)?;
    let out = bits_for_digits(digits);
    Ok((z0.with_precision(out), m1.with_precision(out)))
}

fn real_cubic_float(family: Family, x: &BigFloat) -> [BigFloat; 4] {
    let a = family.a as i64;
    let p = x.precision();
    let (e1, e2, e3) = sym(family);
    let c = |v: i64| BigFloat::from_i64(v, p);
    [
        c(e3),
        x.mul_i64(2 * a * a) - c(e2),
        c(e1) - x.mul_i64(3 * a),
        x - &c(1),
    ]
}

/// The complex saddle `z1` with `Im z1 > 0` and `M2`.
pub fn saddle_complex(family: Family, x: &XPoint, digits: u32) -> Result<(BigComplex, BigFloat)> {
    let prec = bits_for_digits(digits) + 32;
    let (a, b) = (family.a as i64, family.b as i64);
    let xv = x.value.with_precision(prec);
    let c = complex_cubic(family, &xv);
    // g(0) = −(b−2a)(b−a)b < 0 and g → +∞ as z → −∞ since x < 1
    let zero = BigFloat::zero(prec);
    let cauchy = c[..3]
        .iter()
        .map(|ci| ci.abs().checked_div(&c[3].abs()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(BigFloat::from_i64(1, prec), |m, v| m.max(v));
    let mut lo = -(cauchy + BigFloat::from_i64(1, prec));
    let mut hi = zero.clone();
    if horner(&c, &lo).is_negative() {
        return Err(Error::NotApplicable(
            "complex saddle: bracket failed".into(),
        ));
    }
    for _ in 0..64 {
        let mid = (&lo + &hi).mul_pow2(-1);
        if horner(&c, &mid).is_negative() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let start = (&lo + &hi).mul_pow2(-1);
    let r = newton_bracketed(&c, start, lo, hi, prec);
    let (qa, qb, qc) = deflate(&c, &r);
    let disc = &qb * &qb - &(&qa * &qc).mul_i64(4);
    if !disc.is_negative() {
        return Err(Error::NotApplicable(
            "complex saddle: all three roots are real".into(),
        ));
    }
    let two_a = qa.mul_i64(2);
    let re = (-&qb).checked_div(&two_a)?;
    let im = (-disc).sqrt()?.checked_div(&two_a)?.abs();
    let mut z1 = BigComplex::new(re, im);
    for _ in 0..8 {
        let (f, df) = horner_complex(&c, &z1);
        let step = f.checked_div(&df)?;
        let small = step.abs().cmp_value(&tiny(prec, &z1.abs())) != Ordering::Greater;
        z1 = &z1 - &step;
        if small {
            break;
        }
    }
    let f = |v: i64| z1.add_real(&BigFloat::from_i64(v, prec)).ln_abs();
    let mid = family.mid() as i64;
    let top = f(mid)?.mul_i64(mid) + f(b - a)?.mul_i64(b - a) + f(b)?.mul_i64(b)
        - f(2 * a)?.mul_i64(2 * a)
        - f(a)?.mul_i64(a);
    let m2 = top - shared_terms(family, &xv)?;
    let out = bits_for_digits(digits);
    let z1 = BigComplex::new(z1.re.with_precision(out), z1.im.with_precision(out));
    Ok((z1, m2.with_precision(out)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(a: u64, b: u64) -> Family {
        Family::new(a, b).unwrap()
    }

    /// Weierstrass (Durand–Kerner) simultaneous iteration for all three roots.
    fn all_roots(c: &[BigFloat; 4]) -> Vec<BigComplex> {
        let p = c[0].precision();
        let lead = c[3].clone();
        let monic: Vec<BigFloat> = c.iter().map(|ci| ci.checked_div(&lead).unwrap()).collect();
        let monic: [BigFloat; 4] = monic.try_into().unwrap();
        let seed = BigComplex::new(
            BigFloat::parse("0.4", p).unwrap(),
            BigFloat::parse("0.9", p).unwrap(),
        );
        let mut z = vec![BigComplex::from_real(BigFloat::from_i64(1, p))];
        z.push(&z[0] * &seed);
        z.push(&z[1] * &seed);
        for _ in 0..600 {
            let prev = z.clone();
            for i in 0..3 {
                let (f, _) = horner_complex(&monic, &prev[i]);
                let mut den = BigComplex::from_real(BigFloat::from_i64(1, p));
                for (j, w) in prev.iter().enumerate() {
                    if j != i {
                        den = &den * &(&prev[i] - w);
                    }
                }
                z[i] = &prev[i] - &f.checked_div(&den).unwrap();
            }
        }
        z
    }

    fn agree(a: &BigFloat, b: &BigFloat, digits: f64) -> bool {
        let d = (a - b).abs();
        d.is_zero() || (d.log2_floor().unwrap() as f64) < -digits * 3.32
    }

    #[test]
    fn real_root_residual_and_oracle() {
        let f = fam(1, 7);
        let x = XPoint::for_k(6, 60).unwrap();
        let (z0, m1) = saddle_real(f, &x, 60).unwrap();
        assert!(z0.to_f64() > 7.0);
        let p = bits_for_digits(60) + 32;
        let c = real_cubic_float(f, &x.value.with_precision(p));
        let res = horner(&c, &z0.with_precision(p));
        assert!(res.is_zero() || res.log2_floor().unwrap() < -(55.0 * 3.32) as i64);
        let roots = all_roots(&c);
        let best = roots
            .iter()
            .filter(|r| r.im.abs().to_f64() < 1e-30)
            .map(|r| r.re.clone())
            .fold(BigFloat::from_i64(-1000, p), |m, v| m.max(v));
        assert!(agree(&best, &z0, 30.0));
        assert!(m1.to_f64().is_finite());
    }

    #[test]
    fn complex_root_residual_and_oracle() {
        let f = fam(1, 13);
        let x = XPoint::for_k(8, 60).unwrap();
        let (z1, m2) = saddle_complex(f, &x, 60).unwrap();
        assert!(z1.im.is_positive());
        let p = bits_for_digits(60) + 32;
        let c = complex_cubic(f, &x.value.with_precision(p));
        let (res, _) = horner_complex(&c, &z1);
        assert!(res
            .abs()
            .log2_floor()
            .map_or(true, |e| e < -(50.0 * 3.32) as i64));
        let roots = all_roots(&c);
        let w = roots.iter().find(|r| r.im.to_f64() > 1e-10).unwrap();
        assert!(agree(&w.re, &z1.re, 30.0));
        assert!(agree(&w.im, &z1.im, 30.0));
        assert!(m2.to_f64().is_finite());
    }

    #[test]
    fn table_families_have_saddles() {
        for (a, b) in [(1, 7), (1, 13), (2, 23)] {
            for k in [3, 6, 7, 12] {
                let x = XPoint::for_k(k, 40).unwrap();
                let (z0, _) = saddle_real(fam(a, b), &x, 40).unwrap();
                assert!(z0.to_f64() > b as f64);
                let (z1, _) = saddle_complex(fam(a, b), &x, 40).unwrap();
                assert!(z1.im.is_positive());
            }
        }
    }

    #[test]
    fn xpoint_bounds() {
        let x = XPoint::for_k(6, 40).unwrap();
        assert!(x.lo < x.hi);
        assert!(x.lo <= x.value.to_rat() && x.value.to_rat() <= x.hi);
        let exact = XPoint::for_k(4, 40).unwrap();
        assert_eq!(exact.lo, Rat::new(1, 2).unwrap());
        assert!(XPoint::from_rat(&Rat::from(2), 100).is_err());
    }
}
