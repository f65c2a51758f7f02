//! Binary arbitrary-precision floating point: a big-integer mantissa scaled by
//! a power of two, rounded to a per-value bit precision.
//!
//! Only the operations needed downstream are provided: field arithmetic,
//! square root, natural logarithm, π, and decimal rendering.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{QuadRat, Rat};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Bits of precision needed to carry `digits` decimal digits, plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * LOG2_10).ceil() as u32 + 16
}

/// `mant · 2^exp`, rounded to `prec` significant bits.
#[derive(Clone)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    fn normalized(mant: BigInt, exp: i64, prec: u32) -> BigFloat {
        if mant.is_zero() {
            return BigFloat::zero(prec);
        }
        let nb = mant.bits();
        if nb <= prec as u64 {
            return BigFloat { mant, exp, prec };
        }
        let drop = nb - prec as u64;
        let negative = mant.is_negative();
        let mag = mant.magnitude().clone();
        let half = num_bigint::BigUint::one() << (drop - 1);
        let mag = (mag + half) >> drop;
        let mant = BigInt::from_biguint(if negative { Sign::Minus } else { Sign::Plus }, mag);
        BigFloat {
            mant,
            exp: exp + drop as i64,
            prec,
        }
    }

    pub fn zero(prec: u32) -> BigFloat {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn from_i64(n: i64, prec: u32) -> BigFloat {
        BigFloat::normalized(BigInt::from(n), 0, prec)
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> BigFloat {
        BigFloat::normalized(n.clone(), 0, prec)
    }

    pub fn from_rat(r: &Rat, prec: u32) -> BigFloat {
        let num = r.numer();
        let den = r.denom();
        if num.is_zero() {
            return BigFloat::zero(prec);
        }
        let shift = (prec as i64 + 2 + den.bits() as i64 - num.bits() as i64).max(0);
        let q = (num << shift as usize) / den;
        BigFloat::normalized(q, -shift, prec)
    }

    /// `u + v·√D` evaluated at this precision.
    pub fn from_quad(x: &QuadRat, prec: u32) -> BigFloat {
        let u = BigFloat::from_rat(x.u(), prec);
        if x.v().is_zero() {
            return u;
        }
        let root = BigFloat::from_i64(x.radicand() as i64, prec + 8)
            .sqrt()
            .expect("radicand is positive");
        u + BigFloat::from_rat(x.v(), prec + 8) * root
    }

    /// Parses a decimal or fraction string exactly, then rounds.
    pub fn parse(s: &str, prec: u32) -> Result<BigFloat> {
        Ok(BigFloat::from_rat(&s.parse::<Rat>()?, prec))
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> BigFloat {
        BigFloat::normalized(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// Exponent of the leading bit plus one: `|x| ∈ [2^(t−1), 2^t)`.
    fn top(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    /// Binary order of magnitude, `floor(log2 |x|)`; `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.top() - 1)
    }

    /// The exact dyadic rational this value represents.
    pub fn to_rat(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from_int(&self.mant << self.exp as usize)
        } else {
            Rat::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
                .expect("power of two is nonzero")
        }
    }

    /// One unit in the last place at the current precision, as an exact rational.
    pub fn ulp(&self) -> Rat {
        let e = if self.is_zero() {
            -(self.prec as i64)
        } else {
            self.top() - self.prec as i64
        };
        Rat::from(2).pow(e).expect("two is nonzero")
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let nb = self.mant.bits() as i64;
        let keep = 60.min(nb);
        let shifted = &self.mant >> (nb - keep) as usize;
        let m = shifted.to_f64().unwrap_or(0.0);
        m * 2f64.powi((self.exp + nb - keep).clamp(-2000, 2000) as i32)
    }

    fn add_impl(&self, other: &BigFloat, negate_other: bool) -> BigFloat {
        let prec = self.prec.max(other.prec);
        let other_mant = if negate_other {
            -&other.mant
        } else {
            other.mant.clone()
        };
        if other.is_zero() {
            return self.with_precision(prec);
        }
        if self.is_zero() {
            return BigFloat::normalized(other_mant, other.exp, prec);
        }
        let (ta, tb) = (self.top(), other.top());
        let gap = prec as i64 + 4;
        if ta > tb + gap {
            return self.with_precision(prec);
        }
        if tb > ta + gap {
            return BigFloat::normalized(other_mant, other.exp, prec);
        }
        let e = self.exp.min(other.exp);
        let m = (&self.mant << (self.exp - e) as usize) + (other_mant << (other.exp - e) as usize);
        BigFloat::normalized(m, e, prec)
    }

    pub fn checked_div(&self, other: &BigFloat) -> Result<BigFloat> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return Ok(BigFloat::zero(prec));
        }
        let shift = (prec as i64 + 2 + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let q = (&self.mant << shift as usize) / &other.mant;
        Ok(BigFloat::normalized(q, self.exp - shift - other.exp, prec))
    }

    pub fn recip(&self) -> Result<BigFloat> {
        BigFloat::from_i64(1, self.prec).checked_div(self)
    }

    pub fn sqrt(&self) -> Result<BigFloat> {
        if self.is_negative() {
            return Err(Error::Domain("square root of a negative number".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let prec = self.prec as i64;
        let mut s = (2 * prec + 4 - self.mant.bits() as i64).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let r = (&self.mant << s as usize).sqrt();
        Ok(BigFloat::normalized(r, (self.exp - s) / 2, self.prec))
    }

    pub fn powi(&self, e: i64) -> Result<BigFloat> {
        if e < 0 {
            return self.recip()?.powi(-e);
        }
        let mut acc = BigFloat::from_i64(1, self.prec);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn mul_i64(&self, n: i64) -> BigFloat {
        BigFloat::normalized(&self.mant * n, self.exp, self.prec)
    }

    pub fn div_i64(&self, n: i64) -> BigFloat {
        self.checked_div(&BigFloat::from_i64(n, self.prec))
            .expect("nonzero divisor")
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> BigFloat {
        BigFloat {
            mant: self.mant.clone(),
            exp: if self.is_zero() { 0 } else { self.exp + k },
            prec: self.prec,
        }
    }

    /// Natural logarithm.
    pub fn ln(&self) -> Result<BigFloat> {
        if !self.is_positive() {
            return Err(Error::Domain("logarithm of a non-positive number".into()));
        }
        let prec = self.prec;
        let reductions = ((prec as f64).sqrt() / 2.0).ceil() as u32 + 2;
        let wp = prec + reductions + 40;
        let nb = self.mant.bits() as i64;
        // m ∈ [1/2, 1): x = m · 2^e
        let mut e = self.exp + nb;
        let mut m = BigFloat::normalized(self.mant.clone(), -nb, wp);
        // move m into [1/√2, √2)
        let half_sqrt2 = BigFloat::from_i64(2, wp).sqrt()?.mul_pow2(-1);
        if m.cmp_value(&half_sqrt2) == Ordering::Less {
            m = m.mul_pow2(1);
            e -= 1;
        }
        for _ in 0..reductions {
            m = m.sqrt()?;
        }
        let one = BigFloat::from_i64(1, wp);
        let s = (&m - &one).checked_div(&(&m + &one))?;
        let s2 = &s * &s;
        let mut term = s.clone();
        let mut sum = s.clone();
        let mut k = 1i64;
        loop {
            term = &term * &s2;
            if term.is_zero() || term.top() < -(wp as i64) - 4 {
                break;
            }
            k += 2;
            sum = &sum + &term.div_i64(k);
        }
        let ln_m = sum.mul_pow2(1 + reductions as i64);
        let result = &ln_m + &ln2(wp).mul_i64(e);
        Ok(result.with_precision(prec))
    }

    pub fn ln2(prec: u32) -> BigFloat {
        ln2(prec)
    }

    pub fn pi(prec: u32) -> BigFloat {
        pi(prec)
    }

    /// Compares numeric values exactly, ignoring precision.
    pub fn cmp_value(&self, other: &BigFloat) -> Ordering {
        let (sa, sb) = (self.mant.sign(), other.mant.sign());
        if sa != sb {
            return sign_rank(sa).cmp(&sign_rank(sb));
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        let (ta, tb) = (self.top(), other.top());
        let mag = if ta != tb {
            ta.cmp(&tb)
        } else {
            let e = self.exp.min(other.exp);
            let a = self.mant.abs() << (self.exp - e) as usize;
            let b = other.mant.abs() << (other.exp - e) as usize;
            a.cmp(&b)
        };
        if sa == Sign::Minus {
            mag.reverse()
        } else {
            mag
        }
    }

    pub fn max(self, other: BigFloat) -> BigFloat {
        if self.cmp_value(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    /// Largest `E` with `10^E <= |x|`; `None` for zero.
    pub fn decimal_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let mag = self.to_rat().abs();
        let mut e = ((self.top() - 1) as f64 / LOG2_10).floor() as i64;
        let ten = Rat::from(10);
        while ten.pow(e).expect("ten is nonzero") > mag {
            e -= 1;
        }
        while ten.pow(e + 1).expect("ten is nonzero") <= mag {
            e += 1;
        }
        Some(e)
    }

    /// Fixed-point rendering with `decimals` digits after the point.
    pub fn to_fixed(&self, decimals: usize) -> String {
        self.to_rat().to_decimal_string(decimals)
    }

    /// Rendering with `sig` significant digits, rounded half away from zero.
    /// Plain notation for moderate magnitudes, otherwise `d.ddde±X`.
    pub fn to_sig_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        let Some(mut e) = self.decimal_exponent() else {
            return format!("{:.*}", sig - 1, 0.0);
        };
        let rat = self.to_rat();
        // rounding can carry into a new leading digit, e.g. 9.9999 -> 10.000
        let scaled = loop {
            let shift = sig as i64 - 1 - e;
            let s = (&rat * &Rat::from(10).pow(shift).expect("ten is nonzero")).abs();
            let rounded = (s.clone() + Rat::new(1, 2).expect("nonzero")).floor();
            if rounded.to_string().len() > sig {
                e += 1;
                continue;
            }
            break rounded;
        };
        let digits = scaled.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        if (-5..sig as i64).contains(&e) {
            let shift = sig as i64 - 1 - e;
            let s = Rat::from_int(scaled)
                .checked_div(&Rat::from(10).pow(shift).expect("ten is nonzero"))
                .expect("nonzero");
            format!("{sign}{}", s.to_decimal_string(shift.max(0) as usize))
        } else {
            let (head, tail) = digits.split_at(1);
            if tail.is_empty() {
                format!("{sign}{head}e{e}")
            } else {
                format!("{sign}{head}.{tail}e{e}")
            }
        }
    }
}

fn sign_rank(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Fixed-point `2^bits · atanh(1/q)`-style sums share this helper:
/// `Σ sign^i · 2^bits / ((2i+1) q^(2i+1))`.
fn arctan_like(q: u64, bits: u64, alternating: bool) -> BigInt {
    let q2 = BigInt::from(q * q);
    let mut power = (BigInt::one() << bits as usize) / q;
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * i + 1);
        if alternating && i % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        power /= &q2;
        i += 1;
    }
    sum
}

struct ConstCache {
    bits: u64,
    value: BigInt,
}

static LN2_CACHE: Mutex<Option<ConstCache>> = Mutex::new(None);
static PI_CACHE: Mutex<Option<ConstCache>> = Mutex::new(None);

fn cached(
    cache: &Mutex<Option<ConstCache>>,
    prec: u32,
    compute: impl Fn(u64) -> BigInt,
) -> BigFloat {
    let want = prec as u64 + 32;
    let mut guard = cache.lock().expect("constant cache poisoned");
    let have = guard.as_ref().is_some_and(|c| c.bits >= want);
    if !have {
        let bits = want.max(guard.as_ref().map_or(0, |c| c.bits * 2));
        *guard = Some(ConstCache {
            bits,
            value: compute(bits),
        });
    }
    let c = guard.as_ref().expect("filled above");
    BigFloat::normalized(c.value.clone(), -(c.bits as i64), prec)
}

fn ln2(prec: u32) -> BigFloat {
    // ln 2 = 2·atanh(1/3)
    cached(&LN2_CACHE, prec, |bits| arctan_like(3, bits, false) << 1)
}

fn pi(prec: u32) -> BigFloat {
    // Machin: π = 16·atan(1/5) − 4·atan(1/239)
    cached(&PI_CACHE, prec, |bits| {
        (arctan_like(5, bits, true) << 4) - (arctan_like(239, bits, true) << 2)
    })
}

macro_rules! float_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                let f: fn(&BigFloat, &BigFloat) -> BigFloat = $body;
                f(self, rhs)
            }
        }
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                $tr::$method(&self, &rhs)
            }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                $tr::$method(&self, rhs)
            }
        }
        impl $tr<BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                $tr::$method(self, &rhs)
            }
        }
    };
}

float_binop!(Add, add, |a, b| a.add_impl(b, false));
float_binop!(Sub, sub, |a, b| a.add_impl(b, true));
float_binop!(Mul, mul, |a, b| BigFloat::normalized(
    &a.mant * &b.mant,
    a.exp + b.exp,
    a.prec.max(b.prec)
));
float_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("BigFloat division by zero"));

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            mant: -self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -(self.clone())
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &BigFloat) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &BigFloat) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(20);
        f.write_str(&self.to_sig_string(sig))
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({})", self.to_sig_string(30))
    }
}

/// Complex number over [`BigFloat`].
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigFloat) -> Self {
        let prec = re.precision();
        BigComplex {
            re,
            im: BigFloat::zero(prec),
        }
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> BigFloat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt().expect("norm is non-negative")
    }

    /// `ln |z|`, computed as `½ ln(re² + im²)`.
    pub fn ln_abs(&self) -> Result<BigFloat> {
        Ok(self.norm_sqr().ln()?.mul_pow2(-1))
    }

    pub fn add_real(&self, r: &BigFloat) -> Self {
        BigComplex::new(&self.re + r, self.im.clone())
    }

    pub fn scale(&self, r: &BigFloat) -> Self {
        BigComplex::new(&self.re * r, &self.im * r)
    }

    pub fn checked_div(&self, other: &BigComplex) -> Result<BigComplex> {
        let d = other.norm_sqr();
        let num = self * &other.conj();
        Ok(BigComplex::new(
            num.re.checked_div(&d)?,
            num.im.checked_div(&d)?,
        ))
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 300;

    fn f(x: f64) -> BigFloat {
        BigFloat::from_rat(&Rat::from_int(BigInt::from((x * 1024.0) as i64)), P).div_i64(1024)
    }

    fn close(a: &BigFloat, b: &BigFloat, bits: i64) -> bool {
        let d = (a - b).abs();
        d.is_zero() || d.log2_floor().unwrap() < -bits
    }

    // 100 digits of ln 2 and π
    const LN2: &str = "0.6931471805599453094172321214581765680755001343602552541206800094933936219696947156058633269964186875";
    const PI: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

    #[test]
    fn constants() {
        assert!(close(
            &BigFloat::ln2(P),
            &BigFloat::parse(LN2, P).unwrap(),
            320
        ));
        assert!(close(
            &BigFloat::pi(P),
            &BigFloat::parse(PI, P).unwrap(),
            320
        ));
        // a lower-precision request after a higher one reuses the cache
        assert!(close(
            &BigFloat::ln2(64),
            &BigFloat::parse(LN2, 64).unwrap(),
            60
        ));
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = BigFloat::parse("1234.5678", P).unwrap();
        let b = BigFloat::parse("-0.000321", P).unwrap();
        let back = (&(&a * &b) / &b) - &a;
        assert!(close(&back, &BigFloat::zero(P), 280));
        assert!(close(&(&(&a + &b) - &b), &a, 280));
        assert_eq!(
            a.checked_div(&BigFloat::zero(P)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn sqrt_and_ln() {
        let two = BigFloat::from_i64(2, P);
        let r = two.sqrt().unwrap();
        assert!(close(&(&r * &r), &two, 290));
        assert!(close(&two.ln().unwrap(), &BigFloat::ln2(P), 290));
        let x = BigFloat::parse("0.3", P).unwrap();
        let y = BigFloat::parse("7.25", P).unwrap();
        let lhs = (&x * &y).ln().unwrap();
        let rhs = x.ln().unwrap() + y.ln().unwrap();
        assert!(close(&lhs, &rhs, 285));
        assert!(BigFloat::from_i64(-1, P).ln().is_err());
        assert!(BigFloat::from_i64(-1, P).sqrt().is_err());
        assert!((f(10.0).ln().unwrap().to_f64() - 10f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn ln_of_tiny_and_huge() {
        let tiny = BigFloat::from_i64(1, P).mul_pow2(-5000);
        let expect = BigFloat::ln2(P).mul_i64(-5000);
        assert!(close(&tiny.ln().unwrap(), &expect, 280));
    }

    #[test]
    fn comparisons() {
        let a = BigFloat::parse("-2.5", P).unwrap();
        let b = BigFloat::parse("0.125", P).unwrap();
        assert!(a < b);
        assert!(BigFloat::from_i64(3, P) > BigFloat::from_i64(2, 10));
        assert_eq!(BigFloat::from_i64(4, P), BigFloat::from_i64(4, 20));
    }

    #[test]
    fn sig_rendering() {
        let x = BigFloat::parse("3.514333682504972", P).unwrap();
        assert_eq!(x.to_sig_string(6), "3.51433");
        let y = BigFloat::parse("12.408378346664", P).unwrap();
        assert_eq!(y.to_sig_string(6), "12.4084");
        let z = BigFloat::parse("9.9999996", P).unwrap();
        assert_eq!(z.to_sig_string(6), "10.0000");
        let w = BigFloat::parse("-0.000012345678", P).unwrap();
        assert_eq!(w.to_sig_string(3), "-0.0000123");
        let big = BigFloat::from_i64(10, P).powi(40).unwrap();
        assert_eq!(big.to_sig_string(3), "1.00e40");
        let small = BigFloat::from_i64(7, P).mul_pow2(-400);
        assert!(small.to_sig_string(4).contains("e-"));
        assert_eq!(format!("{:.4}", BigFloat::from_i64(-6, P)), "-6.000");
    }

    #[test]
    fn complex_ops() {
        let z = BigComplex::new(f(3.0), f(4.0));
        assert!(close(&z.abs(), &f(5.0), 290));
        let w = BigComplex::new(f(1.0), f(-2.0));
        let q = (&z * &w).checked_div(&w).unwrap();
        assert!(close(&q.re, &z.re, 280) && close(&q.im, &z.im, 280));
        assert!(close(&z.ln_abs().unwrap(), &f(5.0).ln().unwrap(), 280));
    }
}
