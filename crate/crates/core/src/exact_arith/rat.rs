use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Returns the integer value when the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rat) -> Result<Rat> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &other.0))
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn pow(&self, e: i64) -> Result<Rat> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        Ok(Rat(Pow::pow(&self.0, e as u64)))
    }

    /// Greatest integer not exceeding `self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Fractional part `self - floor(self)`, always in `[0, 1)`.
    pub fn frac(&self) -> Rat {
        let r = self.numer().mod_floor(self.denom());
        Rat(BigRational::new_raw(r, self.denom().clone()))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Fixed-point decimal rendering with exactly `digits` places after the
    /// point, rounded half away from zero.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = self.numer().abs() * &scale;
        let (q, r) = scaled.div_rem(self.denom());
        let q = if r * 2u32 >= *self.denom() {
            q + 1u32
        } else {
            q
        };
        let mut s = q.to_string();
        if digits > 0 {
            if s.len() <= digits {
                s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
            }
            s.insert(s.len() - digits, '.');
        }
        if self.is_negative() && s.chars().any(|c| c != '0' && c != '.') {
            s.insert(0, '-');
        }
        s
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_int(n)
    }
}

impl fmt::Display for Rat {
    /// `num/den`, or just `num` for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `n`, `n/d`, and plain decimals such as `-12.375`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            return Rat::new(n, d);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int_part: BigInt = match int {
                "" | "-" | "+" => BigInt::zero(),
                _ => int.parse().map_err(|_| bad())?,
            };
            let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let mag = int_part.abs() * &scale + frac_part;
            let num = if negative { -mag } else { mag };
            return Rat::new(num, scale);
        }
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rat::from_int(n))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($tr::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on a zero divisor, like integer division; use [`Rat::checked_div`]
/// where the divisor is not known to be nonzero.
impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self.checked_div(rhs).expect("Rat division by zero")
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn floor_and_frac_of_negative_half_integer() {
        let x = r(-7, 2);
        assert_eq!(x.floor(), BigInt::from(-4));
        assert_eq!(x.frac(), r(1, 2));
    }

    #[test]
    fn sums_reduce() {
        assert_eq!(r(1, 3) + r(1, 6), r(1, 2));
        let s = r(1, 3) + r(1, 6);
        assert_eq!(s.numer(), &BigInt::from(1));
        assert_eq!(s.denom(), &BigInt::from(2));
    }

    #[test]
    fn frac_of_22_over_7() {
        assert_eq!(r(22, 7).frac(), r(1, 7));
    }

    #[test]
    fn zero_denominator_and_division() {
        assert_eq!(Rat::new(1, 0), Err(Error::DivisionByZero));
        assert_eq!(
            r(1, 2).checked_div(&Rat::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Rat::zero().recip(), Err(Error::DivisionByZero));
        assert_eq!(Rat::zero().pow(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_sign() {
        let x = r(3, -6);
        assert_eq!(x.numer(), &BigInt::from(-1));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(r(2, 3).pow(3).unwrap(), r(8, 27));
        assert_eq!(r(2, 3).pow(-2).unwrap(), r(9, 4));
        assert_eq!(r(5, 7).pow(0).unwrap(), Rat::one());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("2/7".parse::<Rat>().unwrap(), r(2, 7));
        assert_eq!("-4/6".parse::<Rat>().unwrap(), r(-2, 3));
        assert_eq!("17".parse::<Rat>().unwrap(), r(17, 1));
        assert_eq!("-12.375".parse::<Rat>().unwrap(), r(-99, 8));
        assert_eq!("-0.5".parse::<Rat>().unwrap(), r(-1, 2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
        assert!("1.".parse::<Rat>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(r(1, 3).to_decimal_string(5), "0.33333");
        assert_eq!(r(2, 3).to_decimal_string(3), "0.667");
        assert_eq!(r(-99, 8).to_decimal_string(3), "-12.375");
        assert_eq!(r(-1, 1000).to_decimal_string(2), "0.00");
        assert_eq!(r(5, 1).to_decimal_string(0), "5");
    }

    #[test]
    fn display_is_fraction() {
        assert_eq!(r(-6, 4).to_string(), "-3/2");
        assert_eq!(r(8, 4).to_string(), "2");
    }
}
