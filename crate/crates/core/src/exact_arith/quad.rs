use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;

use super::rat::Rat;
use crate::error::{Error, Result};

/// An element `u + v·√D` of ℚ(√D), with `D` a positive integer.
///
/// When `D` is a perfect square `s²` the value is collapsed to the rational
/// `u + v·s` on construction and `v` stays zero from then on, so the same
/// code path serves both the genuine quadratic case and the degenerate one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadRat {
    u: Rat,
    v: Rat,
    d: u64,
    root: Option<u64>,
}

/// Integer square root of `d` when `d` is a perfect square.
pub fn exact_sqrt(d: u64) -> Option<u64> {
    let s = d.sqrt();
    (s * s == d).then_some(s)
}

impl QuadRat {
    pub fn new(u: Rat, v: Rat, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("radicand must be positive".into()));
        }
        let root = exact_sqrt(d);
        Ok(Self::with_root(u, v, d, root))
    }

    fn with_root(u: Rat, v: Rat, d: u64, root: Option<u64>) -> Self {
        match root {
            Some(s) => QuadRat {
                u: u + v * Rat::from(s as i64),
                v: Rat::zero(),
                d,
                root,
            },
            None => QuadRat { u, v, d, root },
        }
    }

    /// The rational `r` viewed inside ℚ(√d).
    pub fn rational(r: Rat, d: u64) -> Result<Self> {
        Self::new(r, Rat::zero(), d)
    }

    /// The element `√d` itself.
    pub fn sqrt_d(d: u64) -> Result<Self> {
        Self::new(Rat::zero(), Rat::one(), d)
    }

    pub fn u(&self) -> &Rat {
        &self.u
    }

    pub fn v(&self) -> &Rat {
        &self.v
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    /// True when `D` is a perfect square and the value is stored as a rational.
    pub fn is_degenerate(&self) -> bool {
        self.root.is_some()
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn check(&self, other: &QuadRat) -> Result<()> {
        if self.d != other.d {
            return Err(Error::RadicandMismatch {
                left: self.d,
                right: other.d,
            });
        }
        Ok(())
    }

    fn same(&self, u: Rat, v: Rat) -> QuadRat {
        QuadRat::with_root(u, v, self.d, self.root)
    }

    pub fn checked_add(&self, other: &QuadRat) -> Result<QuadRat> {
        self.check(other)?;
        Ok(self.same(&self.u + &other.u, &self.v + &other.v))
    }

    pub fn checked_sub(&self, other: &QuadRat) -> Result<QuadRat> {
        self.check(other)?;
        Ok(self.same(&self.u - &other.u, &self.v - &other.v))
    }

    pub fn checked_mul(&self, other: &QuadRat) -> Result<QuadRat> {
        self.check(other)?;
        let dd = Rat::from(self.d as i64);
        let u = &self.u * &other.u + &dd * &self.v * &other.v;
        let v = &self.u * &other.v + &self.v * &other.u;
        Ok(self.same(u, v))
    }

    pub fn checked_div(&self, other: &QuadRat) -> Result<QuadRat> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> QuadRat {
        self.same(&self.u * r, &self.v * r)
    }

    pub fn add_rat(&self, r: &Rat) -> QuadRat {
        self.same(&self.u + r, self.v.clone())
    }

    pub fn conj(&self) -> QuadRat {
        self.same(self.u.clone(), -&self.v)
    }

    /// `u² − D·v²`.
    pub fn norm(&self) -> Rat {
        &self.u * &self.u - Rat::from(self.d as i64) * &self.v * &self.v
    }

    pub fn inv(&self) -> Result<QuadRat> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(self.same(c.u.checked_div(&n)?, c.v.checked_div(&n)?))
    }

    /// Integer power by repeated squaring; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<QuadRat> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = self.same(Rat::one(), Rat::zero());
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

    /// `self · √D`. In the degenerate case this is `self · s`.
    pub fn times_sqrt_d(&self) -> QuadRat {
        match self.root {
            Some(s) => self.scale(&Rat::from(s as i64)),
            None => self.same(Rat::from(self.d as i64) * &self.v, self.u.clone()),
        }
    }

    /// The rational value, if the √D component is zero.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.u)
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        let sign = if self.v.is_negative() { '-' } else { '+' };
        let v = self.v.abs();
        match (self.u.is_zero(), self.v.is_negative()) {
            (true, false) => write!(f, "{v}·√{}", self.d),
            (true, true) => write!(f, "-{v}·√{}", self.d),
            _ => write!(f, "{} {sign} {v}·√{}", self.u, self.d),
        }
    }
}

impl fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadRat({self})")
    }
}

// Operator forms panic on mismatched radicands; internal code only combines
// values built from one `D`.
impl Add for &QuadRat {
    type Output = QuadRat;
    fn add(self, rhs: &QuadRat) -> QuadRat {
        self.checked_add(rhs).expect("mismatched radicands")
    }
}

impl Sub for &QuadRat {
    type Output = QuadRat;
    fn sub(self, rhs: &QuadRat) -> QuadRat {
        self.checked_sub(rhs).expect("mismatched radicands")
    }
}

impl Mul for &QuadRat {
    type Output = QuadRat;
    fn mul(self, rhs: &QuadRat) -> QuadRat {
        self.checked_mul(rhs).expect("mismatched radicands")
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        self.same(-&self.u, -&self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn t_roots(k: u64) -> (QuadRat, QuadRat) {
        let d = 2 * k + 1;
        (
            QuadRat::new(r(1, 2), r(-1, 2), d).unwrap(),
            QuadRat::new(r(1, 2), r(1, 2), d).unwrap(),
        )
    }

    #[test]
    fn display() {
        let show = |u, v| QuadRat::new(u, v, 13).unwrap().to_string();
        assert_eq!(show(r(7, 6), r(-1, 6)), "7/6 - 1/6·√13");
        assert_eq!(show(r(1, 2), r(3, 1)), "1/2 + 3·√13");
        assert_eq!(show(Rat::zero(), r(-2, 1)), "-2·√13");
        assert_eq!(show(r(5, 1), Rat::zero()), "5");
    }

    #[test]
    fn vieta_product_for_k6() {
        let (t1, t2) = t_roots(6);
        let p = &t1 * &t2;
        assert_eq!(p.as_rational(), Some(&r(-3, 1)));
        // t² − t − k/2 = 0
        let lhs = &(&t1 * &t1) - &t1;
        assert_eq!(lhs.as_rational(), Some(&r(3, 1)));
    }

    #[test]
    fn norm_of_t1_for_k6() {
        let (t1, _) = t_roots(6);
        assert_eq!(t1.norm(), r(1, 4) - r(13, 4));
        assert_eq!(t1.norm(), r(-3, 1));
    }

    #[test]
    fn mismatched_radicands() {
        let x = QuadRat::sqrt_d(13).unwrap();
        let y = QuadRat::sqrt_d(15).unwrap();
        assert_eq!(
            x.checked_mul(&y),
            Err(Error::RadicandMismatch {
                left: 13,
                right: 15
            })
        );
        assert!(x.checked_add(&y).is_err());
    }

    #[test]
    fn square_radicand_collapses() {
        let x = QuadRat::new(r(5, 4), r(-1, 4), 9).unwrap();
        assert!(x.is_degenerate());
        assert_eq!(x.as_rational(), Some(&r(1, 2)));
        let s = QuadRat::sqrt_d(25).unwrap();
        assert_eq!(s.as_rational(), Some(&r(5, 1)));
        assert_eq!(x.times_sqrt_d().as_rational(), Some(&r(3, 2)));
    }

    #[test]
    fn inverse_and_powers() {
        let x = QuadRat::new(r(7, 6), r(-1, 6), 13).unwrap();
        let one = &x * &x.inv().unwrap();
        assert_eq!(one.as_rational(), Some(&Rat::one()));
        let x3 = x.pow(3).unwrap();
        assert_eq!(x3, &(&x * &x) * &x);
        assert_eq!(&x.pow(-2).unwrap() * &x.pow(2).unwrap(), x.pow(0).unwrap());
        assert_eq!(
            QuadRat::rational(Rat::zero(), 13).unwrap().inv(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn times_sqrt_d_swaps_components() {
        let x = QuadRat::new(r(2, 1), r(3, 1), 13).unwrap();
        let y = x.times_sqrt_d();
        assert_eq!(y.u(), &r(39, 1));
        assert_eq!(y.v(), &r(2, 1));
    }
}
