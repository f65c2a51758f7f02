use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::params::Params;
use crate::exact_arith::Rat;

/// Dense polynomial with rational coefficients, stored as integer numerators
/// over one common positive denominator, ascending degree.
///
/// Kept canonical after every operation: no trailing zero numerators and the
/// content of the numerators coprime to the denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
    denom: BigInt,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly {
            coeffs: Vec::new(),
            denom: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        IntPoly::from_int_coeffs(vec![BigInt::one()])
    }

    /// `x`
    pub fn x() -> Self {
        IntPoly::from_int_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_int_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPoly::from_parts(coeffs, BigInt::one())
    }

    pub fn from_parts(coeffs: Vec<BigInt>, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero polynomial denominator");
        let mut p = IntPoly { coeffs, denom };
        p.canonicalize();
        p
    }

    pub fn from_rats(coeffs: &[Rat]) -> Self {
        let denom = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums = coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        IntPoly::from_parts(nums, denom)
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        if self.denom.is_negative() {
            self.denom = -&self.denom;
            for c in &mut self.coeffs {
                *c = -&*c;
            }
        }
        if self.coeffs.is_empty() {
            self.denom = BigInt::one();
            return;
        }
        let mut g = self.denom.clone();
        for c in &self.coeffs {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.denom /= &g;
            for c in &mut self.coeffs {
                *c /= &g;
            }
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        match self.coeffs.get(i) {
            Some(c) => Rat::new(c.clone(), self.denom.clone()).expect("positive denominator"),
            None => Rat::zero(),
        }
    }

    pub fn coeffs(&self) -> Vec<Rat> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    /// Multiplies by `(x + r)`.
    pub fn mul_linear(&self, r: i64) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c * r;
            out[i + 1] += c;
        }
        IntPoly::from_parts(out, self.denom.clone())
    }

    /// Divides every coefficient by the nonzero integer `m`.
    pub fn div_int(&self, m: &BigInt) -> IntPoly {
        IntPoly::from_parts(self.coeffs.clone(), &self.denom * m)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_parts(out, &self.denom * &other.denom)
    }

    /// Numerator of `p(x)` at an integer point: `p(x) = eval_numerator(x) / denominator()`.
    pub fn eval_numerator(&self, x: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        Rat::new(self.eval_numerator(x), self.denom.clone()).expect("positive denominator")
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_int(c.clone());
        }
        acc.checked_div(&Rat::from_int(self.denom.clone()))
            .expect("positive denominator")
    }

    /// `p(x + s)`, by repeated synthetic division (Taylor shift).
    pub fn shift(&self, s: i64) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * s;
                c[j] += t;
            }
        }
        IntPoly::from_parts(c, self.denom.clone())
    }

    /// `order`-th derivative.
    pub fn derivative(&self, order: usize) -> IntPoly {
        let mut c = self.coeffs.clone();
        for _ in 0..order {
            if c.is_empty() {
                break;
            }
            c = c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, v)| v * i as u64)
                .collect();
        }
        IntPoly::from_parts(c, self.denom.clone())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({:?} / {})", self.coeffs, self.denom)
    }
}

fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// The auxiliary polynomial
/// `A(x) = C(x+(b−2a)n, (b−4a)n) · C(x+(b−a)n, (b−2a)n) · C(x+bn, bn)`,
/// built as the product of its linear factors over the product of factorials.
pub fn build_a(params: &Params) -> IntPoly {
    let (a, b, n) = (params.a(), params.b(), params.n);
    let groups = [
        (2 * a * n + 1, (b - 2 * a) * n, (b - 4 * a) * n),
        (a * n + 1, (b - a) * n, (b - 2 * a) * n),
        (1, b * n, b * n),
    ];
    let mut p = IntPoly::one();
    let mut den = BigInt::one();
    for (lo, hi, len) in groups {
        for r in lo..=hi {
            p = p.mul_linear(r as i64);
        }
        den *= factorial(len);
    }
    p.div_int(&den)
}
