use serde::Serialize;

use crate::error::{Error, Result};

/// The `(a, b)` pair that fixes the shape of the auxiliary polynomial.
/// Requires `a >= 1`, `b` odd and `b > 4a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Family {
    pub a: u64,
    pub b: u64,
}

impl Family {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParams("a must be a positive integer".into()));
        }
        if b % 2 == 0 {
            return Err(Error::InvalidParams(format!("b = {b} must be odd")));
        }
        if b <= 4 * a {
            return Err(Error::InvalidParams(format!(
                "need b > 4a, got a = {a}, b = {b}"
            )));
        }
        Ok(Family { a, b })
    }

    /// `b − 2a`
    pub fn mid(&self) -> u64 {
        self.b - 2 * self.a
    }

    /// `b − 4a`
    pub fn low(&self) -> u64 {
        self.b - 4 * self.a
    }
}

/// Full parameter set `(k, a, b, n)` for one linear-form construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub k: u64,
    pub family: Family,
    pub n: u64,
}

impl Params {
    pub fn new(k: u64, a: u64, b: u64, n: u64) -> Result<Self> {
        Self::with_family(k, Family::new(a, b)?, n)
    }

    pub fn with_family(k: u64, family: Family, n: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("k must be a positive integer".into()));
        }
        if n == 0 || n % 2 == 0 {
            return Err(Error::InvalidParams(format!(
                "n = {n} must be an odd positive integer"
            )));
        }
        Ok(Params { k, family, n })
    }

    pub fn a(&self) -> u64 {
        self.family.a
    }

    pub fn b(&self) -> u64 {
        self.family.b
    }

    /// `D = 2k + 1`
    pub fn radicand(&self) -> u64 {
        2 * self.k + 1
    }

    /// `(bn + 1) / 2`, the power of `z` stripped from every series.
    pub fn half_exponent(&self) -> i64 {
        ((self.b() * self.n + 1) / 2) as i64
    }

    /// `deg A = 3(b − 2a)n`
    pub fn degree(&self) -> usize {
        (3 * self.family.mid() * self.n) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Family::new(1, 7).is_ok());
        assert!(Family::new(1, 3).is_err());
        assert!(Family::new(1, 4).is_err());
        assert!(Family::new(1, 5).is_ok());
        assert!(Family::new(0, 7).is_err());
        assert!(Family::new(2, 8).is_err());
        assert!(Params::new(6, 1, 7, 2).is_err());
        assert!(Params::new(0, 1, 7, 1).is_err());
        let p = Params::new(6, 1, 7, 3).unwrap();
        assert_eq!(p.half_exponent(), 11);
        assert_eq!(p.degree(), 45);
        assert_eq!(p.radicand(), 13);
    }
}
