use num_bigint::BigInt;
use num_traits::One;

use super::rat::Rat;
use crate::error::{Error, Result};

/// Default sieve bound; large enough for finite-n checks around n ≈ 10⁵.
pub const DEFAULT_SIEVE_LIMIT: u64 = 2_000_000;

/// Bit-array sieve of Eratosthenes holding primality of `0..=limit`.
#[derive(Clone, Debug)]
pub struct PrimeSieve {
    limit: u64,
    bits: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Self {
        let words = (limit / 64 + 1) as usize;
        let mut bits = vec![!0u64; words];
        let clear = |bits: &mut Vec<u64>, i: u64| bits[(i / 64) as usize] &= !(1u64 << (i % 64));
        clear(&mut bits, 0);
        if limit >= 1 {
            clear(&mut bits, 1);
        }
        let mut p = 2u64;
        while p * p <= limit {
            if bits[(p / 64) as usize] >> (p % 64) & 1 == 1 {
                let mut m = p * p;
                while m <= limit {
                    clear(&mut bits, m);
                    m += p;
                }
            }
            p += 1;
        }
        PrimeSieve { limit, bits }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn ensure(&self, n: u64) -> Result<()> {
        if n > self.limit {
            return Err(Error::SieveCapacity {
                needed: n,
                limit: self.limit,
            });
        }
        Ok(())
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.ensure(n)?;
        Ok(self.bit(n))
    }

    fn bit(&self, n: u64) -> bool {
        self.bits[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    /// Primes in `lo..=hi`, ascending. Caller guarantees `hi <= limit`.
    fn range(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        (lo..=hi).filter(move |&n| self.bit(n))
    }

    /// All primes `p` with `lo < p <= hi`, ascending.
    pub fn primes_between(&self, lo: &Rat, hi: u64) -> Result<Vec<u64>> {
        self.ensure(hi)?;
        let start = if lo.is_negative() {
            0
        } else {
            // smallest integer strictly greater than lo
            let f = lo.floor() + 1u32;
            match u64::try_from(f) {
                Ok(v) => v,
                Err(_) => return Ok(Vec::new()),
            }
        };
        if start > hi {
            return Ok(Vec::new());
        }
        Ok(self.range(start, hi).collect())
    }

    /// All primes `<= hi`.
    pub fn primes_upto(&self, hi: u64) -> Result<Vec<u64>> {
        self.ensure(hi)?;
        Ok(self.range(2, hi).collect())
    }

    /// `lcm(1, …, n)` as the product of the largest prime powers not exceeding `n`.
    pub fn lcm_upto(&self, n: u64) -> Result<BigInt> {
        self.ensure(n)?;
        let mut acc = BigInt::one();
        for p in self.range(2, n) {
            acc *= max_power_at_most(p, n);
        }
        Ok(acc)
    }

    /// `ln lcm(1, …, n)` in double precision (Chebyshev's ψ(n)).
    pub fn ln_lcm_upto(&self, n: u64) -> Result<f64> {
        self.ensure(n)?;
        Ok(self
            .range(2, n)
            .map(|p| (max_power_at_most(p, n) as f64).ln())
            .sum())
    }
}

impl Default for PrimeSieve {
    fn default() -> Self {
        PrimeSieve::new(DEFAULT_SIEVE_LIMIT)
    }
}

fn max_power_at_most(p: u64, n: u64) -> u64 {
    let mut q = p;
    while q <= n / p {
        q *= p;
    }
    q
}

/// `d_n = lcm(1, …, n)`; `d_0` is taken as 1.
pub fn d_upto(n: u64) -> BigInt {
    PrimeSieve::new(n.max(2))
        .lcm_upto(n)
        .expect("sieve sized to n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn small_lcms() {
        assert_eq!(d_upto(1), BigInt::from(1));
        assert_eq!(d_upto(6), BigInt::from(60));
        assert_eq!(d_upto(10), BigInt::from(2520));
    }

    #[test]
    fn lcm_matches_fold() {
        let sieve = PrimeSieve::new(200);
        let mut fold = BigInt::one();
        for m in 1..=150u64 {
            fold = fold.lcm(&BigInt::from(m));
            assert_eq!(sieve.lcm_upto(m).unwrap(), fold);
        }
    }

    #[test]
    fn primes_between_examples() {
        let sieve = PrimeSieve::new(100);
        let sqrt7_floor = Rat::new(2645751, 1000000).unwrap();
        assert_eq!(
            sieve.primes_between(&sqrt7_floor, 7).unwrap(),
            vec![3, 5, 7]
        );
        assert_eq!(
            sieve.primes_between(&Rat::from(10), 10).unwrap(),
            Vec::<u64>::new()
        );
        let oracle: Vec<u64> = (3..=20).filter(|&n| trial_division(n)).collect();
        assert_eq!(sieve.primes_between(&Rat::from(2), 20).unwrap(), oracle);
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let sieve = PrimeSieve::new(5000);
        for n in 0..=5000 {
            assert_eq!(sieve.is_prime(n).unwrap(), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn capacity_errors() {
        let sieve = PrimeSieve::new(50);
        assert_eq!(
            sieve.primes_between(&Rat::zero(), 51),
            Err(Error::SieveCapacity {
                needed: 51,
                limit: 50
            })
        );
        assert!(sieve.lcm_upto(60).is_err());
        assert!(sieve.is_prime(51).is_err());
    }

    #[test]
    fn ln_lcm_close_to_exact() {
        let sieve = PrimeSieve::new(1000);
        let exact = sieve.lcm_upto(500).unwrap();
        let bits = exact.bits() as f64;
        let ln = sieve.ln_lcm_upto(500).unwrap();
        assert!((ln / std::f64::consts::LN_2 - bits).abs() < 1.0);
    }
}
