use num_bigint::BigInt;
use num_traits::One;

use super::floor::is_member_ratio;
use super::interval::IntervalSet;
use crate::asymptotics::digamma;
use crate::error::Result;
use crate::exact_arith::{PrimeSieve, Rat};
use crate::float::{bits_for_digits, BigFloat};
use crate::forms::{Family, Params};

/// Primes behind `Δ` (`√(bn) < p <= bn`) and `Δ₁` (`(b−2a)n < p <= bn`)
/// whose `{n/p}` satisfies the floor inequality for every `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SavingPrimes {
    pub delta: Vec<u64>,
    pub delta1: Vec<u64>,
}

impl SavingPrimes {
    pub fn delta_product(&self) -> BigInt {
        product(&self.delta)
    }

    pub fn delta1_product(&self) -> BigInt {
        product(&self.delta1)
    }
}

fn product(ps: &[u64]) -> BigInt {
    ps.iter().fold(BigInt::one(), |acc, &p| acc * p)
}

/// Membership is decided pointwise from the floor expression at `n mod p / p`.
pub fn saving_primes(family: Family, n: u64, sieve: &PrimeSieve) -> Result<SavingPrimes> {
    let bn = family.b * n;
    let mid_n = family.mid() * n;
    let primes = sieve.primes_upto(bn)?;
    let delta: Vec<u64> = primes
        .into_iter()
        .filter(|&p| p * p > bn && is_member_ratio(family, n % p, p))
        .collect();
    let delta1 = delta.iter().copied().filter(|&p| p > mid_n).collect();
    Ok(SavingPrimes { delta, delta1 })
}

/// `(Δ, Δ₁)` for the given parameters.
pub fn delta_products(params: &Params, sieve: &PrimeSieve) -> Result<(BigInt, BigInt)> {
    let s = saving_primes(params.family, params.n, sieve)?;
    Ok((s.delta_product(), s.delta1_product()))
}

/// `N1 = b − Σ (ψ(v) − ψ(u))` over the components `(u, v)` of `Ω`, and
/// `N2 = N1 + (b−2a) + Σ (1/u − 1/v)` over the components of
/// `Ω ∩ (0, 1/(b−2a))`.
pub fn n_constants(
    family: Family,
    omega: &IntervalSet,
    digits: u32,
) -> Result<(BigFloat, BigFloat)> {
    let prec = bits_for_digits(digits);
    let wp = digits + 10;
    let mut n1 = BigFloat::from_i64(family.b as i64, prec + 32);
    for part in omega.intervals().iter().filter(|p| !p.is_point()) {
        n1 = n1 - (digamma(&part.hi, wp)? - digamma(&part.lo, wp)?);
    }
    let cut = Rat::new(1, family.mid() as i64)?;
    let (small, _) = omega.split_at(&cut);
    let mut large = Rat::from(family.mid() as i64);
    for part in small.intervals().iter().filter(|p| !p.is_point()) {
        large += &(part.lo.recip()? - part.hi.recip()?);
    }
    let n2 = &n1 + &BigFloat::from_rat(&large, prec + 32);
    Ok((n1.with_precision(prec), n2.with_precision(prec)))
}

/// `(1/n)·ln(d_{bn}/Δ)` in double precision.
pub fn finite_n1_estimate(family: Family, n: u64, sieve: &PrimeSieve) -> Result<f64> {
    let s = saving_primes(family, n, sieve)?;
    let ln_d = sieve.ln_lcm_upto(family.b * n)?;
    let ln_delta: f64 = s.delta.iter().map(|&p| (p as f64).ln()).sum();
    Ok((ln_d - ln_delta) / n as f64)
}

/// `(1/n)·ln(d_{bn}·d_{(b−2a)n}·Δ₁/Δ)` in double precision.
pub fn finite_n2_estimate(family: Family, n: u64, sieve: &PrimeSieve) -> Result<f64> {
    let s = saving_primes(family, n, sieve)?;
    let ln_d = sieve.ln_lcm_upto(family.b * n)? + sieve.ln_lcm_upto(family.mid() * n)?;
    let ln = |ps: &[u64]| ps.iter().map(|&p| (p as f64).ln()).sum::<f64>();
    Ok((ln_d - ln(&s.delta) + ln(&s.delta1)) / n as f64)
}
