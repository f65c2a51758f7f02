use num_bigint::BigInt;

use super::params::Params;
use super::uvw::UVWValues;
use crate::error::{Error, Result};
use crate::exact_arith::{d_upto, Rat};

/// The rational normalisers `R_{k,n}`, `S_{k,n}`, `T_{k,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaling {
    pub r: Rat,
    pub s: Rat,
    pub t: Rat,
}

/// For `k = 2m`: `m^{−e}`; for `k = 2m − 1`: `2^{(3(b−2a)n+1)/2} · k^{−e}`,
/// with `e = (bn+1)/2`, `((b−2a)n+1)/2`, `((b−4a)n+1)/2` for `R`, `S`, `T`.
pub fn scaling(params: &Params) -> Scaling {
    let (k, n) = (params.k, params.n);
    let fam = params.family;
    let exps = [
        (fam.b * n + 1) / 2,
        (fam.mid() * n + 1) / 2,
        (fam.low() * n + 1) / 2,
    ];
    let [r, s, t] = exps.map(|e| {
        let e = e as i64;
        if k % 2 == 0 {
            Rat::from((k / 2) as i64).pow(-e).expect("m >= 1")
        } else {
            let two = Rat::from(2)
                .pow(((3 * fam.mid() * n + 1) / 2) as i64)
                .expect("nonzero");
            two * Rat::from(k as i64).pow(-e).expect("k >= 1")
        }
    });
    Scaling { r, s, t }
}

/// Integer coefficients of the linear forms `P·α + Q`, `X·α + Y` and
/// `X·α² + Z`, together with the three scaled quantities whose integrality
/// they rest on and the normalisers used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerForms {
    pub n: u64,
    /// `R·U(x_k)`
    pub scaled_u: BigInt,
    /// `S·(d_{bn}/Δ)·√D·V(x_k)`
    pub scaled_v: BigInt,
    /// `T·d_{(b−2a)n}·Δ₁·(d_{bn}/Δ)·W(x_k)`
    pub scaled_w: BigInt,
    pub p: BigInt,
    pub q: BigInt,
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    pub delta: BigInt,
    pub delta1: BigInt,
    pub d_bn: BigInt,
    pub d_mid: BigInt,
    pub scaling: Scaling,
}

fn integral(value: Rat, quantity: &'static str, n: u64) -> Result<BigInt> {
    value.to_integer().ok_or(Error::NonInteger { quantity, n })
}

/// Applies `R`, `S`, `T`, `d_{bn}/Δ`, `d_{(b−2a)n}` and `Δ₁` to the exact
/// values at `x_k`. Every result must come out integral; anything else is
/// reported as [`Error::NonInteger`] naming the quantity.
pub fn scaled_integer_forms(
    params: &Params,
    uvw: &UVWValues,
    delta: &BigInt,
    delta1: &BigInt,
) -> Result<IntegerForms> {
    if uvw.params != *params {
        return Err(Error::Domain(
            "U/V/W values belong to other parameters".into(),
        ));
    }
    let n = params.n;
    let not_rational = |what: &str| Error::Domain(format!("{what} at x_k is not rational"));
    let u = uvw
        .u
        .as_rational()
        .ok_or_else(|| not_rational("U"))?
        .clone();
    let sqrt_d_v = uvw
        .sqrt_d_v()
        .as_rational()
        .ok_or_else(|| not_rational("√D·V"))?
        .clone();
    let w = uvw
        .w
        .as_rational()
        .ok_or_else(|| not_rational("W"))?
        .clone();

    let d_bn = d_upto(params.b() * n);
    let d_mid = d_upto(params.family.mid() * n);
    let sc = scaling(params);
    let saving = Rat::from_int(d_bn.clone()).checked_div(&Rat::from_int(delta.clone()))?;
    let lin = &sc.s * &saving;
    let quad = &sc.t * &Rat::from_int(&d_mid * delta1) * &saving;
    let dd = Rat::from(params.radicand() as i64);

    Ok(IntegerForms {
        n,
        scaled_u: integral(&sc.r * &u, "R·U", n)?,
        scaled_v: integral(&lin * &sqrt_d_v, "S·(d/Δ)·√D·V", n)?,
        scaled_w: integral(&quad * &w, "T·d'·Δ₁·(d/Δ)·W", n)?,
        p: integral(&lin * &u, "P", n)?,
        q: integral(-(&lin * &sqrt_d_v), "Q", n)?,
        x: integral(&quad * &u, "X", n)?,
        y: integral(-(&quad * &sqrt_d_v), "Y", n)?,
        z: integral(-(&quad * &dd * &w), "Z", n)?,
        delta: delta.clone(),
        delta1: delta1.clone(),
        d_bn,
        d_mid,
        scaling: sc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_even_and_odd() {
        let p = Params::new(6, 1, 7, 1).unwrap();
        let s = scaling(&p);
        assert_eq!(s.r, Rat::new(1, 81).unwrap()); // 3^{-4}
        assert_eq!(s.s, Rat::new(1, 27).unwrap()); // 3^{-3}
        assert_eq!(s.t, Rat::new(1, 9).unwrap()); // 3^{-2}
        let p = Params::new(7, 1, 7, 1).unwrap();
        let s = scaling(&p);
        assert_eq!(s.r, Rat::new(256, 2401).unwrap()); // 2^8 · 7^{-4}
        assert_eq!(s.t, Rat::new(256, 49).unwrap());
    }

    #[test]
    fn ratios_are_integral() {
        for (k, n) in [(6u64, 1u64), (6, 3), (7, 3), (8, 5)] {
            let p = Params::new(k, 1, 7, n).unwrap();
            let s = scaling(&p);
            let m = if k % 2 == 0 { k / 2 } else { k } as i64;
            assert_eq!(&s.s / &s.r, Rat::from(m).pow(n as i64).unwrap());
            assert_eq!(&s.t / &s.r, Rat::from(m).pow(2 * n as i64).unwrap());
        }
    }
}
