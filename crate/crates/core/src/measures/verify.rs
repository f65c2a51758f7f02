use num_bigint::BigInt;
use rayon::prelude::*;

use crate::asymptotics::{alpha_with_bits, growth_constants, k_constants};
use crate::error::{Error, Result};
use crate::exact_arith::{PrimeSieve, Rat};
use crate::float::{bits_for_digits, BigFloat};
use crate::forms::{eval_uvw_at_x, scaled_integer_forms, Family, IntegerForms, Params};
use crate::omega::{compute_omega, delta_products, n_constants};

/// The default `n` values: odd `n <= 15`.
pub fn default_n_list() -> Vec<u64> {
    (1..=15).step_by(2).collect()
}

/// Odd `n <= 51`.
pub fn extended_n_list() -> Vec<u64> {
    (1..=51).step_by(2).collect()
}

#[derive(Clone, Debug)]
pub struct VerificationRow {
    pub n: u64,
    pub forms: IntegerForms,
    /// `ℓ_n = P·α_k + Q`
    pub ell: BigFloat,
    /// `m_n = X·α_k² + Z`
    pub quad: BigFloat,
    /// `(1/n)·ln|ℓ_n|`
    pub ell_decay: f64,
    /// `(1/n)·ln|m_n|`
    pub quad_decay: f64,
    /// `ℓ_n` recomputed as `S·(d_{bn}/Δ)·(U·α_k − √D·V)` agrees to `digits − 10`.
    pub dual_path_agrees: bool,
}

/// `coef·α^power + constant`, with the working precision raised until the
/// result carries at least `target` correct bits after cancellation.
fn eval_form(
    k: u64,
    coef: &BigInt,
    power: i64,
    constant: &BigInt,
    target: u32,
) -> Result<BigFloat> {
    let mut prec = coef.bits() as u32 + target + 64;
    for _ in 0..12 {
        let alpha = alpha_with_bits(k, prec)?;
        let val = BigFloat::from_bigint(coef, prec) * alpha.powi(power)?
            + BigFloat::from_bigint(constant, prec);
        if val.is_zero() {
            prec *= 2;
            continue;
        }
        // the leading term has about coef.bits() + 2 bits above the point
        let lost = coef.bits() as i64 + 4 - val.log2_floor().expect("nonzero");
        let kept = prec as i64 - lost.max(0);
        if kept >= target as i64 + 16 {
            return Ok(val.with_precision(target));
        }
        prec = (lost.max(0) as u32) + target + 64;
    }
    Err(Error::Domain(format!(
        "linear form vanished numerically for k = {k}; a zero form is impossible for irrational α"
    )))
}

fn decay(v: &BigFloat, n: u64) -> Result<f64> {
    Ok(v.abs().ln()?.to_f64() / n as f64)
}

fn relative_agree(a: &BigFloat, b: &BigFloat, digits: u32) -> bool {
    let diff = (a - b).abs();
    if diff.is_zero() {
        return true;
    }
    let allowed = -((digits.saturating_sub(10)) as f64 * std::f64::consts::LOG2_10) as i64;
    diff.log2_floor().expect("nonzero") - b.log2_floor().unwrap_or(0) < allowed
}

/// One row: exact integrality, then the two forms at high precision.
pub fn verify_row(params: &Params, digits: u32, sieve: &PrimeSieve) -> Result<VerificationRow> {
    let uvw = eval_uvw_at_x(params)?;
    let (delta, delta1) = delta_products(params, sieve)?;
    let forms = scaled_integer_forms(params, &uvw, &delta, &delta1)?;
    let target = bits_for_digits(digits);
    let k = params.k;
    let ell = eval_form(k, &forms.p, 1, &forms.q, target)?;
    let quad = eval_form(k, &forms.x, 2, &forms.z, target)?;

    // second path: rational U, √D·V and the scale factor kept apart
    let u = uvw
        .u
        .as_rational()
        .expect("checked by scaled_integer_forms");
    let sdv = uvw.sqrt_d_v();
    let sdv = sdv.as_rational().expect("checked by scaled_integer_forms");
    let saving = Rat::from_int(forms.d_bn.clone()).checked_div(&Rat::from_int(delta))?;
    let lin = &forms.scaling.s * &saving;
    let lost = forms.p.bits() as i64 + 4 - ell.log2_floor().unwrap_or(0);
    let prec = target + 64 + lost.max(0) as u32;
    let alpha = alpha_with_bits(k, prec)?;
    let inner = BigFloat::from_rat(u, prec) * alpha - BigFloat::from_rat(sdv, prec);
    let ell2 = inner * BigFloat::from_rat(&lin, prec);
    let dual_path_agrees = relative_agree(&ell2, &ell, digits);

    Ok(VerificationRow {
        n: params.n,
        ell_decay: decay(&ell, params.n)?,
        quad_decay: decay(&quad, params.n)?,
        forms,
        ell,
        quad,
        dual_path_agrees,
    })
}

/// Rows for every `n` in `n_list`, in that order.
pub fn verify_forms(
    k: u64,
    family: Family,
    n_list: &[u64],
    digits: u32,
    sieve: &PrimeSieve,
) -> Result<Vec<VerificationRow>> {
    let params: Vec<Params> = n_list
        .iter()
        .map(|&n| Params::with_family(k, family, n))
        .collect::<Result<_>>()?;
    params
        .par_iter()
        .map(|p| verify_row(p, digits, sieve))
        .collect()
}

/// `(M2 + K1 + N1, M2 + K2 + N2)`, the limits of the two decay columns.
pub fn predicted_decay(k: u64, family: Family, digits: u32) -> Result<(BigFloat, BigFloat)> {
    let omega = compute_omega(family).omega;
    let (n1, n2) = n_constants(family, &omega, digits)?;
    let g = growth_constants(k, family, digits)?;
    let (k1, k2) = k_constants(k, family, digits)?;
    Ok((&g.m2 + &(&k1 + &n1), &g.m2 + &(&k2 + &n2)))
}

/// `|observed − predicted| <= rel·|predicted|`.
pub fn within_band(observed: f64, predicted: f64, rel: f64) -> bool {
    (observed - predicted).abs() <= rel * predicted.abs()
}
