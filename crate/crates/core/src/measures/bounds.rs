use std::fmt;

use serde::Serialize;

use crate::asymptotics::{growth_constants, k_constants};
use crate::error::{Error, Result};
use crate::exact_arith::exact_sqrt;
use crate::float::BigFloat;
use crate::forms::Family;
use crate::omega::{compute_omega, n_constants};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `μ(α_k)`
    Irrationality,
    /// `μ₂(α_k)`
    NonQuadraticity,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Irrationality => "irrationality",
            BoundKind::NonQuadraticity => "non-quadraticity",
        })
    }
}

/// The assembled constants and the resulting bound for one `(k, a, b)`.
#[derive(Clone, Debug)]
pub struct BoundResult {
    pub k: u64,
    pub family: Family,
    pub kind: BoundKind,
    pub m1: BigFloat,
    pub m2: BigFloat,
    /// `K1` or `K2`
    pub k_const: BigFloat,
    /// `N1` or `N2`
    pub n_const: BigFloat,
    /// `M2 + K + N`; the bound exists only when this is negative.
    pub decay: BigFloat,
    pub bound: Option<BigFloat>,
    /// `2k+1` is a perfect square, so `α_k` is a rational multiple of a log.
    pub degenerate: bool,
    pub digits: u32,
    /// The bound recomputed at twice the digits agrees to `digits − 5`.
    pub ladder_ok: bool,
}

impl BoundResult {
    pub fn applicable(&self) -> bool {
        self.bound.is_some()
    }
}

/// Everything but the ladder check.
fn assemble(k: u64, family: Family, kind: BoundKind, digits: u32) -> Result<BoundResult> {
    let omega = compute_omega(family).omega;
    let (n1, n2) = n_constants(family, &omega, digits)?;
    let g = growth_constants(k, family, digits)?;
    let (k1, k2) = k_constants(k, family, digits)?;
    let (kc, nc) = match kind {
        BoundKind::Irrationality => (k1, n1),
        BoundKind::NonQuadraticity => (k2, n2),
    };
    let shift = &kc + &nc;
    let decay = &g.m2 + &shift;
    let bound = assemble_bound(&(&g.m1 + &shift), &decay)?;
    if kind == BoundKind::Irrationality {
        if let Some(b) = &bound {
            if b.to_f64() <= 2.0 {
                return Err(Error::Domain(format!(
                    "irrationality bound {b} <= 2 for k = {k}, a = {}, b = {}",
                    family.a, family.b
                )));
            }
        }
    }
    Ok(BoundResult {
        k,
        family,
        kind,
        m1: g.m1,
        m2: g.m2,
        k_const: kc,
        n_const: nc,
        decay,
        bound,
        degenerate: exact_sqrt(2 * k + 1).is_some(),
        digits,
        ladder_ok: false,
    })
}

/// The bound of the given kind, with a recomputation at twice the digits.
/// An inapplicable parameter set is a normal outcome (`bound == None`).
pub fn compute_bound(k: u64, family: Family, kind: BoundKind, digits: u32) -> Result<BoundResult> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be a positive integer".into()));
    }
    let mut res = assemble(k, family, kind, digits)?;
    let check = assemble(k, family, kind, 2 * digits)?;
    let pairs = [
        (Some(&res.m1), Some(&check.m1)),
        (Some(&res.m2), Some(&check.m2)),
        (Some(&res.n_const), Some(&check.n_const)),
        (res.bound.as_ref(), check.bound.as_ref()),
    ];
    res.ladder_ok = pairs.iter().all(|(a, b)| match (a, b) {
        (Some(a), Some(b)) => crate::asymptotics::Laddered {
            value: (*a).clone(),
            check: (*b).clone(),
            digits,
        }
        .agrees(),
        (None, None) => true,
        _ => false,
    });
    Ok(res)
}

pub fn mu_bound(k: u64, family: Family, digits: u32) -> Result<BoundResult> {
    compute_bound(k, family, BoundKind::Irrationality, digits)
}

pub fn mu2_bound(k: u64, family: Family, digits: u32) -> Result<BoundResult> {
    compute_bound(k, family, BoundKind::NonQuadraticity, digits)
}

/// `1 − (M1+K+N)/(M2+K+N)` from already combined parts, for callers that
/// want to study the assembly in isolation.
pub fn assemble_bound(growth: &BigFloat, decay: &BigFloat) -> Result<Option<BigFloat>> {
    if !decay.is_negative() {
        return Ok(None);
    }
    Ok(Some(
        BigFloat::from_i64(1, decay.precision()) - growth.checked_div(decay)?,
    ))
}
