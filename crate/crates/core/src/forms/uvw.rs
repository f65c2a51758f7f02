use super::coeff_transform::{transform_numerators, transformed_sum};
use super::params::Params;
use super::poly::{build_a, IntPoly};
use crate::error::{Error, Result};
use crate::exact_arith::{QuadRat, Rat};

/// `x_k = (k + 1 − √(2k+1)) / k`, the evaluation point in ℚ(√(2k+1)).
pub fn x_point(k: u64) -> Result<QuadRat> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be a positive integer".into()));
    }
    let kk = k as i64;
    QuadRat::new(Rat::new(kk + 1, kk)?, Rat::new(-1, kk)?, 2 * k + 1)
}

/// `t = z / (z − 1)`.
pub fn t_of(z: &QuadRat) -> Result<QuadRat> {
    let one = QuadRat::rational(Rat::one(), z.radicand())?;
    z.checked_div(&z.checked_sub(&one)?)
}

/// Exact `U(z)`, `V(z)`, `W(z)` at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct UVWValues {
    pub u: QuadRat,
    pub v: QuadRat,
    pub w: QuadRat,
    pub params: Params,
    pub x: QuadRat,
}

impl UVWValues {
    /// `U` and `W` rational while `V` is a pure multiple of `√D`.
    /// Vacuous when `D` is a perfect square.
    pub fn has_rational_pattern(&self) -> bool {
        self.x.is_degenerate()
            || (self.u.v().is_zero() && self.w.v().is_zero() && self.v.u().is_zero())
    }

    /// `√D · V`, rational at `x_k`.
    pub fn sqrt_d_v(&self) -> QuadRat {
        self.v.times_sqrt_d()
    }
}

/// The three polynomials feeding the closed forms, with the power of `z`
/// multiplying each transformed sum.
struct ClosedForm {
    poly: IntPoly,
    z_power: i64,
}

fn closed_forms(params: &Params) -> [ClosedForm; 3] {
    let a_poly = build_a(params);
    let h = params.half_exponent();
    let an = (params.a() * params.n) as i64;
    // The vanishing of A' on −(an+1)..−(b−a)n and of A'' on −(2an+1)..−(b−2a)n
    // lets the V and W series start at an+1 and 2an+1, i.e. at 1 after shifting.
    let v_poly = a_poly.shift(-an).derivative(1);
    let w_poly = a_poly.shift(-2 * an).derivative(2);
    [
        ClosedForm {
            poly: a_poly,
            z_power: -h,
        },
        ClosedForm {
            poly: v_poly,
            z_power: -h + an,
        },
        ClosedForm {
            poly: w_poly,
            z_power: -h + 2 * an,
        },
    ]
}

/// Evaluates `U`, `V`, `W` at `z` through the finite closed forms
/// `z^e · Σ_j c_j (z/(z−1))^{j+1}`.
pub fn eval_uvw(params: &Params, z: &QuadRat) -> Result<UVWValues> {
    if z.is_zero() {
        return Err(Error::Domain("z must be nonzero".into()));
    }
    let t = t_of(z).map_err(|_| Error::Domain("z must differ from 1".into()))?;
    let [u, v, w] = closed_forms(params).map(|cf| {
        let nums = transform_numerators(&cf.poly);
        let sum = transformed_sum(&nums, cf.poly.denominator(), &t);
        &sum * &z.pow(cf.z_power).expect("z is nonzero")
    });
    Ok(UVWValues {
        u,
        v,
        w,
        params: *params,
        x: z.clone(),
    })
}

/// `U`, `V`, `W` at `x_k` for `k = params.k`.
pub fn eval_uvw_at_x(params: &Params) -> Result<UVWValues> {
    eval_uvw(params, &x_point(params.k)?)
}
