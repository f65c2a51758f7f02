//! Arithmetic in ℚ(√(2k+1)) at the evaluation point x_k, and the exact
//! values U, V, W there.

use irrmeasure::forms::{eval_uvw_at_x, t_of, x_point, Params};

fn main() -> irrmeasure::Result<()> {
    let k = 6;
    let x = x_point(k)?;
    let inv = x.inv()?;
    println!("x_{k}        = {x}");
    println!("x + 1/x    = {}", &x + &inv);
    println!("x/(x − 1)  = {}", t_of(&x)?);
    println!("norm(x)    = {}", x.norm());

    let p = Params::new(k, 1, 7, 3)?;
    let uvw = eval_uvw_at_x(&p)?;
    println!("n = 3, (a, b) = (1, 7):");
    println!("  U    = {}", uvw.u);
    println!("  √D·V = {}", uvw.sqrt_d_v());
    println!("  W    = {}", uvw.w);
    println!("  rational pattern: {}", uvw.has_rational_pattern());
    Ok(())
}
