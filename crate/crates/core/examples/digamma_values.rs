//! ψ at rational points, next to the classical closed forms.

use irrmeasure::asymptotics::digamma;
use irrmeasure::exact_arith::Rat;
use irrmeasure::float::BigFloat;

fn main() -> irrmeasure::Result<()> {
    let digits = 50;
    let prec = irrmeasure::float::bits_for_digits(digits + 10);
    let gamma = BigFloat::parse(
        "0.57721566490153286060651209008240243104215933593992359880576723",
        prec,
    )?;
    let ln2 = BigFloat::ln2(prec);
    let ln3 = BigFloat::from_i64(3, prec).ln()?;
    let pi = BigFloat::pi(prec);
    let sqrt3 = BigFloat::from_i64(3, prec).sqrt()?;

    // ψ(1) = −γ, ψ(1/2) = −γ − 2 ln 2, ψ(1/3) = −γ − π/(2√3) − (3/2) ln 3
    let cases = [
        ("1", -gamma.clone()),
        ("1/2", -gamma.clone() - ln2.mul_i64(2)),
        (
            "1/3",
            -gamma.clone() - (&pi / &(sqrt3.mul_i64(2))) - ln3.mul_i64(3).div_i64(2),
        ),
    ];
    for (x, closed) in cases {
        let v = digamma(&x.parse::<Rat>()?, digits)?;
        println!("ψ({x:>3}) = {v:.40}");
        println!("closed   = {closed:.40}");
    }
    for x in ["1/6", "3/7", "5/2", "1000"] {
        println!("ψ({x:>4}) = {:.40}", digamma(&x.parse::<Rat>()?, digits)?);
    }
    Ok(())
}
