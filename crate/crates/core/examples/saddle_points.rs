//! Saddle points of the two cubics and the growth constants M1, M2.
//!
//! cargo run --release --example saddle_points [k]

use irrmeasure::asymptotics::{growth_constants, k_constants};
use irrmeasure::forms::Family;

fn main() -> irrmeasure::Result<()> {
    let k = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    for (a, b) in [(1, 7), (1, 13), (2, 23)] {
        let f = Family::new(a, b)?;
        let g = growth_constants(k, f, 40)?;
        let (k1, k2) = k_constants(k, f, 40)?;
        println!("k = {k}, (a, b) = ({a}, {b}), x = {:.12}", g.x);
        println!("  z0 = {:.15}          M1 = {:.15}", g.z0, g.m1);
        println!(
            "  z1 = {:.15} {:+.15}i   M2 = {:.15}",
            g.z1.re, g.z1.im, g.m2
        );
        println!("  K1 = {k1:.10}   K2 = {k2:.10}");
    }
    Ok(())
}
