//! The set Ω for a few (a, b) and the constants N1, N2 it produces.
//!
//! cargo run --example omega_set [a b]

use irrmeasure::forms::Family;
use irrmeasure::omega::{compute_omega, n_constants};

fn main() -> irrmeasure::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let families = match args.as_slice() {
        [a, b] => vec![Family::new(*a, *b)?],
        _ => vec![Family::new(1, 7)?, Family::new(1, 13)?, Family::new(2, 23)?],
    };
    for f in families {
        let report = compute_omega(f);
        let (n1, n2) = n_constants(f, &report.omega, 30)?;
        println!("(a, b) = ({}, {})", f.a, f.b);
        println!("  Ω       = {}", report.omega);
        println!("  measure = {}", report.omega.measure());
        println!("  N1 = {n1:.10}   N2 = {n2:.10}");
    }
    Ok(())
}
