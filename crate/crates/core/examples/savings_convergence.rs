//! (1/n)·ln(d_bn/Δ) creeping towards N1 as n grows.
//!
//! cargo run --release --example savings_convergence [a b]

use irrmeasure::exact_arith::PrimeSieve;
use irrmeasure::forms::Family;
use irrmeasure::omega::{compute_omega, finite_n1_estimate, finite_n2_estimate, n_constants};

fn main() -> irrmeasure::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let f = match args.as_slice() {
        [a, b] => Family::new(*a, *b)?,
        _ => Family::new(1, 7)?,
    };
    let (n1, n2) = n_constants(f, &compute_omega(f).omega, 20)?;
    let sieve = PrimeSieve::new(f.b * 100_001 + 1);
    println!("(a, b) = ({}, {}): N1 = {n1:.8}, N2 = {n2:.8}", f.a, f.b);
    for n in [31, 101, 1_001, 10_001, 100_001] {
        let e1 = finite_n1_estimate(f, n, &sieve)?;
        let e2 = finite_n2_estimate(f, n, &sieve)?;
        println!("n = {n:>6}: {e1:.6}  {e2:.6}");
    }
    Ok(())
}
