//! Exact integer coefficients of the linear and quadratic forms and how fast
//! the forms shrink, against the predicted rates.
//!
//! cargo run --release --example verify_forms [k a b]

use irrmeasure::exact_arith::PrimeSieve;
use irrmeasure::forms::Family;
use irrmeasure::measures::{default_n_list, predicted_decay, verify_forms};

fn main() -> irrmeasure::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let (k, a, b) = match args.as_slice() {
        [k, a, b] => (*k, *a, *b),
        _ => (6, 1, 7),
    };
    let family = Family::new(a, b)?;
    let sieve = PrimeSieve::default();
    let (lin, quad) = predicted_decay(k, family, 30)?;
    println!("k = {k}, (a, b) = ({a}, {b})");
    println!("limit of (1/n)ln|ℓ_n| = {lin:.6}, of (1/n)ln|m_n| = {quad:.6}");
    println!(
        "{:>3}  {:>8}  {:>12}  {:>12}  paths",
        "n", "P digits", "ℓ decay", "m decay"
    );
    for row in verify_forms(k, family, &default_n_list(), 30, &sieve)? {
        println!(
            "{:>3}  {:>8}  {:>12.6}  {:>12.6}  {}",
            row.n,
            row.forms.p.to_string().trim_start_matches('-').len(),
            row.ell_decay,
            row.quad_decay,
            if row.dual_path_agrees {
                "agree"
            } else {
                "DISAGREE"
            }
        );
    }
    Ok(())
}
