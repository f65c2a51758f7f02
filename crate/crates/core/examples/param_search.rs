//! Rank every (a, b) on a small grid by the bound it gives for one k.
//!
//! cargo run --release --example param_search [k] [quadratic]

use irrmeasure::measures::{search_params, BoundKind};

fn main() -> irrmeasure::Result<()> {
    let mut args = std::env::args().skip(1);
    let k = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let kind = match args.next().as_deref() {
        Some("quadratic") => BoundKind::NonQuadraticity,
        _ => BoundKind::Irrationality,
    };
    let ranked = search_params(k, 2, 15, kind, 30)?;
    println!("{kind} bounds for k = {k}, a <= 2, b <= 15");
    for (i, r) in ranked.iter().enumerate() {
        let bound = r.bound.as_ref().expect("search keeps applicable cells");
        println!(
            "{:>3}. (a, b) = ({}, {:>2})  {bound:.6}",
            i + 1,
            r.family.a,
            r.family.b
        );
    }
    Ok(())
}
