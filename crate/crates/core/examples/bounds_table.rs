//! Upper bounds on μ(α_k) and μ₂(α_k) for the tabulated k.
//!
//! cargo run --release --example bounds_table [digits]

use irrmeasure::measures::published_table;

fn main() -> irrmeasure::Result<()> {
    let digits = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(60);
    println!("{:>3}  {:>10}  {:>10}  (a,b) for μ₂", "k", "μ", "μ₂");
    for row in published_table(digits)? {
        let mu = row
            .mu
            .bound
            .as_ref()
            .map(|b| format!("{b:.6}"))
            .unwrap_or("-".into());
        let (mu2, fam) = match &row.mu2 {
            Some(r) => (
                r.bound
                    .as_ref()
                    .map(|b| format!("{b:.6}"))
                    .unwrap_or("n/a".into()),
                format!("({},{})", r.family.a, r.family.b),
            ),
            None => ("-".into(), String::new()),
        };
        let note = if row.degenerate() {
            "  2k+1 is a square"
        } else {
            ""
        };
        println!("{:>3}  {mu:>10}  {mu2:>10}  {fam}{note}", row.k);
    }
    Ok(())
}
