use rayon::prelude::*;

use super::bounds::{compute_bound, BoundKind, BoundResult};
use crate::error::Result;
use crate::forms::Family;

/// All valid `(a, b)` with `a <= a_max`, `b <= b_max`.
pub fn family_grid(a_max: u64, b_max: u64) -> Vec<Family> {
    (1..=a_max)
        .flat_map(|a| (4 * a + 1..=b_max).filter_map(move |b| Family::new(a, b).ok()))
        .collect()
}

/// Applicable bounds over the grid, best first; ties go to the smaller `b`,
/// then the smaller `a`. Cells whose saddle equations have no admissible
/// root are skipped like inapplicable ones.
pub fn search_params(
    k: u64,
    a_max: u64,
    b_max: u64,
    kind: BoundKind,
    digits: u32,
) -> Result<Vec<BoundResult>> {
    let cells: Vec<Option<BoundResult>> = family_grid(a_max, b_max)
        .par_iter()
        .map(|&f| match compute_bound(k, f, kind, digits) {
            Ok(r) => Ok(r.applicable().then_some(r)),
            Err(crate::Error::NotApplicable(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<BoundResult> = cells.into_iter().flatten().collect();
    out.sort_by(|x, y| {
        let bx = x.bound.as_ref().expect("applicable");
        let by = y.bound.as_ref().expect("applicable");
        bx.cmp_value(by)
            .then(x.family.b.cmp(&y.family.b))
            .then(x.family.a.cmp(&y.family.a))
    });
    Ok(out)
}
