use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::floor::is_member_ratio;
use super::interval::{Interval, IntervalSet};
use crate::exact_arith::Rat;
use crate::forms::Family;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaReport {
    pub family: Family,
    pub omega: IntervalSet,
    /// Largest denominator in the breakpoint lattice.
    pub denominator_bound: u64,
}

fn member(family: Family, y: &Rat) -> bool {
    let num = y.numer().to_u64().expect("0 <= y < 1");
    let den = y.denom().to_u64().expect("small denominator");
    is_member_ratio(family, num, den)
}

/// All fractions `j/m` in `[0, 1)` with `1 <= m <= bound`, ascending.
pub fn breakpoints(bound: u64) -> Vec<Rat> {
    let set: BTreeSet<Rat> = (1..=bound as i64)
        .flat_map(|m| (0..m).map(move |j| Rat::new(j, m).expect("m >= 1")))
        .collect();
    set.into_iter().collect()
}

pub fn compute_omega(family: Family) -> OmegaReport {
    compute_omega_with_bound(family, family.b)
}

/// Evaluates membership at every breakpoint `j/m` (`m <= bound`) and at the
/// midpoint of every gap between consecutive breakpoints, then merges runs
/// of members into intervals with the matching closure flags.
pub fn compute_omega_with_bound(family: Family, bound: u64) -> OmegaReport {
    let pts = breakpoints(bound.max(1));
    // pieces alternate: point 0, gap 0, point 1, gap 1, ...
    let pieces: Vec<(Rat, Rat, bool)> = pts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            let next = pts.get(i + 1).cloned().unwrap_or_else(Rat::one);
            [(p.clone(), p.clone(), true), (p.clone(), next, false)]
        })
        .collect();
    let flags: Vec<bool> = pieces
        .par_iter()
        .map(|(lo, hi, is_point)| {
            let y = if *is_point {
                lo.clone()
            } else {
                (lo + hi) / Rat::from(2)
            };
            member(family, &y)
        })
        .collect();

    let mut parts = Vec::new();
    let mut run: Option<(Rat, bool)> = None;
    for (i, ((lo, hi, is_point), inside)) in pieces.iter().zip(&flags).enumerate() {
        if *inside && run.is_none() {
            run = Some((lo.clone(), *is_point));
        }
        let ends = *inside && !flags.get(i + 1).copied().unwrap_or(false);
        if ends {
            let (start, lo_closed) = run.take().expect("run open");
            parts.push(
                Interval::new(start, hi.clone(), lo_closed, *is_point).expect("pieces are ordered"),
            );
        }
    }
    OmegaReport {
        family,
        omega: IntervalSet::new(parts).expect("maximal runs never touch"),
        denominator_bound: bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::floor::is_member;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn omega_1_7() {
        let rep = compute_omega(Family::new(1, 7).unwrap());
        let om = &rep.omega;
        assert_eq!(
            om.measure(),
            r(3, 7) - r(1, 6) + r(5, 7) - r(1, 2) + r(6, 7) - r(3, 4)
        );
        assert!(om.intervals()[0].lo >= r(1, 7));
        for i in 0..5040 {
            let y = r(i, 5040);
            assert_eq!(om.contains(&y), is_member(rep.family, &y), "y = {y}");
        }
    }

    #[test]
    fn refinement_is_stable() {
        for (a, b) in [(1, 7), (1, 13), (2, 11)] {
            let f = Family::new(a, b).unwrap();
            assert_eq!(
                compute_omega_with_bound(f, b).omega,
                compute_omega_with_bound(f, 2 * b).omega
            );
        }
    }

    #[test]
    fn nothing_below_one_over_b() {
        for (a, b) in [(1, 5), (1, 7), (1, 9), (2, 9), (1, 13), (2, 23), (3, 15)] {
            let f = Family::new(a, b).unwrap();
            let om = compute_omega(f).omega;
            if let Some(first) = om.intervals().first() {
                assert!(first.lo >= r(1, b as i64), "a={a} b={b}: {om}");
            }
        }
    }

    #[test]
    fn breakpoint_lattice() {
        let p = breakpoints(4);
        let s: Vec<String> = p.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["0", "1/4", "1/3", "1/2", "2/3", "3/4"]);
    }
}
