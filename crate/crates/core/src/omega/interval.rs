use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Rat;

/// A subinterval of `[0, 1)` with rational endpoints. `lo == hi` with both
/// ends closed is a single point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        let valid = if lo == hi {
            lo_closed && hi_closed
        } else {
            lo < hi
        };
        if !valid || lo.is_negative() || hi > 1 || (hi == 1 && hi_closed) {
            return Err(Error::Domain(format!(
                "bad interval {}",
                Interval::render(&lo, &hi, lo_closed, hi_closed)
            )));
        }
        Ok(Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, y: &Rat) -> bool {
        let above = if self.lo_closed {
            *y >= self.lo
        } else {
            *y > self.lo
        };
        let below = if self.hi_closed {
            *y <= self.hi
        } else {
            *y < self.hi
        };
        above && below
    }

    pub fn length(&self) -> Rat {
        &self.hi - &self.lo
    }

    fn render(lo: &Rat, hi: &Rat, lo_closed: bool, hi_closed: bool) -> String {
        if lo == hi {
            return format!("{{{lo}}}");
        }
        let l = if lo_closed { '[' } else { '(' };
        let r = if hi_closed { ']' } else { ')' };
        format!("{l}{lo}, {hi}{r}")
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Interval::render(
            &self.lo,
            &self.hi,
            self.lo_closed,
            self.hi_closed,
        ))
    }
}

/// Sorted, pairwise disjoint, non-touching union of intervals in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntervalSet {
    parts: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    /// Checks ordering and that neighbours neither overlap nor could be merged.
    pub fn new(parts: Vec<Interval>) -> Result<Self> {
        for w in parts.windows(2) {
            let (p, q) = (&w[0], &w[1]);
            let ok = p.hi < q.lo || (p.hi == q.lo && !p.hi_closed && !q.lo_closed);
            if !ok {
                return Err(Error::Domain(format!(
                    "intervals {p} and {q} overlap or touch"
                )));
            }
        }
        Ok(IntervalSet { parts })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, y: &Rat) -> bool {
        self.parts.iter().any(|p| p.contains(y))
    }

    pub fn measure(&self) -> Rat {
        self.parts
            .iter()
            .fold(Rat::zero(), |acc, p| acc + p.length())
    }

    /// Parts strictly below `c` and parts from `c` upward, cutting any
    /// interval that straddles `c` (the cut point stays on the upper side
    /// when it belonged to the interval).
    pub fn split_at(&self, c: &Rat) -> (IntervalSet, IntervalSet) {
        let (mut below, mut above) = (Vec::new(), Vec::new());
        for p in &self.parts {
            if p.hi < *c || (p.hi == *c && !p.hi_closed) {
                below.push(p.clone());
            } else if p.lo >= *c {
                above.push(p.clone());
            } else {
                below.push(Interval {
                    lo: p.lo.clone(),
                    hi: c.clone(),
                    lo_closed: p.lo_closed,
                    hi_closed: false,
                });
                above.push(Interval {
                    lo: c.clone(),
                    hi: p.hi.clone(),
                    lo_closed: true,
                    hi_closed: p.hi_closed,
                });
            }
        }
        (IntervalSet { parts: below }, IntervalSet { parts: above })
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(" ∪ "))
    }
}
