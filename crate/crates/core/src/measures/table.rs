use rayon::prelude::*;

use super::bounds::{mu2_bound, mu_bound, BoundResult};
use crate::error::Result;
use crate::forms::Family;

/// The `k` values of the published table.
pub const TABLE_KS: [u64; 9] = [3, 5, 6, 7, 8, 9, 10, 11, 12];

/// `(a, b)` used for `μ` at every `k`.
pub fn mu_family() -> Family {
    Family { a: 1, b: 7 }
}

/// `(a, b)` used for `μ₂`, where a value is published.
pub fn mu2_family(k: u64) -> Option<Family> {
    match k {
        6 => Some(Family { a: 2, b: 23 }),
        8 | 10 | 12 => Some(Family { a: 1, b: 13 }),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub k: u64,
    pub mu: BoundResult,
    pub mu2: Option<BoundResult>,
}

impl TableRow {
    pub fn degenerate(&self) -> bool {
        self.mu.degenerate
    }
}

/// One row per `k`, in the given order.
pub fn table_rows(ks: &[u64], digits: u32) -> Result<Vec<TableRow>> {
    ks.par_iter()
        .map(|&k| {
            Ok(TableRow {
                k,
                mu: mu_bound(k, mu_family(), digits)?,
                mu2: mu2_family(k).map(|f| mu2_bound(k, f, digits)).transpose()?,
            })
        })
        .collect()
}

pub fn published_table(digits: u32) -> Result<Vec<TableRow>> {
    table_rows(&TABLE_KS, digits)
}
