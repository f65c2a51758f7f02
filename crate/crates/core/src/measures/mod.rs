//! Bound assembly, table reproduction, finite-`n` verification of the linear
//! forms, and the `(a, b)` search.

mod bounds;
mod search;
mod table;
mod verify;

pub use bounds::{assemble_bound, compute_bound, mu2_bound, mu_bound, BoundKind, BoundResult};
pub use search::{family_grid, search_params};
pub use table::{mu2_family, mu_family, published_table, table_rows, TableRow, TABLE_KS};
pub use verify::{
    default_n_list, extended_n_list, predicted_decay, verify_forms, verify_row, within_band,
    VerificationRow,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::PrimeSieve;
    use crate::float::BigFloat;
    use crate::forms::Family;

    fn fam(a: u64, b: u64) -> Family {
        Family::new(a, b).unwrap()
    }

    #[test]
    fn mu_k6() {
        let r = mu_bound(6, fam(1, 7), 40).unwrap();
        assert!(r.applicable() && r.ladder_ok && !r.degenerate);
        assert!((r.bound.unwrap().to_f64() - 3.514_333_682).abs() < 1e-8);
    }

    #[test]
    fn mu2_k8() {
        let r = mu2_bound(8, fam(1, 13), 40).unwrap();
        assert!((r.bound.unwrap().to_f64() - 10.905_645_30).abs() < 1e-7);
    }

    #[test]
    fn degenerate_flag() {
        let r = mu_bound(4, fam(1, 7), 30).unwrap();
        assert!(r.degenerate);
    }

    #[test]
    fn assembly_monotone_in_growth() {
        let p = 200;
        let d = BigFloat::parse("-3.5", p).unwrap();
        let g1 = BigFloat::parse("4", p).unwrap();
        let g2 = BigFloat::parse("4.5", p).unwrap();
        let b1 = assemble_bound(&g1, &d).unwrap().unwrap();
        let b2 = assemble_bound(&g2, &d).unwrap().unwrap();
        assert!(b2 > b1);
        assert!(assemble_bound(&g1, &BigFloat::parse("0.5", p).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn verify_small() {
        let sieve = PrimeSieve::new(10_000);
        let rows = verify_forms(6, fam(1, 7), &[1, 3, 5], 40, &sieve).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert!(row.dual_path_agrees, "n = {}", row.n);
            assert!(!row.ell.is_zero());
            assert!(row.ell_decay.is_finite());
        }
        assert!(rows[2].ell_decay < 0.0);
    }

    #[test]
    fn degenerate_dual_path() {
        let sieve = PrimeSieve::new(10_000);
        let rows = verify_forms(4, fam(1, 7), &[3], 40, &sieve).unwrap();
        assert!(rows[0].dual_path_agrees);
    }

    #[test]
    fn search_grids() {
        let best = search_params(6, 2, 9, BoundKind::Irrationality, 30).unwrap();
        assert_eq!(best[0].family, fam(1, 7));
        assert!(search_params(6, 1, 3, BoundKind::Irrationality, 30)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn scaling_ratios_match_closed_forms() {
        // P = (S/R)·(d/Δ)·(R·U) with S/R = m^{an} for even k = 2m
        let sieve = PrimeSieve::new(10_000);
        let rows = verify_forms(8, fam(1, 7), &[3], 30, &sieve).unwrap();
        let f = &rows[0].forms;
        let ratio = num_bigint::BigInt::from(4u32).pow(3);
        let saving = &f.d_bn / &f.delta;
        assert_eq!(f.p, &ratio * &saving * &f.scaled_u);
        let ratio2 = num_bigint::BigInt::from(4u32).pow(6);
        assert_eq!(f.x, &ratio2 * &f.d_mid * &f.delta1 * &saving * &f.scaled_u);
    }
}
