//! (p,q,r)-triples: nontrivial `x, y, z` with `xyz = 1`, `x` a `p`-element,
//! `y` a `q`-element and `z` an `r`-element, for distinct primes.
//!
//! Elements of prime-power order are scanned, not only elements of prime
//! order: restricting to prime order changes the notion and can miss the
//! only witnesses.

mod alt;
mod brute;
mod gates;
mod gow;
mod report;
mod sylow_product;

pub use alt::{alt_triple_construct, AltConstruction};
pub use brute::{pair_histogram, triple_count_bruteforce};
pub use gates::{
    chief_factor_orders, conjecture_2pq, main3_witness, pqr_triple_exists, pqr_triple_exists_with,
    psolvable_gate, solvability_gate, Conjecture2pqRow, OrderMode,
};
pub use gow::gow_coverage_check;
pub use report::{GateKind, GateVerdict, Method, TripleReport};
pub use sylow_product::{sylow_product_test, sylow_product_all, SylowProductResult};

use num_bigint::BigUint;

use crate::chartab::character_table;
use crate::error::{Error, Result};
use crate::permcore::Group;

/// Exact number of `(a,b,c)` in `C_i x C_j x C_k` with `abc = 1`, by the
/// character sum when the table is available and by enumeration otherwise.
pub fn triple_count(g: &Group, i: usize, j: usize, k: usize) -> Result<(BigUint, Method)> {
    match character_table(g) {
        Ok(t) => Ok((t.triple_count(i, j, k), Method::CharacterFormula)),
        Err(Error::OverCap { .. }) => Ok((triple_count_bruteforce(g, i, j, k)?, Method::BruteForce)),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::named::{affine, alternating, cyclic, direct_product, symmetric};
    use crate::permcore::matrix_group_to_perm;

    fn sl2(p: i64) -> Group {
        matrix_group_to_perm(&[vec![vec![1, 1], vec![0, 1]], vec![vec![1, 0], vec![1, 1]]], p as u32, 2).unwrap()
    }

    #[test]
    fn formula_matches_enumeration_on_a5_and_s4() {
        for g in [alternating(5), symmetric(4), affine(7, 6)] {
            let t = character_table(&g).unwrap();
            let r = t.len();
            for i in 0..r {
                for j in 0..r {
                    let hist = pair_histogram(&g, i, j).unwrap();
                    for (k, &h) in hist.iter().enumerate() {
                        assert_eq!(t.triple_count(i, j, k), BigUint::from(h));
                    }
                }
            }
            assert_eq!(triple_count_bruteforce(&g, 1, 1, 0).unwrap(), t.triple_count(1, 1, 0));
        }
    }

    #[test]
    fn trivial_group_counts_one() {
        let g = Group::trivial(3);
        assert_eq!(triple_count_bruteforce(&g, 0, 0, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(triple_count(&g, 0, 0, 0).unwrap().0, BigUint::from(1u32));
    }

    #[test]
    fn gates_on_small_groups() {
        let s4 = solvability_gate(&symmetric(4)).unwrap();
        assert!(s4.verdict && s4.witness.is_none() && s4.cross_check);
        let a5 = solvability_gate(&alternating(5)).unwrap();
        assert!(!a5.verdict && a5.cross_check);
        let w = a5.witness.unwrap();
        assert_eq!(w.primes, [2, 3, 5]);
        assert!(w.witness_is_valid());
        let m3 = main3_witness(&alternating(5)).unwrap().unwrap();
        assert_eq!(m3.primes, [2, 3, 5]);
        assert!(main3_witness(&symmetric(4)).unwrap().is_none());

        let ps = psolvable_gate(&alternating(5), 5).unwrap();
        assert!(!ps.verdict && ps.cross_check);
        assert!(ps.witness.unwrap().witness_is_valid());
        assert!(matches!(psolvable_gate(&alternating(5), 2), Err(Error::InvalidPrimes(_))));
        let c30 = solvability_gate(&cyclic(30)).unwrap();
        assert!(c30.verdict && c30.cross_check);
    }

    #[test]
    fn rejects_repeated_primes() {
        assert!(matches!(pqr_triple_exists(&alternating(5), 2, 2, 5), Err(Error::InvalidPrimes(_))));
        assert!(matches!(pqr_triple_exists(&alternating(5), 2, 4, 5), Err(Error::InvalidPrimes(_))));
    }

    #[test]
    fn canonical_order_from_any_role_order() {
        let g = alternating(5);
        for primes in [[5, 3, 2], [3, 2, 5], [2, 5, 3], [5, 2, 3]] {
            let r = pqr_triple_exists(&g, primes[0], primes[1], primes[2]).unwrap().unwrap();
            assert_eq!(r.primes, [2, 3, 5]);
            assert!(r.witness_is_valid());
            let [i, j, k] = r.class_triple.unwrap();
            assert!(triple_count(&g, i, j, k).unwrap().0 > BigUint::from(0u32));
        }
    }

    #[test]
    fn sylow_products() {
        let c30 = sylow_product_test(&cyclic(30), 2, 3, 5).unwrap();
        assert!(c30.all_equal);
        assert_eq!(c30.checked, 1);
        let a5 = sylow_product_test(&alternating(5), 2, 3, 5).unwrap();
        assert!(!a5.all_equal);
        let s3c5 = direct_product(&symmetric(3), &cyclic(5));
        assert!(sylow_product_all(&s3c5).unwrap().iter().all(|r| r.all_equal));
        assert!(sylow_product_test(&symmetric(4), 2, 3, 5).unwrap().all_equal);
    }

    #[test]
    fn alt_construction_for_small_primes() {
        let primes = [3usize, 5, 7, 11, 13];
        for &p in &primes {
            for &q in primes.iter().filter(|&&q| q < p) {
                let c = alt_triple_construct(p, q).unwrap();
                assert_eq!(c.s * q + c.t, p);
                assert_eq!(c.ind_x, c.s + c.t - 1);
                assert_eq!(c.ind_y, c.s * (q - 1));
                assert_eq!(c.ind_xy, p - 1);
                assert!(c.report.witness_is_valid());
            }
        }
        let c = alt_triple_construct(7, 3).unwrap();
        assert_eq!((c.s, c.t, c.ind_x, c.ind_y, c.ind_xy), (2, 1, 2, 4, 6));
        assert!(alt_triple_construct(5, 2).is_err());
        assert!(alt_triple_construct(9, 3).is_err());
    }

    #[test]
    fn gow_on_sl2_5() {
        let g = sl2(5);
        assert_eq!(g.order_u64(), 120);
        let data = g.class_data().unwrap();
        let i = data.classes.iter().position(|c| c.element_order == 6).unwrap();
        let j = data.classes.iter().position(|c| c.element_order == 4).unwrap();
        assert!(gow_coverage_check(&g, 5, i, j).unwrap());
        let central = data.classes.iter().position(|c| c.element_order == 2).unwrap();
        assert!(matches!(gow_coverage_check(&g, 5, central, j), Err(Error::ClassNotRegularSemisimple(_))));
    }

    #[test]
    fn chief_factors() {
        assert_eq!(chief_factor_orders(&symmetric(4)).unwrap(), vec![4, 3, 2]);
        assert_eq!(chief_factor_orders(&direct_product(&alternating(5), &cyclic(3))).unwrap().iter().product::<u64>(), 180);
    }
}
