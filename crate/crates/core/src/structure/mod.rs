//! Series, radicals, Sylow and Frattini subgroups, complements, and
//! extraspecial recognition.

pub mod extraspecial;
pub mod frattini;
pub mod lattice;
pub mod lifts;
pub mod normal;
pub mod series;
pub mod sylow;

pub use extraspecial::{is_extraspecial, ExtraspecialType};
pub use frattini::{frattini, minimal_noncentral_normal};
pub use lattice::{complement_by_lattice, frattini_by_lattice, maximal_subgroups, subgroup_lattice};
pub use lifts::{complement_exists, proper_supplement};
pub use normal::{normal_subgroups, NormalLattice, NormalSubgroup};
pub use series::{derived_series, is_p_solvable, is_solvable, p_radical_series, solvable_radical, SeriesKind, SeriesReport};
pub use sylow::{sylow, sylow_indexed, IndexedSubgroup};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::named::{affine, alternating, cyclic, direct_product, quaternion, symmetric};
    use crate::permcore::{Group, Permutation};
    use crate::Error;
    use proptest::prelude::*;

    fn dihedral8() -> Group {
        let r = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let s = Permutation::from_cycles(4, &[vec![1, 3]]).unwrap();
        Group::new(4, vec![r, s]).unwrap()
    }

    #[test]
    fn derived_series_of_s4() {
        let r = derived_series(&symmetric(4));
        assert!(r.verdict);
        assert_eq!(r.orders(), vec![24, 12, 4, 1]);
        assert!(!is_solvable(&alternating(5)));
        assert!(is_solvable(&cyclic(6)));
    }

    #[test]
    fn p_solvability() {
        let a5 = alternating(5);
        assert!(!is_p_solvable(&a5, 5).unwrap());
        assert!(!is_p_solvable(&a5, 2).unwrap());
        assert!(is_p_solvable(&a5, 7).unwrap());
        for p in [2, 3, 5] {
            assert!(is_p_solvable(&symmetric(4), p).unwrap());
        }
        // S5 has the normal series 1 < A5 < S5
        let s5 = symmetric(5);
        assert!(!is_p_solvable(&s5, 3).unwrap());
        let tower = p_radical_series(&s5, 3).unwrap();
        assert_eq!(tower.orders(), vec![1]);
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(sylow(&alternating(5), 2).unwrap().order_u64(), 4);
        assert_eq!(sylow(&symmetric(4), 2).unwrap().order_u64(), 8);
        assert_eq!(sylow(&cyclic(6), 5).unwrap().order_u64(), 1);
        let p = sylow(&symmetric(5), 3).unwrap();
        assert_eq!(p.order_u64(), 3);
    }

    #[test]
    fn frattini_small() {
        assert_eq!(frattini(&cyclic(4)).unwrap().order_u64(), 2);
        assert_eq!(frattini(&symmetric(4)).unwrap().order_u64(), 1);
        let q8 = quaternion();
        let phi = frattini(&q8).unwrap();
        assert!(phi.same_as(q8.center().unwrap()));
        assert_eq!(phi.order_u64(), 2);
    }

    #[test]
    fn frattini_agrees_with_lattice() {
        let groups = [
            cyclic(4),
            cyclic(12),
            symmetric(4),
            alternating(4),
            alternating(5),
            quaternion(),
            dihedral8(),
            affine(7, 6),
            affine(5, 4),
            direct_product(&cyclic(3), &symmetric(3)),
            direct_product(&quaternion(), &cyclic(3)),
        ];
        for g in &groups {
            let a = frattini(g).unwrap();
            let b = frattini_by_lattice(g).unwrap();
            assert!(a.same_as(&b), "order {}", g.order_u64());
        }
    }

    #[test]
    fn complements_agree_with_lattice() {
        let groups = [symmetric(4), quaternion(), dihedral8(), cyclic(4), affine(7, 6), cyclic(6),
            direct_product(&cyclic(3), &symmetric(3)), alternating(4)];
        for g in &groups {
            for n in &normal_subgroups(g).unwrap().subgroups {
                let fast = complement_exists(g, &n.group).unwrap();
                let slow = complement_by_lattice(g, &n.group).unwrap();
                assert_eq!(fast.is_some(), slow, "|G|={} |N|={}", g.order_u64(), n.order);
                if let Some(u) = fast {
                    assert_eq!(u.order_u64() * n.order, g.order_u64());
                    assert!(u.is_subgroup_of(g));
                }
            }
        }
    }

    #[test]
    fn named_complements() {
        let s4 = symmetric(4);
        let v4 = s4.derived_subgroup().derived_subgroup().clone();
        assert_eq!(complement_exists(&s4, &v4).unwrap().unwrap().order_u64(), 6);
        let q8 = quaternion();
        assert!(complement_exists(&q8, q8.center().unwrap()).unwrap().is_none());
        let c4 = cyclic(4);
        assert!(complement_exists(&c4, &frattini(&c4).unwrap()).unwrap().is_none());
        let trivial = Group::trivial(4);
        assert_eq!(complement_exists(&s4, &trivial).unwrap().unwrap().order_u64(), 24);
    }

    #[test]
    fn minimal_noncentral() {
        let g = direct_product(&cyclic(3), &symmetric(3));
        let rot = Permutation::from_cycles(6, &[vec![3, 4, 5]]).unwrap();
        let c3 = g.normal_closure(&[rot]).unwrap();
        assert_eq!(c3.order_u64(), 3);
        let n = minimal_noncentral_normal(&g, &c3).unwrap();
        assert!(n.same_as(&c3));
        let central = g.center().unwrap().clone();
        assert!(matches!(minimal_noncentral_normal(&g, &central), Err(Error::NoneFound(_))));
    }

    #[test]
    fn normal_subgroup_counts() {
        // S4: 1, V4, A4, S4; Q8: 1, Z, three C4, Q8
        assert_eq!(normal_subgroups(&symmetric(4)).unwrap().len(), 4);
        assert_eq!(normal_subgroups(&quaternion()).unwrap().len(), 6);
        assert_eq!(normal_subgroups(&alternating(5)).unwrap().len(), 2);
        assert_eq!(normal_subgroups(&cyclic(30)).unwrap().len(), 8);
    }

    #[test]
    fn extraspecial_recognition() {
        assert_eq!(is_extraspecial(&quaternion(), 2).unwrap(), Some(ExtraspecialType::Minus));
        assert_eq!(is_extraspecial(&dihedral8(), 2).unwrap(), Some(ExtraspecialType::Plus));
        assert_eq!(is_extraspecial(&cyclic(9), 3).unwrap(), None);
        assert_eq!(is_extraspecial(&symmetric(4), 2).unwrap(), None);
    }

    #[test]
    fn radical_of_direct_product() {
        let g = direct_product(&alternating(5), &cyclic(3));
        assert_eq!(solvable_radical(&g).unwrap().order_u64(), 3);
    }

    fn arb_perm(deg: usize) -> impl Strategy<Value = Permutation> {
        Just((0..deg as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn random_groups_on_five_points(a in arb_perm(5), b in arb_perm(5)) {
            let g = Group::new(5, vec![a, b]).unwrap();
            let order = g.order_u64();
            for p in g.prime_divisors() {
                let s = sylow(&g, p).unwrap();
                prop_assert_eq!(s.order_u64(), crate::arith::p_part(order, p));
                prop_assert!(s.is_subgroup_of(&g));
            }
            let phi = frattini(&g).unwrap();
            prop_assert!(phi.same_as(&frattini_by_lattice(&g).unwrap()));
            prop_assert!(phi.is_normal_in(&g));
            prop_assert!(is_solvable(&phi));
            for n in &normal_subgroups(&g).unwrap().subgroups {
                prop_assert!(n.group.is_normal_in(&g));
                let fast = complement_exists(&g, &n.group).unwrap().is_some();
                prop_assert_eq!(fast, complement_by_lattice(&g, &n.group).unwrap());
            }
            let solvable = is_solvable(&g);
            for p in [2, 3, 5] {
                let ps = is_p_solvable(&g, p).unwrap();
                prop_assert!(!solvable || ps);
            }
        }
    }
}
