//! Frattini covers: lift sets and their products, the abelian coset
//! identity, ramification of central characters, and extraspecial test beds.

pub mod coset_identity;
pub mod cover;
pub mod extraspecial;
pub mod ramified;
pub mod value;

pub use coset_identity::{abelian_coset_identity_check, CosetIdentityReport};
pub use cover::{generating_tuple, sl2_zm, CoverScenario, FrattiniEvidence, LiftProductReport, LiftSet};
pub use extraspecial::{extraspecial_by_quaternion, extraspecial_group, Extraspecial, ExtraspecialVariant, QuadraticForm2};
pub use ramified::{fully_ramified_all, fully_ramified_check, Ramification};
pub use value::{value_formula_check, value_formula_group, ValueFormulaReport};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::named::{affine, alternating};
    use crate::permcore::{coset_action, Permutation};
    use crate::structure::{complement_exists, is_extraspecial, ExtraspecialType};
    use crate::{Error, Group};

    #[test]
    fn extraspecial_orders_and_types() {
        let e = extraspecial_group(3, 1, ExtraspecialVariant::PlusExponentP).unwrap();
        assert_eq!(e.order_u64(), 27);
        assert!(e.table().unwrap().elements.iter().all(|x| x.pow(3).is_identity()));
        assert_eq!(is_extraspecial(&e, 3).unwrap(), Some(ExtraspecialType::ExponentP));
        let m = extraspecial_group(2, 2, ExtraspecialVariant::Minus2).unwrap();
        assert_eq!(m.order_u64(), 32);
        assert_eq!(is_extraspecial(&m, 2).unwrap(), Some(ExtraspecialType::Minus));
        let p = extraspecial_group(2, 2, ExtraspecialVariant::Plus2).unwrap();
        assert_eq!(is_extraspecial(&p, 2).unwrap(), Some(ExtraspecialType::Plus));
        let five = extraspecial_group(5, 1, ExtraspecialVariant::PlusExponentP).unwrap();
        assert_eq!(five.order_u64(), 125);
        assert!(extraspecial_group(2, 1, ExtraspecialVariant::PlusExponentP).is_err());
        assert!(matches!(extraspecial_group(3, 5, ExtraspecialVariant::PlusExponentP), Err(Error::OverCap { .. })));
    }

    #[test]
    fn one_dimensional_forms_give_q8_and_d8() {
        let q8 = extraspecial_group(2, 1, ExtraspecialVariant::Minus2).unwrap();
        let inv = q8.table().unwrap().elements.iter().filter(|x| x.order() == 2).count();
        assert_eq!(inv, 1);
        let d8 = extraspecial_group(2, 1, ExtraspecialVariant::Plus2).unwrap();
        let inv = d8.table().unwrap().elements.iter().filter(|x| x.order() == 2).count();
        assert_eq!(inv, 5);
    }

    #[test]
    fn non_isometries_are_rejected() {
        let e = Extraspecial::odd(3, 1).unwrap();
        // determinant 2, so the commutator form is scaled
        assert!(e.automorphism(&vec![vec![2, 0], vec![0, 1]]).is_err());
        let q = Extraspecial::from_form(&QuadraticForm2::standard(1, true));
        // swapping coordinates preserves the anisotropic form x^2 + xy + y^2
        assert!(q.automorphism(&vec![vec![0, 1], vec![1, 0]]).is_ok());
    }

    #[test]
    fn ramification_of_extraspecial_groups() {
        for (p, n, v, e) in [
            (3, 1, ExtraspecialVariant::PlusExponentP, 3),
            (5, 1, ExtraspecialVariant::PlusExponentP, 5),
            (2, 2, ExtraspecialVariant::Minus2, 4),
            (2, 2, ExtraspecialVariant::Plus2, 4),
            (3, 2, ExtraspecialVariant::PlusExponentP, 9),
        ] {
            let g = extraspecial_group(p, n, v).unwrap();
            for r in fully_ramified_all(&g, &g).unwrap() {
                assert!(r.ok, "p={p} n={n}");
                assert_eq!(r.e, e);
            }
        }
        let c = affine(7, 6);
        assert!(matches!(fully_ramified_check(&c, &c), Err(Error::Precondition(_))));
        let a = crate::permcore::named::cyclic(9);
        assert!(matches!(fully_ramified_check(&a, &a), Err(Error::NoSuchCharacter(_))));
    }

    #[test]
    fn split_extensions_have_complements() {
        for p in [3, 5] {
            let (g, e) = extraspecial_by_quaternion(p).unwrap();
            assert_eq!(g.order_u64(), (p as u64).pow(3) * 8);
            assert!(e.is_normal_in(&g));
            assert!(complement_exists(&g, &e).unwrap().is_some());
            // the quotient by Z(E) splits over E/Z(E) as well
            let z = e.center().unwrap().clone();
            let act = coset_action(&g, &z).unwrap();
            let eq = act.image.subgroup(e.generators().iter().map(|x| act.image_of(x)).collect()).unwrap();
            assert_eq!(eq.order_u64(), (p as u64).pow(2));
            assert!(complement_exists(&act.image, &eq).unwrap().is_some());
            assert!(fully_ramified_check(&g, &e).unwrap().ok);
        }
    }

    #[test]
    fn value_formula_small_cases() {
        for (n, m, v) in [(1, 1, -1), (2, 1, -2), (2, 2, -1)] {
            let r = value_formula_check(n, m).unwrap();
            assert_eq!(r.automorphism_order, (1 << m) + 1);
            assert_eq!(r.faithful as u64, r.automorphism_order);
            assert_eq!(r.expected, v);
            assert!(r.ok, "{r:?}");
        }
        assert!(value_formula_check(2, 3).is_err());
    }

    fn three_three_five(a5: &Group) -> Vec<Permutation> {
        // a 3-cycle and a 5-cycle whose product has order 3
        let x = Permutation::from_cycles(5, &[vec![0, 1, 2]]).unwrap();
        let elems = a5.table().unwrap().elements.clone();
        let y = elems.iter().find(|y| y.order() == 5 && x.mul(y).order() == 3 && a5.subgroup(vec![x.clone(), (*y).clone()]).unwrap().order_u64() == 60).unwrap();
        vec![x.clone(), y.clone(), x.mul(y).inverse()]
    }

    #[test]
    fn trivial_kernel_lifts_are_singletons() {
        let a5 = alternating(5);
        let sc = CoverScenario::new("A5", a5.clone(), Group::trivial(5), 2, FrattiniEvidence::Computed(true)).unwrap();
        let tuple: Vec<Permutation> = three_three_five(&a5).iter().map(|x| sc.quotient.image_of(x)).collect();
        for g in &tuple {
            assert_eq!(sc.lift_set(g).unwrap().members.len(), 1);
        }
        let r = sc.lift_product_set(&tuple).unwrap();
        assert_eq!(r.products.len(), 1);
        assert!(r.contains_identity && r.single_coset);
    }

    #[test]
    fn central_kernel_gives_one_product() {
        let sl25 = crate::permcore::matrix_group_to_perm(&[vec![vec![1, 1], vec![0, 1]], vec![vec![0, 1], vec![4, 0]]], 5, 2).unwrap();
        let z = sl25.center().unwrap().clone();
        assert_eq!(z.order_u64(), 2);
        let mut sc = CoverScenario::new("SL2(5)", sl25, z, 2, FrattiniEvidence::Asserted(String::new())).unwrap();
        assert!(sc.compute_frattini().unwrap());
        let q = sc.quotient().clone();
        assert_eq!(q.order_u64(), 60);
        let elems = q.table().unwrap().elements.clone();
        let x = elems.iter().find(|x| x.order() == 3).unwrap();
        let y = elems
            .iter()
            .find(|y| y.order() == 5 && x.mul(y).order() == 3 && q.subgroup(vec![x.clone(), (*y).clone()]).unwrap().order_u64() == 60)
            .unwrap();
        let tuple = vec![x.clone(), y.clone(), x.mul(y).inverse()];
        let r = sc.lift_product_set(&tuple).unwrap();
        assert_eq!(r.lift_sizes, vec![1, 1, 1]);
        assert_eq!(r.j_order, 1);
        assert!(r.single_coset);
        // an even order is not prime to the kernel
        let inv = elems.iter().find(|x| x.order() == 2).unwrap();
        assert!(matches!(sc.lift_product_set(&[inv.clone(), inv.clone()]), Err(Error::Precondition(_))));
    }

    #[test]
    fn sl2_mod_prime_squared() {
        assert!(matches!(sl2_zm(4), Err(Error::Precondition(_))));
        let sc = sl2_zm(25).unwrap();
        assert_eq!(sc.x.order_u64(), 15000);
        assert_eq!(sc.f.order_u64(), 125);
        assert_eq!(sc.quotient().order_u64(), 120);
        assert_eq!(sc.commutator_with_kernel().unwrap().order_u64(), 125);
        let big = sl2_zm(49).unwrap();
        assert_eq!(big.x.order_u64(), 343 * 336);
    }

    #[test]
    fn coset_identity_in_frobenius_group() {
        let g = affine(7, 6);
        let n = g.subgroup(vec![Permutation::from_cycles(7, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap()]).unwrap();
        // x -> 3x and x -> 3x + 1
        let g1 = Permutation::from_images((0..7).map(|x| (3 * x % 7) as u32).collect()).unwrap();
        let g2 = Permutation::from_images((0..7).map(|x| ((3 * x + 1) % 7) as u32).collect()).unwrap();
        let r = abelian_coset_identity_check(&g, &n, &[g1.clone(), g2.clone()]).unwrap();
        assert!(r.holds && r.conjugates_ok);
        assert_eq!(r.product_size, 7);
        let e = abelian_coset_identity_check(&g, &n, &[g1]);
        assert!(matches!(e, Err(Error::Hypothesis(_))));
    }
}
