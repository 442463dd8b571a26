//! Group files and the bundled corpus.

pub mod corpus;
pub mod parse;

pub use corpus::{construct, corpus, corpus_entry, corpus_entry_with, corpus_manifest, corpus_with, entry_spec, CorpusEntry, ManifestEntry, Multiplier, CORPUS_ENV};
pub use parse::{parse_group_file, Expected, GroupSpec, Realization};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::{Caps, Permutation};
    use crate::Error;
    use proptest::prelude::*;

    #[test]
    fn alternating_group_from_cycles() {
        let spec = parse_group_file("degree 5\ngen (1 2 3 4 5)\ngen (1 2 3)\n").unwrap();
        assert_eq!(spec.name, None);
        assert_eq!(spec.build(&Caps::default()).unwrap().order_u64(), 60);
    }

    #[test]
    fn matrices_mod_prime_square() {
        let spec = parse_group_file("mod 25 dim 2\ngen [[1,1],[0,1]]\ngen [[1,0],[1,1]]\n").unwrap();
        let g = spec.build(&Caps::default()).unwrap();
        assert_eq!(g.order_u64(), 15000);
        assert_eq!(g.degree(), 625);
    }

    #[test]
    fn unclosed_cycle_is_a_syntax_error() {
        match parse_group_file("degree 5\ngen (1 2") {
            Err(Error::Syntax { line, column, expected }) => {
                assert_eq!((line, column), (2, 9));
                assert!(expected.contains(&"')'".to_string()));
            }
            other => panic!("{other:?}"),
        }
    }

    fn semantic(text: &str) -> (usize, usize, String) {
        match parse_group_file(text) {
            Err(Error::Semantic { line, column, message }) => (line, column, message),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejections() {
        assert_eq!(semantic("degree 4\ngen (1 5)\n").0, 2);
        let (_, col, msg) = semantic("degree 4\n\ngen (1 2 1)\n");
        assert_eq!(col, 10);
        assert!(msg.contains("twice"));
        assert!(semantic("degree 4\ngen (1 2)(2 3)\n").2.contains("twice"));
        assert!(semantic("mod 5 dim 2\ngen [[1,1],[1]]\n").2.contains("entries"));
        assert!(semantic("mod 5 dim 2\ngen [[1,1]]\n").2.contains("rows"));
        assert!(semantic("mod 5 dim 2\ngen [[1,2],[2,4]]\n").2.contains("invertible"));
        assert!(semantic("mod 5 dim 2\ngen [[5,0],[0,1]]\n").2.contains("outside"));
        assert!(semantic("field 4 dim 2\ngen [[2,0],[0,1]]\n").2.contains("outside"));
        assert!(semantic("field 6 dim 2\n").2.contains("prime power"));
        assert!(semantic("degree 3\naction orbit\ngen (1 2)\n").2.contains("matrix"));
        assert!(matches!(parse_group_file("mod 5 dim 2\ngen [[z,0],[0,1]]\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_file("gen (1 2)\n"), Err(Error::Syntax { line: 1, column: 1, .. })));
        assert!(matches!(parse_group_file("# only a comment\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group_file("degree 3 4\n"), Err(Error::Syntax { line: 1, column: 10, .. })));
        assert!(matches!(parse_group_file("degree 3\ndegree 4\n"), Err(Error::Syntax { line: 2, .. })));
    }

    #[test]
    fn field_entries_and_comments() {
        let text = "name SL2(4)  # comment\nfield 4 dim 2\naction projective\nexpect order 60\ngen [[1,1],[0,1]]\ngen [[0,1],[1,0]]\ngen [[z,0],[0,z^2]]\n";
        let spec = parse_group_file(text).unwrap();
        assert_eq!(spec.name.as_deref(), Some("SL2(4)"));
        let g = spec.build(&Caps::default()).unwrap();
        assert_eq!(g.degree(), 5);
        spec.validate(&g, "SL2(4)").unwrap();
        let mut wrong = spec.clone();
        wrong.expected.order = Some(61);
        assert!(matches!(wrong.validate(&g, "x"), Err(Error::Validation { .. })));
        assert_eq!(parse_group_file(&spec.to_text()).unwrap(), spec);
    }

    fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
        Just((0..degree as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn cycle_specs_round_trip((degree, gens) in (1usize..12).prop_flat_map(|d| (Just(d), proptest::collection::vec(perm_strategy(d), 0..4))),
                                  order in proptest::option::of(1u64..1000), classes in proptest::option::of(1usize..50),
                                  named in any::<bool>()) {
            let spec = GroupSpec {
                name: named.then(|| format!("G{degree}")),
                realization: Realization::PermCycles { degree, gens },
                action: Default::default(),
                expected: Expected { order, center_order: None, class_count: classes },
            };
            prop_assert_eq!(parse_group_file(&spec.to_text()).unwrap(), spec);
        }

        #[test]
        fn matrix_specs_round_trip(q in prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 25]), a in 0u32..1000, b in 0u32..1000) {
            let f = crate::permcore::FiniteField::new(q).unwrap();
            let (x, y) = (a % (q - 1), b % q);
            // lower triangular with a nonzero diagonal, so always invertible
            let m = vec![vec![f.z_pow(x as i64), 0], vec![y, 1]];
            let spec = GroupSpec {
                name: Some("M".into()),
                realization: Realization::MatrixGf { q, dim: 2, gens: vec![m] },
                action: crate::permcore::Action::Orbit,
                expected: Expected::default(),
            };
            prop_assert_eq!(parse_group_file(&spec.to_text()).unwrap(), spec);
        }
    }

    #[test]
    fn constructions() {
        assert_eq!(construct("extraspecial 2 2 minus").unwrap().order_u64(), 32);
        assert_eq!(construct("value-formula 2 2").unwrap().order_u64(), 160);
        assert!(construct("extraspecial 3").is_err());
    }

    #[test]
    fn unknown_names_are_reported() {
        assert!(matches!(corpus_entry("M24"), Err(Error::UnknownGroup(_))));
        let a5 = corpus_entry("a5").unwrap();
        assert_eq!(a5.group.order_u64(), 60);
        assert_eq!(corpus_entry("SL3(2)").unwrap().name, "L2(7)");
    }
}
