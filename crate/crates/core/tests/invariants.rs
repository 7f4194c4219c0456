use proptest::prelude::*;
use vcsharp_core::iso::{
    automorphisms, canonical_form, find_iso, orbit_profile, IsoBudget, IsoEngine,
};
use vcsharp_core::kernel::{
    direct_product, disjoint_union, is_poset, lex_sum, rst_closure, union_of, FinStruct,
};
use vcsharp_core::oracle;
use vcsharp_core::ordertype::{rank, realize, OtTerm};

fn structure(max: usize) -> impl Strategy<Value = FinStruct> {
    (0..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n)
            .prop_map(move |bits| FinStruct::from_fn(n, |x, y| bits[x * n + y]))
    })
}

fn nonempty(max: usize) -> impl Strategy<Value = FinStruct> {
    structure(max).prop_filter("nonempty", |s| s.size() > 0)
}

// transitive closure of an upward relation
fn poset(max: usize) -> impl Strategy<Value = FinStruct> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut r: Vec<Vec<bool>> = (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| x == y || (x < y && bits[x * n + y]))
                        .collect()
                })
                .collect();
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if r[i][k] && r[k][j] {
                            r[i][j] = true;
                        }
                    }
                }
            }
            FinStruct::from_fn(n, |x, y| r[x][y])
        })
    })
}

fn relabelled(max: usize) -> impl Strategy<Value = (FinStruct, FinStruct)> {
    structure(max).prop_flat_map(|s| {
        let n = s.size();
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |perm| (s.clone(), s.relabel(&perm).unwrap()))
    })
}

fn iso(a: &FinStruct, b: &FinStruct) -> bool {
    IsoEngine::new(IsoBudget::default().with_max_size(256))
        .find_iso(a, b)
        .unwrap()
        .is_some()
}

fn term() -> impl Strategy<Value = OtTerm> {
    let leaf = Just(OtTerm::one());
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| OtTerm::sum(&a, &b)),
            prop::collection::vec(inner, 1..3).prop_map(OtTerm::shuffle),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_commutes_and_associates(a in nonempty(3), b in nonempty(3), c in nonempty(3)) {
        prop_assert!(iso(&direct_product(&a, &b), &direct_product(&b, &a)));
        prop_assert!(iso(
            &direct_product(&direct_product(&a, &b), &c),
            &direct_product(&a, &direct_product(&b, &c)),
        ));
    }

    #[test]
    fn union_commutes_and_associates(a in structure(4), b in structure(4), c in structure(4)) {
        prop_assert!(iso(&disjoint_union(&a, &b), &disjoint_union(&b, &a)));
        prop_assert_eq!(
            disjoint_union(&disjoint_union(&a, &b), &c),
            disjoint_union(&a, &disjoint_union(&b, &c)),
        );
    }

    #[test]
    fn product_distributes_over_union(a in nonempty(3), b in nonempty(3), c in nonempty(3)) {
        let lhs = direct_product(&a, &disjoint_union(&b, &c));
        let rhs = disjoint_union(&direct_product(&a, &b), &direct_product(&a, &c));
        prop_assert!(iso(&lhs, &rhs));
    }

    #[test]
    fn equivalence_closure_matches_union_find(a in structure(6)) {
        prop_assert_eq!(rst_closure(&a), oracle::union_find_rst(&a));
    }

    #[test]
    fn lex_sum_over_empty_index_is_union(parts in prop::collection::vec(structure(3), 0..4)) {
        let index = FinStruct::empty_relation(parts.len());
        prop_assert_eq!(lex_sum(&index, &parts).unwrap(), union_of(&parts));
    }

    #[test]
    fn posets_are_closed_under_the_operations(a in poset(3), b in poset(3), c in poset(3)) {
        prop_assert!(is_poset(&direct_product(&a, &b)));
        prop_assert!(is_poset(&disjoint_union(&a, &b)));
        let index = vcsharp_core::kernel::chain(2);
        prop_assert!(is_poset(&lex_sum(&index, &[b.clone(), c.clone()]).unwrap()));
        let sum = lex_sum(&a, &vec![b; a.size()]).unwrap();
        prop_assert!(is_poset(&sum));
    }

    #[test]
    fn find_iso_agrees_with_brute_force(a in structure(6), b in structure(6)) {
        let fast = find_iso(&a, &b).unwrap();
        let slow = oracle::brute_iso(&a, &b);
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(w) = fast {
            prop_assert!(w.validates(&a, &b));
        }
    }

    #[test]
    fn relabelled_copies_are_found((a, b) in relabelled(7)) {
        let w = find_iso(&a, &b).unwrap();
        prop_assert!(w.is_some_and(|w| w.validates(&a, &b)));
        prop_assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn canonical_form_separates_exactly(a in structure(5), b in structure(5)) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, oracle::brute_iso(&a, &b).is_some());
    }

    #[test]
    fn automorphism_group_matches_brute_force(a in structure(6)) {
        let mut fast = automorphisms(&a).unwrap();
        prop_assert_eq!(&fast[0], &(0..a.size()).collect::<Vec<_>>());
        fast.sort();
        let mut slow = oracle::brute_automorphisms(&a);
        slow.sort();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn orbit_profile_is_relabelling_invariant((a, b) in relabelled(5)) {
        prop_assume!(a.size() > 0);
        let pa = orbit_profile(&a, 3).unwrap();
        prop_assert_eq!(&pa, &orbit_profile(&b, 3).unwrap());
        for k in 1..=3 {
            prop_assert_eq!(pa.counts[k - 1], oracle::brute_tuple_orbits(&a, k));
        }
    }

    #[test]
    fn realize_is_deterministic(t in term(), budget in 1usize..6, seed in any::<u64>()) {
        let a = realize(&t, budget, seed).unwrap();
        prop_assert_eq!(&a, &realize(&t, budget, seed).unwrap());
        prop_assert_eq!(a.adjacency.len() + 1, a.order.size());
    }

    #[test]
    fn sum_is_associative_on_terms(a in term(), b in term(), c in term()) {
        let left = OtTerm::sum(&OtTerm::sum(&a, &b), &c);
        let right = OtTerm::sum(&a, &OtTerm::sum(&b, &c));
        prop_assert_eq!(rank(&left), rank(&right));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn terms_round_trip_through_json(t in term()) {
        let s = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<OtTerm>(&s).unwrap(), t);
    }
}
