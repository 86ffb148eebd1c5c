use proptest::prelude::*;

use merged_johnson::classify::{aut_descriptor, classify, only_an_sn};
use merged_johnson::johnson::codec;
use merged_johnson::permgroup::{equipartition_label, equipartition_mask, map_mask};
use merged_johnson::{FiniteField, KSubset, MergeSet, MergedJohnsonGraph, Permutation, PermutationGroup};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn instance_up_to(n_max: usize) -> impl Strategy<Value = (usize, usize, MergeSet)> {
    (2usize..=n_max / 2)
        .prop_flat_map(move |k| (Just(k), 2 * k..=n_max, 1u64..(1 << k)))
        .prop_map(|(k, n, bits)| {
            let idx: Vec<usize> = (1..=k).filter(|i| bits >> (i - 1) & 1 == 1).collect();
            (n, k, MergeSet::new(k, &idx).unwrap())
        })
}

proptest! {
    #[test]
    fn colex_rank_round_trips(n in 2usize..=40, seed in any::<u64>()) {
        let k = (seed as usize % (n / 2)).max(1);
        let rank = seed % codec::binomial(n as u64, k as u64);
        let mask = codec::unrank_mask(rank, k);
        prop_assert_eq!(mask.count_ones() as usize, k);
        prop_assert!(mask < 1u64 << n);
        prop_assert_eq!(codec::rank_mask(mask), rank);
    }

    #[test]
    fn chain_order_matches_closure(a in permutation(6), b in permutation(6)) {
        let g = PermutationGroup::new(6, vec![a.clone(), b.clone()]).unwrap();
        let elements = g.elements();
        prop_assert_eq!(elements.len() as u128, g.order());
        let set: std::collections::HashSet<_> = elements.iter().cloned().collect();
        prop_assert_eq!(set.len(), elements.len());
        for x in &elements {
            prop_assert!(set.contains(&x.compose(&a).unwrap()));
            prop_assert!(g.contains(x));
        }
    }

    #[test]
    fn subset_action_preserves_adjacency((n, k, merge) in instance_up_to(12), seed in any::<u64>()) {
        let g = MergedJohnsonGraph::build(n, k, &merge).unwrap();
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.rotate_left(seed as usize % n);
        images.swap(0, (seed >> 8) as usize % n);
        let p = Permutation::from_images(images).unwrap();
        let v = g.vertex_count();
        for u in 0..v.min(30) {
            let w = (u * 7 + seed) % v;
            let pu = codec::rank_mask(map_mask(&p, codec::unrank_mask(u, k)));
            let pw = codec::rank_mask(map_mask(&p, codec::unrank_mask(w, k)));
            prop_assert_eq!(g.adjacent_ranks(u, w), g.adjacent_ranks(pu, pw));
            prop_assert_eq!(g.adjacent_ranks(u, w), g.adjacent_ranks(w, u));
        }
        prop_assert_eq!(g.neighbours(seed % v).len() as u64, g.expected_degree());
    }

    #[test]
    fn classification_is_deterministic((n, k, merge) in instance_up_to(40)) {
        let a = classify(n, k, &merge).unwrap();
        let b = classify(n, k, &merge).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
        let aut = aut_descriptor(n, k, &merge).unwrap();
        if only_an_sn(n, k, &merge) {
            prop_assert!(aut.is_symmetric_group());
            prop_assert!(!a.cayley.is_yes() && !a.two_regular.is_yes());
        }
        if a.cayley.is_yes() {
            prop_assert_eq!(a.deficiency.exact().map(|d| d.to_string()), Some("1".to_string()));
        }
    }

    #[test]
    fn equipartition_labels_round_trip(label in 0u64..126) {
        let half = equipartition_mask(10, label);
        prop_assert_eq!(half.count_ones(), 5);
        prop_assert_eq!(equipartition_label(10, half), label);
        prop_assert_eq!(equipartition_label(10, 0x3ff & !half), label);
        let s = KSubset::new(10, half).unwrap();
        prop_assert_eq!(s.complement().bits(), 0x3ff & !half);
    }

    #[test]
    fn field_arithmetic_laws(q in prop::sample::select(vec![4u64, 8, 9, 25, 27, 49, 64, 81, 121, 125]), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = FiniteField::of_order(q).unwrap();
        let el = |x: u32| f.element(x as u64 % q).unwrap();
        let (a, b, c) = (el(a), el(b), el(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, q - 1), f.one());
        }
    }
}
