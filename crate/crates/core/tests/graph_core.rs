use proptest::prelude::*;

use randic::enumeration::upper_triangle_pairs;
use randic::{
    enumerate_graphs, parse_edge_list, parse_graph6, randic_direct, to_edge_list, to_graph6,
    Constraints, DegreeProfile, Graph,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = upper_triangle_pairs(n);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges = pairs.iter().zip(bits).filter_map(|(&e, b)| b.then_some(e));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

#[test]
fn graph6_round_trip_exhaustive_to_five() {
    for n in 1..=5 {
        for g in enumerate_graphs(n, Constraints::default()).unwrap() {
            let code = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&code).unwrap(), g);
            assert_eq!(to_graph6(&parse_graph6(&code).unwrap()).unwrap(), code);
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(8)) {
        let code = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&code).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn profile_handshake(g in arb_graph(10)) {
        if let Ok(p) = DegreeProfile::of(&g) {
            prop_assert!(p.satisfies_handshake());
            let total: usize = p.cross_counts().values().sum();
            prop_assert_eq!(total, g.size());
            for &(i, j) in p.cross_counts().keys() {
                prop_assert!(p.class_size(i) > 0 && p.class_size(j) > 0);
            }
        }
    }

    #[test]
    fn biregular_degrees_match_profile(g in arb_graph(9)) {
        if let (Some(cert), Ok(p)) = (g.biregular_certificate(), DegreeProfile::of(&g)) {
            prop_assert_eq!((cert.low_degree, cert.high_degree), (p.min_degree(), p.max_degree()));
            for &u in &cert.low_part {
                prop_assert_eq!(g.degree(u), cert.low_degree);
                for &w in g.neighbors(u) {
                    prop_assert!(cert.high_part.contains(&w));
                }
            }
            for &u in &cert.high_part {
                prop_assert_eq!(g.degree(u), cert.high_degree);
            }
        }
    }

    #[test]
    fn index_is_relabeling_invariant((g, perm) in arb_relabeled(9)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(h.canonical_form(), g.canonical_form());
        if let (Ok(a), Ok(b)) = (randic_direct(&g), randic_direct(&h)) {
            prop_assert_eq!(&a.pair_multiset, &b.pair_multiset);
            prop_assert!((a.value - b.value).abs() <= 1e-12);
            prop_assert_eq!(a.edge_count(), g.size());
        }
    }
}
