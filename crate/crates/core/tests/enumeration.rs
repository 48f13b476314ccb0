use std::collections::BTreeSet;

use randic::enumeration::{extremal_scan_partitioned, upper_triangle_pairs, GraphStream};
use randic::{enumerate_graphs, extremal_scan, to_graph6, Constraints, Graph};

/// Filter-after-generate oracle: every subset of vertex pairs, then the
/// constraints checked on the finished graph.
fn naive(n: usize, c: Constraints) -> BTreeSet<String> {
    let pairs = upper_triangle_pairs(n);
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .filter(|g| c.admits(g))
        .map(|g| to_graph6(&g).unwrap())
        .collect()
}

fn pruned(n: usize, c: Constraints) -> Vec<String> {
    enumerate_graphs(n, c)
        .unwrap()
        .map(|g| to_graph6(&g).unwrap())
        .collect()
}

fn constraint_grid(n: usize) -> Vec<Constraints> {
    let mut out = Vec::new();
    for connected in [false, true] {
        for min_degree in [None, Some(1), Some(2), Some(3)] {
            for max_degree in [None, Some(1), Some(2), Some(n.saturating_sub(2))] {
                out.push(Constraints {
                    connected,
                    min_degree,
                    max_degree,
                });
            }
        }
    }
    out
}

#[test]
fn pruned_matches_naive_up_to_five() {
    for n in 1..=5 {
        for c in constraint_grid(n) {
            let fast = pruned(n, c);
            let as_set: BTreeSet<_> = fast.iter().cloned().collect();
            assert_eq!(as_set.len(), fast.len(), "duplicates for n = {n}, {c:?}");
            assert_eq!(as_set, naive(n, c), "n = {n}, {c:?}");
        }
    }
}

#[test]
fn unconstrained_count_is_power_of_two() {
    for n in 1..=5 {
        let expected = 1u64 << (n * (n - 1) / 2);
        let count = enumerate_graphs(n, Constraints::default()).unwrap().count() as u64;
        assert_eq!(count, expected, "n = {n}");
    }
}

#[test]
fn stream_is_deterministic() {
    let c = Constraints {
        connected: true,
        min_degree: Some(1),
        max_degree: Some(4),
    };
    assert_eq!(pruned(6, c), pruned(6, c));
}

#[test]
fn prefix_streams_cover_the_whole_stream_in_order() {
    let c = Constraints {
        connected: false,
        min_degree: Some(1),
        max_degree: None,
    };
    let whole = pruned(5, c);
    let mut pieces = Vec::new();
    for mask in 0..8u32 {
        let prefix: Vec<bool> = (0..3).map(|k| mask >> (2 - k) & 1 == 1).collect();
        pieces.extend(
            GraphStream::with_prefix(5, c, &prefix)
                .unwrap()
                .map(|g| to_graph6(&g).unwrap()),
        );
    }
    assert_eq!(whole, pieces);
}

#[test]
fn scan_is_partition_invariant() {
    let single = extremal_scan(6, false, 1).unwrap();
    assert_eq!(single, extremal_scan_partitioned(6, false, 0, 1).unwrap());
    for (bits, jobs) in [(1, 2), (3, 4), (5, 3), (8, 2)] {
        assert_eq!(
            single,
            extremal_scan_partitioned(6, false, bits, jobs).unwrap(),
            "bits = {bits}, jobs = {jobs}"
        );
    }
    assert_eq!(
        extremal_scan(6, true, 1).unwrap(),
        extremal_scan(6, true, 4).unwrap()
    );
}

#[test]
fn scan_extremes_for_small_classes() {
    let scan = extremal_scan(5, true, 1).unwrap();
    let class = |n, d, big_d| {
        scan.iter()
            .find(|s| (s.n, s.d, s.big_d) == (n, d, big_d))
            .unwrap()
    };
    let star = class(4, 1, 3);
    assert!((star.min_r - 3f64.sqrt()).abs() < 1e-12);
    assert_eq!(
        star.argmin,
        to_graph6(&Graph::star(4).canonical_form()).unwrap()
    );

    let k23 = class(5, 2, 3);
    assert!((k23.min_r - 6f64.sqrt()).abs() < 1e-12);
    assert_eq!(
        k23.argmin,
        to_graph6(&Graph::complete_bipartite(2, 3).canonical_form()).unwrap()
    );
    // Labeled copies of K_{2,3}: choose the two-vertex side.
    assert_eq!(k23.lower_equality_witnesses, 10);

    assert!(scan
        .iter()
        .all(|s| s.lower_violations == 0 && s.upper_violations == 0));
}

#[test]
fn paths_never_reach_the_upper_bound() {
    // No connected graph with degrees in {1, 2} has a single 1-2 edge.
    let scan = extremal_scan(7, true, 0).unwrap();
    for s in scan.iter().filter(|s| (s.d, s.big_d) == (1, 2)) {
        assert_eq!(s.upper_equality_witnesses, 0, "n = {}", s.n);
    }
    let tight = scan
        .iter()
        .find(|s| (s.n, s.d, s.big_d) == (7, 1, 3))
        .unwrap();
    assert!(tight.upper_equality_witnesses > 0);
}
