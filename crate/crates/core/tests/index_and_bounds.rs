use proptest::prelude::*;

use randic::{
    baseline_bound, decomposition_identity, enumerate_graphs, identity_residual, lower_bound,
    randic_caporossi, randic_direct, separation_gap, separation_gap_product, upper_bound,
    Constraints, Graph,
};

fn no_isolated() -> Constraints {
    Constraints {
        connected: false,
        min_degree: Some(1),
        max_degree: None,
    }
}

#[test]
fn identity_exhaustive_to_six() {
    for n in 2..=6 {
        for g in enumerate_graphs(n, no_isolated()).unwrap() {
            assert!(identity_residual(&g).unwrap() <= 1e-12);
        }
    }
}

#[test]
fn regular_graphs_have_half_order() {
    for n in 2..=7 {
        for r in 1..n {
            let c = Constraints {
                connected: false,
                min_degree: Some(r),
                max_degree: Some(r),
            };
            for g in enumerate_graphs(n, c).unwrap() {
                let value = randic_direct(&g).unwrap().value;
                assert!((value - n as f64 / 2.0).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn decomposition_exhaustive_to_six() {
    for n in 3..=6 {
        for g in enumerate_graphs(n, no_isolated()).unwrap() {
            match decomposition_identity(&g) {
                Ok(check) => assert!(check.holds(1e-12), "{check:?}"),
                Err(_) => assert_eq!(g.min_degree(), g.max_degree()),
            }
        }
    }
}

#[test]
fn identities_on_larger_graphs() {
    let big = [
        Graph::star(62),
        Graph::complete(62),
        Graph::path(62),
        Graph::complete_bipartite(20, 42),
    ];
    for g in &big {
        assert!(identity_residual(g).unwrap() <= 1e-12);
        let direct = randic_direct(g).unwrap();
        assert!((direct.value - direct.value_from_pairs()).abs() <= 1e-12);
        assert!((direct.value - randic_caporossi(g).unwrap()).abs() <= 1e-12);
    }
}

#[test]
fn lower_bound_dominates_baseline_on_grid() {
    for big_d in 2..=20 {
        for d in 1..big_d {
            for n in 2..=100 {
                assert!(lower_bound(n, d, big_d).unwrap() >= baseline_bound(n, d, big_d).unwrap());
            }
        }
    }
}

#[test]
fn bounds_reject_regular_parameters() {
    assert!(lower_bound(5, 2, 2).is_err());
    assert!(upper_bound(5, 2, 2).is_err());
    assert!(upper_bound(5, 0, 2).is_err());
}

proptest! {
    #[test]
    fn separation_gap_positive_and_factored(
        x in 1.0f64..100.0,
        dy in 1e-3f64..50.0,
        dz in 1e-3f64..50.0,
    ) {
        let (y, z) = (x + dy, x + dy + dz);
        let gap = separation_gap(x, y, z).unwrap();
        prop_assert!(gap > 0.0);
        prop_assert!((gap - separation_gap_product(x, y, z)).abs() <= 1e-12);
    }

    #[test]
    fn upper_bound_at_most_half_order(n in 2usize..200, d in 1usize..30, gap in 1usize..30) {
        let u = upper_bound(n, d, d + gap).unwrap();
        prop_assert!(u < n as f64 / 2.0);
        prop_assert!(lower_bound(n, d, d + gap).unwrap() < n as f64 / 2.0);
    }
}
