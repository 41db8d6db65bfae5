//! Worked examples kept stable across the workspace: a nine-edge tree whose
//! total labeling has column sums 26, and a seven-edge odd-graceful graph.

use topcode_labelings::{magic_profile, verify, Labeling, VerifierSpec};

/// The nine-edge tree, loaded from its text form.
fn nine_edge_tree() -> topcode_graph::Graph {
    "3 8\n2 9\n3 7\n0 9\n2 6\n1 7\n1 6\n0 5\n0 4".parse().unwrap()
}

fn nine_edge_labeling() -> Labeling {
    Labeling::total(
        vec![1, 1, 5, 7, 8, 10, 12, 14, 18, 18],
        vec![1, 3, 5, 7, 9, 11, 13, 15, 17],
    )
}

#[test]
fn nine_edge_tree_has_magic_sum_26() {
    let g = nine_edge_tree();
    assert_eq!(g.p(), 10);
    assert_eq!(g.q(), 9);
    assert!(g.is_connected());
    assert_eq!(g.q(), g.p() - 1);
    let report = verify(&g, &nine_edge_labeling(), &VerifierSpec::EdgeMagicTotal).unwrap();
    assert!(report.pass, "{:?}", report.failures);
    assert_eq!(report.derived_constant, Some(26));
}

#[test]
fn nine_edge_tree_profile_only_sums() {
    let profile = magic_profile(&nine_edge_tree(), &nine_edge_labeling()).unwrap();
    assert_eq!(profile.sum, Some(26));
    assert_eq!(profile.edge_difference, None);
    assert_eq!(profile.felicitous_difference, None);
    assert_eq!(profile.graceful_difference, None);
}

#[test]
fn nine_edge_tree_is_not_super() {
    // vertex colors repeat (two 1s, two 18s), so the super form fails
    let g = nine_edge_tree();
    let report =
        verify(&g, &nine_edge_labeling(), &VerifierSpec::SuperEdgeMagicTotal).unwrap();
    assert!(!report.pass);
}

#[test]
fn seven_edge_graph_is_odd_graceful() {
    let g = topcode_graph::Graph::new(
        7,
        vec![(0, 4), (1, 0), (2, 5), (2, 1), (3, 4), (3, 6), (2, 6)],
    )
    .unwrap();
    let f = Labeling::vertex_only(vec![10, 7, 0, 2, 11, 5, 13]);
    let report = verify(&g, &f, &VerifierSpec::OddGraceful).unwrap();
    assert!(report.pass, "{:?}", report.failures);
}
