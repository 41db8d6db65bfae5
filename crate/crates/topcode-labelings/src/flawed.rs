//! Verifying a labeling of several parts joined into one connected graph.

use crate::{Labeling, LabelingError, VerifierSpec, VerifyReport};
use topcode_graph::{Edge, Graph};

/// Assembles the disjoint parts, adds the joining edges `estar` (written in
/// the index space of the assembled graph), and verifies the labeling on the
/// result. The assembled graph must come out connected.
pub fn verify_flawed(
    parts: &[Graph],
    estar: &[Edge],
    spec: &VerifierSpec,
    f: &Labeling,
) -> Result<VerifyReport, LabelingError> {
    let (union, _offsets) = Graph::disjoint_union(parts);
    let joined = union.add_edges(estar)?;
    if !joined.is_connected() {
        return Err(LabelingError::Disconnected);
    }
    crate::verify(&joined, f, spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_edges_and_a_bridge_form_a_graceful_path() {
        let parts = [Graph::path(2), Graph::path(2)];
        // bridge the second vertex of the first part to the first of the
        // second: 0-1-2-3 with colors (0,3,1,2) along the path
        let f = Labeling::vertex_only(vec![0, 3, 1, 2]);
        let report =
            verify_flawed(&parts, &[(1, 2)], &"graceful".parse().unwrap(), &f).unwrap();
        assert!(report.pass, "{:?}", report.failures);
    }

    #[test]
    fn missing_bridges_leave_the_parts_disconnected() {
        let parts = [Graph::path(2), Graph::path(2)];
        let f = Labeling::vertex_only(vec![0, 3, 1, 2]);
        assert!(matches!(
            verify_flawed(&parts, &[], &"graceful".parse().unwrap(), &f),
            Err(LabelingError::Disconnected)
        ));
    }

    #[test]
    fn bad_bridges_surface_graph_errors() {
        let parts = [Graph::path(2), Graph::path(2)];
        let f = Labeling::vertex_only(vec![0, 3, 1, 2]);
        assert!(verify_flawed(&parts, &[(1, 9)], &"graceful".parse().unwrap(), &f).is_err());
    }

    #[test]
    fn two_paths_with_a_bridge_stay_set_ordered() {
        // P3 + P2 joined into a path on five vertices: 0-1-2, 3-4, bridge 2-3
        let parts = [Graph::path(3), Graph::path(2)];
        let f = Labeling::vertex_only(vec![0, 4, 1, 3, 2]);
        let report = verify_flawed(
            &parts,
            &[(2, 3)],
            &"set-ordered-graceful".parse().unwrap(),
            &f,
        )
        .unwrap();
        assert!(report.pass, "{:?}", report.failures);
    }
}
