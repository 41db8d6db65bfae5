//! Greedy construction of a graph with a prescribed degree sequence.

use topcode_degseq::DegreeSequence;
use topcode_graph::Graph;

/// Builds a simple graph whose degree sequence matches `d`, or nothing when
/// no such graph exists. Vertex i receives the i-th entry of the sorted
/// sequence. Greedy highest-degree-first; ties broken by lowest index.
pub fn realize(d: &DegreeSequence) -> Option<Graph> {
    let n = d.len();
    let mut remaining: Vec<(u32, usize)> =
        d.entries().iter().enumerate().map(|(index, &degree)| (degree, index)).collect();
    let mut edges = Vec::new();
    while !remaining.is_empty() {
        // highest remaining degree, ties by index
        remaining.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (degree, vertex) = remaining[0];
        if degree == 0 {
            break;
        }
        if (degree as usize) >= remaining.len() {
            return None;
        }
        for partner in 1..=degree as usize {
            if remaining[partner].0 == 0 {
                return None;
            }
            remaining[partner].0 -= 1;
            edges.push((vertex, remaining[partner].1));
        }
        remaining[0].0 = 0;
    }
    let g = Graph::new(n, edges).ok()?;
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[u32]) -> DegreeSequence {
        DegreeSequence::new(entries.to_vec())
    }

    #[test]
    fn star_sequence_realizes_as_a_star() {
        let g = realize(&seq(&[3, 1, 1, 1])).unwrap();
        assert_eq!(g.p(), 4);
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn two_vertices_cannot_both_have_degree_three() {
        assert!(realize(&seq(&[3, 3])).is_none());
    }

    #[test]
    fn ten_vertex_sequence_from_a_worked_figure() {
        let d = seq(&[4, 2, 2, 2, 2, 2, 1, 1, 1, 1]);
        let g = realize(&d).unwrap();
        assert_eq!(g.degree_sequence(), d);
    }

    #[test]
    fn empty_and_isolated_sequences() {
        let g = realize(&seq(&[])).unwrap();
        assert_eq!(g.p(), 0);
        let g = realize(&seq(&[0, 0])).unwrap();
        assert_eq!(g.p(), 2);
        assert_eq!(g.q(), 0);
    }

    #[test]
    fn odd_sum_is_refused() {
        assert!(realize(&seq(&[2, 1])).is_none());
    }
}
