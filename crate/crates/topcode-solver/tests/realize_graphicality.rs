//! realize must succeed exactly on graphical sequences, cross-checked
//! exhaustively against both the inequality test and brute-force graph
//! enumeration.

use topcode_degseq::DegreeSequence;
use topcode_graph::Graph;
use topcode_solver::realize;

/// All non-increasing sequences of the given length with entries <= hi.
fn all_sequences(len: usize, hi: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, len: usize, hi: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let ceiling = prefix.last().copied().unwrap_or(hi);
        for next in (0..=ceiling).rev() {
            prefix.push(next);
            extend(prefix, len, hi, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), len, hi, &mut out);
    out
}

/// Degree sequences of every simple graph on n vertices, by edge mask.
fn realizable(n: usize) -> std::collections::HashSet<Vec<u32>> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut degrees = vec![0u32; n];
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                degrees[u] += 1;
                degrees[v] += 1;
            }
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        seen.insert(degrees);
    }
    seen
}

#[test]
fn realize_agrees_with_graphicality_everywhere() {
    for n in 0..=6 {
        let truth = realizable(n);
        for entries in all_sequences(n, n.max(1) as u32 - 1) {
            let d = DegreeSequence::new(entries.clone());
            let expected = truth.contains(d.entries());
            assert_eq!(
                d.is_graphical(),
                expected,
                "graphicality mismatch on {entries:?}"
            );
            match realize(&d) {
                Some(g) => {
                    assert!(expected, "realized a non-graphical sequence {entries:?}");
                    assert_eq!(g.degree_sequence(), d);
                    assert_eq!(g.p(), n);
                }
                None => assert!(!expected, "failed to realize {entries:?}"),
            }
        }
    }
}

#[test]
fn entries_beyond_the_vertex_count_never_realize() {
    let d = DegreeSequence::new(vec![5, 1, 1, 1]);
    assert!(!d.is_graphical());
    assert!(realize(&d).is_none());
}

#[test]
fn realized_graphs_preserve_connectivity_when_forced() {
    // (2,2,2) only realizes as a triangle
    let g = realize(&DegreeSequence::new(vec![2, 2, 2])).unwrap();
    assert!(topcode_graph::is_isomorphic(&g, &Graph::cycle(3)).unwrap());
}
