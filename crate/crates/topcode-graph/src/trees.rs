//! Exhaustive enumeration of non-isomorphic trees on few vertices.
//!
//! Every labeled tree on n vertices is decoded from its Prüfer sequence;
//! duplicates are filtered through a canonical form computed by rooting at
//! the tree's center(s) and interning sorted child codes, so each isomorphism
//! class survives exactly once. The n^(n-2) decode loop caps n at 9.

use crate::{Edge, Graph, GraphError};
use std::collections::{HashMap, HashSet};

const MAX_VERTICES: usize = 9;

/// Returns one representative per isomorphism class of trees on n vertices,
/// in first-discovered order (deterministic).
pub fn nonisomorphic_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n, MAX_VERTICES));
    }
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![Graph::new(1, vec![]).expect("single vertex")]),
        2 => return Ok(vec![Graph::path(2)]),
        _ => {}
    }
    let mut interner = Interner::default();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut sequence = vec![0usize; n - 2];
    loop {
        let edges = decode_pruefer(&sequence, n);
        let code = canonical_code(n, &edges, &mut interner);
        if seen.insert(code) {
            out.push(Graph::new(n, edges).expect("decoded trees are simple"));
        }
        // advance the base-n counter
        let mut position = 0;
        loop {
            if position == sequence.len() {
                return Ok(out);
            }
            sequence[position] += 1;
            if sequence[position] < n {
                break;
            }
            sequence[position] = 0;
            position += 1;
        }
    }
}

/// Standard Prüfer decoding: join each sequence element to the smallest
/// current leaf, then join the last two remaining vertices.
fn decode_pruefer(sequence: &[usize], n: usize) -> Vec<Edge> {
    let mut degree = vec![1usize; n];
    for &s in sequence {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let u = last.next().expect("two vertices remain");
    let v = last.next().expect("two vertices remain");
    edges.push((u, v));
    edges
}

/// Interns rooted-tree shapes: a node's code is determined by the sorted
/// codes of its children, so equal codes mean isomorphic rooted trees. The
/// table is shared across all decoded trees, keeping comparisons O(1).
#[derive(Default)]
struct Interner {
    table: HashMap<Vec<u32>, u32>,
}

impl Interner {
    fn intern(&mut self, mut child_codes: Vec<u32>) -> u32 {
        child_codes.sort_unstable();
        let next = self.table.len() as u32;
        *self.table.entry(child_codes).or_insert(next)
    }
}

/// Free-tree canonical code: the smaller of the rooted codes taken at the
/// tree's one or two centers.
fn canonical_code(n: usize, edges: &[Edge], interner: &mut Interner) -> u32 {
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    centers(n, &adjacency)
        .into_iter()
        .map(|root| encode(root, usize::MAX, &adjacency, interner))
        .min()
        .expect("every tree has a center")
}

fn encode(v: usize, parent: usize, adjacency: &[Vec<usize>], interner: &mut Interner) -> u32 {
    let child_codes = adjacency[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(w, v, adjacency, interner))
        .collect();
    interner.intern(child_codes)
}

/// The one or two middle vertices found by repeatedly peeling leaves.
fn centers(n: usize, adjacency: &[Vec<usize>]) -> Vec<usize> {
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut alive = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while alive > 2 {
        let mut next = Vec::new();
        for &leaf in &frontier {
            degree[leaf] = 0;
            alive -= 1;
            for &w in &adjacency[leaf] {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    (0..n).filter(|&v| degree[v] >= 1).collect()
}
