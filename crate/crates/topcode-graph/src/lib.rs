//! Simple undirected graphs with an ordered edge list.
//!
//! Vertices are `0..p`; edges keep the order in which they were loaded, and
//! every operation that rewrites a graph preserves the positions of surviving
//! edges and appends new ones at the end. Downstream encodings depend on that
//! stability, so it is part of the contract, not an implementation detail.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use topcode_degseq::DegreeSequence;

mod iso;
mod ops;
mod text;
mod trees;

pub use iso::is_isomorphic;
pub use trees::nonisomorphic_trees;

/// An edge as an (endpoint, endpoint) pair, kept in the orientation it was
/// created with.
pub type Edge = (usize, usize);

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("edge index {0} out of range for {1} edges")]
    EdgeOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("expected {expected} names for {expected} vertices, got {got}")]
    WrongNameCount { expected: usize, got: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {0} has degree {1}, need at least 2 to split")]
    DegreeTooSmall(usize, usize),
    #[error("invalid neighbor subset: {0}")]
    InvalidPart(String),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentVertices(usize, usize),
    #[error("vertices {0} and {1} share the neighbor {2}")]
    CommonNeighbor(usize, usize, usize),
    #[error("edge {0}-{1} has no leaf endpoint")]
    NotALeafEdge(usize, usize),
    #[error("the two edges must have four distinct endpoints")]
    EndpointsNotDistinct,
    #[error("{0} vertices exceeds the supported limit of {1}")]
    TooLarge(usize, usize),
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    p: usize,
    edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        let g = Graph::new(raw.p, raw.edges)?;
        match raw.names {
            Some(names) => g.with_names(names),
            None => Ok(g),
        }
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> RawGraph {
        RawGraph { p: g.p, edges: g.edges, names: g.names }
    }
}

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    p: usize,
    edges: Vec<Edge>,
    names: Option<Vec<String>>,
}

/// The two sides of a bipartite graph, each sorted ascending. Within every
/// connected component the side holding the component's smallest vertex index
/// goes to `x`, so the split is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Graph {
    pub fn new(p: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= p {
                return Err(GraphError::VertexOutOfRange(u, p));
            }
            if v >= p {
                return Err(GraphError::VertexOutOfRange(v, p));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Ok(Graph { p, edges, names: None })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GraphError> {
        if names.len() != self.p {
            return Err(GraphError::WrongNameCount { expected: self.p, got: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    /// Path on n vertices: 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v)).collect()).expect("paths are simple")
    }

    /// Cycle on n >= 3 vertices: 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<Edge> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, edges).expect("cycles are simple")
    }

    /// Star with center 0 and n leaves.
    pub fn star(n: usize) -> Self {
        Graph::new(n + 1, (1..=n).map(|v| (0, v)).collect()).expect("stars are simple")
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, edges).expect("complete graphs are simple")
    }

    /// Caterpillar: a spine path with `leaf_counts[i]` pendant leaves at spine
    /// vertex i. Spine vertices come first, leaves follow in spine order.
    pub fn caterpillar(leaf_counts: &[usize]) -> Self {
        let spine = leaf_counts.len();
        assert!(spine >= 1, "a caterpillar needs a spine vertex");
        let mut edges: Vec<Edge> = (1..spine).map(|v| (v - 1, v)).collect();
        let mut next = spine;
        for (at, &count) in leaf_counts.iter().enumerate() {
            for _ in 0..count {
                edges.push((at, next));
                next += 1;
            }
        }
        Graph::new(next, edges).expect("caterpillars are simple")
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<Edge, GraphError> {
        self.edges
            .get(index)
            .copied()
            .ok_or(GraphError::EdgeOutOfRange(index, self.edges.len()))
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.iter().position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.p];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbors of v, sorted ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees().iter().map(|&d| d as u32))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adjacency = self.adjacency();
        let mut seen = vec![false; self.p];
        let mut out = Vec::new();
        for root in 0..self.p {
            if seen[root] {
                continue;
            }
            let mut stack = vec![root];
            let mut component = Vec::new();
            seen[root] = true;
            while let Some(v) = stack.pop() {
                component.push(v);
                for &w in &adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            out.push(component);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The canonical bipartition if the graph is 2-colorable, else `None`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adjacency = self.adjacency();
        let mut side = vec![None; self.p];
        for root in 0..self.p {
            if side[root].is_some() {
                continue;
            }
            // root is the smallest index of its component, so its side is X
            side[root] = Some(false);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let color = side[v].expect("stacked vertices are colored");
                for &w in &adjacency[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!color);
                            stack.push(w);
                        }
                        Some(c) if c == color => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut x = Vec::new();
        let mut y = Vec::new();
        for (v, s) in side.iter().enumerate() {
            match s {
                Some(false) => x.push(v),
                Some(true) => y.push(v),
                None => unreachable!("every vertex is colored"),
            }
        }
        Some(Bipartition { x, y })
    }

    /// Disjoint union; the i-th returned offset is the index shift applied to
    /// `parts[i]`.
    pub fn disjoint_union(parts: &[Graph]) -> (Graph, Vec<usize>) {
        let mut offsets = Vec::with_capacity(parts.len());
        let mut p = 0;
        let mut edges = Vec::new();
        for part in parts {
            offsets.push(p);
            edges.extend(part.edges.iter().map(|&(u, v)| (u + p, v + p)));
            p += part.p;
        }
        let g = Graph::new(p, edges).expect("disjoint copies of simple graphs stay simple");
        (g, offsets)
    }

    /// Appends extra edges after the existing ones.
    pub fn add_edges(&self, extra: &[Edge]) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(extra);
        let g = Graph::new(self.p, edges)?;
        match &self.names {
            Some(names) => g.with_names(names.clone()),
            None => Ok(g),
        }
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.p];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        adjacency
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_degenerate_edges() {
        assert!(Graph::new(3, vec![(0, 1), (1, 2)]).is_ok());
        assert_eq!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
        assert_eq!(Graph::new(2, vec![(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
    }

    #[test]
    fn degree_sequences_of_standard_graphs() {
        assert_eq!(Graph::star(3).degree_sequence(), DegreeSequence::new([3, 1, 1, 1]));
        assert_eq!(Graph::cycle(4).degree_sequence(), DegreeSequence::new([2, 2, 2, 2]));
        assert_eq!(Graph::path(4).degree_sequence().sum(), 2 * 3);
    }

    #[test]
    fn caterpillar_layout() {
        let g = Graph::caterpillar(&[2, 0, 1]);
        assert_eq!((g.p(), g.q()), (6, 5));
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 3), (0, 4), (2, 5)]);
        assert!(g.is_connected());
        // a bare spine degenerates to a path, a single spine vertex to a star
        assert!(is_isomorphic(&Graph::caterpillar(&[0, 0, 0]), &Graph::path(3)).unwrap());
        assert!(is_isomorphic(&Graph::caterpillar(&[4]), &Graph::star(4)).unwrap());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::new(5, vec![(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert!(Graph::path(5).is_connected());
        assert!(Graph::new(0, vec![]).unwrap().is_connected());
    }

    #[test]
    fn bipartition_of_even_structures() {
        let b = Graph::cycle(4).bipartition().unwrap();
        assert_eq!(b.x, vec![0, 2]);
        assert_eq!(b.y, vec![1, 3]);

        let b = Graph::path(4).bipartition().unwrap();
        assert_eq!(b.x, vec![0, 2]);
        assert_eq!(b.y, vec![1, 3]);

        assert!(Graph::cycle(3).bipartition().is_none());
        assert!(Graph::cycle(5).bipartition().is_none());
    }

    #[test]
    fn bipartition_prefers_smallest_index_per_component() {
        // second component {2,3}: 2 is its smallest index, so 2 is in X
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let b = g.bipartition().unwrap();
        assert_eq!(b.x, vec![0, 2]);
        assert_eq!(b.y, vec![1, 3]);
        // isolated vertices land in X
        let g = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(g.bipartition().unwrap().x, vec![0, 2]);
    }

    #[test]
    fn union_records_offsets() {
        let (g, offsets) = Graph::disjoint_union(&[Graph::path(2), Graph::path(2)]);
        assert_eq!((g.p(), g.q()), (4, 2));
        assert_eq!(offsets, vec![0, 2]);
        assert_eq!(g.edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn union_plus_bridge_is_a_tree() {
        let (g, offsets) = Graph::disjoint_union(&[Graph::path(3), Graph::path(2)]);
        let bridged = g.add_edges(&[(2, offsets[1])]).unwrap();
        assert_eq!((bridged.p(), bridged.q()), (5, 4));
        assert!(bridged.is_connected());
    }

    #[test]
    fn add_edges_rejects_duplicates() {
        let g = Graph::path(3);
        assert_eq!(
            g.add_edges(&[(1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::path(3).with_names(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"p":3,"edges":[[0,1],[1,2]],"names":["a","b","c"]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        // validation also runs on deserialization
        assert!(serde_json::from_str::<Graph>(r#"{"p":2,"edges":[[0,0]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"p":2,"edges":[[0,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn neighbors_are_sorted() {
        let g = Graph::new(4, vec![(2, 0), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), vec![1, 2, 3]);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.edge_index(3, 0), Some(1));
        assert!(g.has_edge(0, 2));
        assert!(!g.has_edge(1, 2));
    }
}
