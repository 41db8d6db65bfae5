//! The six split/coincide operations.
//!
//! Conventions shared by all six: surviving edges keep their positions and
//! stored orientation, rewritten endpoints change in place, new edges are
//! appended, and removed vertices compact the index range (every index above
//! a removed one shifts down). Results carry no vertex names.

use crate::{Edge, Graph, GraphError};

impl Graph {
    /// Splits vertex `u` in two: `u` keeps its edges into `part`, a new
    /// vertex (index p) takes the rest. `part` must be a nonempty proper
    /// subset of the neighbors of `u`.
    pub fn vertex_split(&self, u: usize, part: &[usize]) -> Result<Graph, GraphError> {
        if u >= self.p {
            return Err(GraphError::VertexOutOfRange(u, self.p));
        }
        let neighbors = self.neighbors(u);
        if neighbors.len() < 2 {
            return Err(GraphError::DegreeTooSmall(u, neighbors.len()));
        }
        validate_subset(part, &neighbors)?;
        if part.is_empty() {
            return Err(GraphError::InvalidPart(
                "the subset must keep at least one neighbor at the split vertex".into(),
            ));
        }
        if part.len() == neighbors.len() {
            return Err(GraphError::InvalidPart(
                "the subset must leave at least one neighbor for the new vertex".into(),
            ));
        }
        let mut edges = self.edges.clone();
        for (a, b) in edges.iter_mut() {
            if *a == u && !part.contains(b) {
                *a = self.p;
            } else if *b == u && !part.contains(a) {
                *b = self.p;
            }
        }
        debug_assert!(edges.iter().any(|&(a, b)| a == self.p || b == self.p));
        Graph::new(self.p + 1, edges)
    }

    /// Merges vertex `v` into vertex `u`. The vertices must be distinct,
    /// non-adjacent and without common neighbors, so no loop or parallel edge
    /// can arise.
    pub fn vertex_coincide(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.p {
            return Err(GraphError::VertexOutOfRange(u, self.p));
        }
        if v >= self.p {
            return Err(GraphError::VertexOutOfRange(v, self.p));
        }
        if u == v {
            return Err(GraphError::InvalidPart("cannot coincide a vertex with itself".into()));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::AdjacentVertices(u, v));
        }
        if let Some(z) = first_common(&self.neighbors(u), &self.neighbors(v)) {
            return Err(GraphError::CommonNeighbor(u, v, z));
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (if a == v { u } else { a }, if b == v { u } else { b }))
            .collect();
        let (p, edges) = compact(self.p, edges, &[v]);
        Graph::new(p, edges)
    }

    /// Replaces the edge at `e` by two pendant edges: with (u,v) removed, a
    /// new leaf (index p) hangs from u and another (index p+1) from v.
    pub fn leaf_split(&self, e: usize) -> Result<Graph, GraphError> {
        let (u, v) = self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        edges.push((u, self.p));
        edges.push((v, self.p + 1));
        Graph::new(self.p + 2, edges)
    }

    /// Merges two pendant edges into one edge joining their supports. For an
    /// edge whose endpoints are both leaves, the second stored endpoint is
    /// taken as the leaf. The supports must be distinct, non-adjacent, and
    /// must not share a neighbor besides the removed leaves.
    pub fn leaf_coincide(&self, e1: usize, e2: usize) -> Result<Graph, GraphError> {
        if e1 == e2 {
            return Err(GraphError::EndpointsNotDistinct);
        }
        let (support1, leaf1) = self.split_leaf_edge(e1)?;
        let (support2, leaf2) = self.split_leaf_edge(e2)?;
        let ends = [support1, leaf1, support2, leaf2];
        if (1..4).any(|i| ends[..i].contains(&ends[i])) {
            return Err(GraphError::EndpointsNotDistinct);
        }
        if self.has_edge(support1, support2) {
            return Err(GraphError::AdjacentVertices(support1, support2));
        }
        let n1: Vec<usize> =
            self.neighbors(support1).into_iter().filter(|&z| z != leaf1).collect();
        let n2: Vec<usize> =
            self.neighbors(support2).into_iter().filter(|&z| z != leaf2).collect();
        if let Some(z) = first_common(&n1, &n2) {
            return Err(GraphError::CommonNeighbor(support1, support2, z));
        }
        let mut edges = self.edges.clone();
        edges[e1] = (support1, support2);
        edges.remove(e2);
        let (p, edges) = compact(self.p, edges, &[leaf1, leaf2]);
        Graph::new(p, edges)
    }

    /// Splits the edge at `e` into two: its first endpoint u keeps the edge
    /// and the neighbors in `part_u`, a new vertex (index p) takes u's other
    /// neighbors; likewise v keeps `part_v` and index p+1 takes the rest; the
    /// two new vertices are joined by an appended edge. u and v must have no
    /// common neighbor, otherwise the four neighbor blocks cannot be disjoint.
    pub fn edge_split(
        &self,
        e: usize,
        part_u: &[usize],
        part_v: &[usize],
    ) -> Result<Graph, GraphError> {
        let (u, v) = self.edge(e)?;
        let nu: Vec<usize> = self.neighbors(u).into_iter().filter(|&z| z != v).collect();
        let nv: Vec<usize> = self.neighbors(v).into_iter().filter(|&z| z != u).collect();
        if let Some(z) = first_common(&nu, &nv) {
            return Err(GraphError::CommonNeighbor(u, v, z));
        }
        validate_subset(part_u, &nu)?;
        validate_subset(part_v, &nv)?;
        let mut edges = self.edges.clone();
        for (index, (a, b)) in edges.iter_mut().enumerate() {
            if index == e {
                continue;
            }
            if *a == u && !part_u.contains(b) {
                *a = self.p;
            } else if *b == u && !part_u.contains(a) {
                *b = self.p;
            } else if *a == v && !part_v.contains(b) {
                *a = self.p + 1;
            } else if *b == v && !part_v.contains(a) {
                *b = self.p + 1;
            }
        }
        edges.push((self.p, self.p + 1));
        Graph::new(self.p + 2, edges)
    }

    /// Merges the edge at `e2` onto the edge at `e1`, first endpoint onto
    /// first endpoint and second onto second. The four endpoints must be
    /// distinct, the identified pairs non-adjacent, and neither identified
    /// pair may share a neighbor.
    pub fn edge_coincide(&self, e1: usize, e2: usize) -> Result<Graph, GraphError> {
        if e1 == e2 {
            return Err(GraphError::EndpointsNotDistinct);
        }
        let (a, b) = self.edge(e1)?;
        let (c, d) = self.edge(e2)?;
        let ends = [a, b, c, d];
        if (1..4).any(|i| ends[..i].contains(&ends[i])) {
            return Err(GraphError::EndpointsNotDistinct);
        }
        if self.has_edge(a, c) {
            return Err(GraphError::AdjacentVertices(a, c));
        }
        if self.has_edge(b, d) {
            return Err(GraphError::AdjacentVertices(b, d));
        }
        if let Some(z) = first_common(&self.neighbors(a), &self.neighbors(c)) {
            return Err(GraphError::CommonNeighbor(a, c, z));
        }
        if let Some(z) = first_common(&self.neighbors(b), &self.neighbors(d)) {
            return Err(GraphError::CommonNeighbor(b, d, z));
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|&(x, y)| {
                let map = |z: usize| {
                    if z == c {
                        a
                    } else if z == d {
                        b
                    } else {
                        z
                    }
                };
                (map(x), map(y))
            })
            .collect();
        edges.remove(e2);
        let (p, edges) = compact(self.p, edges, &[c, d]);
        Graph::new(p, edges)
    }

    /// Resolves the edge at `e` into (support, leaf); when both endpoints are
    /// leaves the stored second endpoint is the leaf.
    fn split_leaf_edge(&self, e: usize) -> Result<(usize, usize), GraphError> {
        let (a, b) = self.edge(e)?;
        if self.degree(b) == 1 {
            Ok((a, b))
        } else if self.degree(a) == 1 {
            Ok((b, a))
        } else {
            Err(GraphError::NotALeafEdge(a, b))
        }
    }
}

fn first_common(xs: &[usize], ys: &[usize]) -> Option<usize> {
    xs.iter().copied().find(|z| ys.contains(z))
}

// Empty subsets are legal here (edge splitting allows empty blocks); callers
// with stricter needs check separately.
fn validate_subset(part: &[usize], neighbors: &[usize]) -> Result<(), GraphError> {
    for (i, &z) in part.iter().enumerate() {
        if !neighbors.contains(&z) {
            return Err(GraphError::InvalidPart(format!("{z} is not an eligible neighbor")));
        }
        if part[..i].contains(&z) {
            return Err(GraphError::InvalidPart(format!("{z} appears twice in the subset")));
        }
    }
    Ok(())
}

/// Removes the listed vertices (which must be isolated by now) and shifts the
/// indices above them down.
fn compact(p: usize, edges: Vec<Edge>, removed: &[usize]) -> (usize, Vec<Edge>) {
    let mut map = vec![usize::MAX; p];
    let mut next = 0;
    for v in 0..p {
        if !removed.contains(&v) {
            map[v] = next;
            next += 1;
        }
    }
    let edges = edges
        .into_iter()
        .map(|(a, b)| {
            debug_assert!(map[a] != usize::MAX && map[b] != usize::MAX);
            (map[a], map[b])
        })
        .collect();
    (next, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        let mut set: Vec<_> =
            g.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        set.sort_unstable();
        set
    }

    #[test]
    fn vertex_split_star_center() {
        let got = Graph::star(3).vertex_split(0, &[1]).unwrap();
        assert_eq!((got.p(), got.q()), (5, 3));
        assert_eq!(got.edges(), &[(0, 1), (4, 2), (4, 3)]);
        assert_eq!(got.components().len(), 2);
    }

    #[test]
    fn vertex_split_path_middle_gives_two_edges() {
        let got = Graph::path(3).vertex_split(1, &[0]).unwrap();
        assert_eq!((got.p(), got.q()), (4, 2));
        assert_eq!(got.edges(), &[(0, 1), (3, 2)]);
    }

    #[test]
    fn vertex_split_cycle_gives_path() {
        // both split choices of a degree-2 cycle vertex open the cycle
        for part in [[1], [3]] {
            let got = Graph::cycle(4).vertex_split(0, &part).unwrap();
            assert_eq!((got.p(), got.q()), (5, 4));
            assert!(got.is_connected());
            assert_eq!(got.degrees().iter().filter(|&&d| d == 1).count(), 2);
        }
    }

    #[test]
    fn vertex_split_rejects_bad_input() {
        let star = Graph::star(3);
        assert!(matches!(star.vertex_split(1, &[0]), Err(GraphError::DegreeTooSmall(1, 1))));
        assert!(star.vertex_split(0, &[]).is_err());
        assert!(star.vertex_split(0, &[1, 2, 3]).is_err());
        assert!(star.vertex_split(0, &[4]).is_err());
    }

    #[test]
    fn vertex_coincide_two_edges_into_path() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let got = g.vertex_coincide(1, 2).unwrap();
        assert_eq!(got, Graph::path(3));
    }

    #[test]
    fn vertex_coincide_path_ends_into_cycle() {
        let got = Graph::path(5).vertex_coincide(0, 4).unwrap();
        assert_eq!(got, Graph::cycle(4));
    }

    #[test]
    fn vertex_coincide_rejects_adjacent_or_overlapping() {
        let p3 = Graph::path(3);
        assert_eq!(p3.vertex_coincide(0, 1), Err(GraphError::AdjacentVertices(0, 1)));
        assert_eq!(p3.vertex_coincide(0, 2), Err(GraphError::CommonNeighbor(0, 2, 1)));
        assert!(p3.vertex_coincide(1, 1).is_err());
    }

    #[test]
    fn leaf_split_k2_gives_two_disjoint_edges() {
        let got = Graph::path(2).leaf_split(0).unwrap();
        assert_eq!((got.p(), got.q()), (4, 2));
        assert_eq!(got.edges(), &[(0, 2), (1, 3)]);
    }

    #[test]
    fn leaf_split_counts() {
        let got = Graph::path(3).leaf_split(1).unwrap();
        assert_eq!((got.p(), got.q()), (5, 3));
        let got = Graph::cycle(3).leaf_split(0).unwrap();
        assert_eq!((got.p(), got.q()), (5, 4));
        assert!(got.is_connected());
        assert!(Graph::path(3).leaf_split(5).is_err());
    }

    #[test]
    fn leaf_coincide_two_stars() {
        let (g, _) = Graph::disjoint_union(&[Graph::star(2), Graph::star(2)]);
        let got = g.leaf_coincide(1, 2).unwrap();
        assert_eq!((got.p(), got.q()), (4, 3));
        // path 1-0-2-3 once the leaves vanish
        assert_eq!(got.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn leaf_coincide_inverts_leaf_split_on_k2() {
        let split = Graph::path(2).leaf_split(0).unwrap();
        let got = split.leaf_coincide(0, 1).unwrap();
        assert_eq!(got, Graph::path(2));
    }

    #[test]
    fn leaf_coincide_rejects_interior_edges() {
        let p4 = Graph::path(4);
        assert_eq!(p4.leaf_coincide(1, 0).err(), Some(GraphError::NotALeafEdge(1, 2)));
        // supports 1 and 2 of the two pendant edges are adjacent
        assert_eq!(p4.leaf_coincide(0, 2), Err(GraphError::AdjacentVertices(1, 2)));
    }

    #[test]
    fn edge_split_path_with_empty_blocks() {
        let got = Graph::path(3).edge_split(0, &[], &[]).unwrap();
        assert_eq!((got.p(), got.q()), (5, 3));
        assert_eq!(got.edges(), &[(0, 1), (4, 2), (3, 4)]);
        assert_eq!(got.components().len(), 2);
    }

    #[test]
    fn edge_split_cycle_gives_tree() {
        let got = Graph::cycle(4).edge_split(0, &[3], &[]).unwrap();
        assert_eq!((got.p(), got.q()), (6, 5));
        assert!(got.is_connected());
        assert!(got.bipartition().is_some());
        assert!(Graph::cycle(4).edge_split(9, &[], &[]).is_err());
    }

    #[test]
    fn edge_split_rejects_common_neighbors() {
        let triangle = Graph::cycle(3);
        assert_eq!(triangle.edge_split(0, &[], &[]), Err(GraphError::CommonNeighbor(0, 1, 2)));
    }

    #[test]
    fn edge_coincide_two_k2() {
        let (g, _) = Graph::disjoint_union(&[Graph::path(2), Graph::path(2)]);
        assert_eq!(g.edge_coincide(0, 1).unwrap(), Graph::path(2));
    }

    #[test]
    fn edge_coincide_two_triangles_share_an_edge() {
        let (g, _) = Graph::disjoint_union(&[Graph::cycle(3), Graph::cycle(3)]);
        let got = g.edge_coincide(0, 3).unwrap();
        assert_eq!((got.p(), got.q()), (4, 5));
        assert_eq!(edge_set(&got), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn edge_coincide_rejects_shared_or_linked_endpoints() {
        let p3 = Graph::path(3);
        assert_eq!(p3.edge_coincide(0, 1), Err(GraphError::EndpointsNotDistinct));
        // merging the outer edges of a path pulls both onto the shared middle
        let p4 = Graph::path(4);
        assert_eq!(p4.edge_coincide(0, 2), Err(GraphError::CommonNeighbor(0, 2, 1)));
        // adjacent identified endpoints would leave a self-loop
        let g = Graph::new(4, vec![(0, 1), (0, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_coincide(0, 2), Err(GraphError::AdjacentVertices(0, 2)));
    }

    #[test]
    fn coincide_undoes_split_exactly() {
        // vertex: splitting off a part and merging the new vertex back is the
        // identity on the edge list
        let g = Graph::new(5, vec![(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let split = g.vertex_split(0, &[1]).unwrap();
        assert_eq!(split.vertex_coincide(0, 5).unwrap(), g);

        // edge: the split edge keeps its position, so this also round-trips
        let split = g.edge_split(2, &[1], &[4]).unwrap();
        assert_eq!(split.edge_coincide(2, 4).unwrap(), g);
    }
}
