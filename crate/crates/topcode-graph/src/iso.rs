//! Brute-force isomorphism testing for small graphs.

use crate::{Graph, GraphError};

const MAX_VERTICES: usize = 8;

/// Tests whether two graphs are isomorphic by searching for a degree-
/// respecting vertex bijection. Only intended for graphs with at most 8
/// vertices; larger inputs are refused.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    let p = a.p();
    if p > MAX_VERTICES || b.p() > MAX_VERTICES {
        return Err(GraphError::TooLarge(p.max(b.p()), MAX_VERTICES));
    }
    if p != b.p() || a.q() != b.q() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    let adj_a = adjacency_matrix(a);
    let adj_b = adjacency_matrix(b);
    let deg_a = a.degrees();
    let deg_b = b.degrees();
    let mut image = vec![usize::MAX; p];
    let mut used = vec![false; p];
    Ok(extend(0, &mut image, &mut used, &adj_a, &adj_b, &deg_a, &deg_b))
}

fn extend(
    v: usize,
    image: &mut [usize],
    used: &mut [bool],
    adj_a: &[Vec<bool>],
    adj_b: &[Vec<bool>],
    deg_a: &[usize],
    deg_b: &[usize],
) -> bool {
    let p = image.len();
    if v == p {
        return true;
    }
    for w in 0..p {
        if used[w] || deg_a[v] != deg_b[w] {
            continue;
        }
        // adjacency to every already-mapped vertex must agree both ways
        if (0..v).all(|u| adj_a[v][u] == adj_b[w][image[u]]) {
            image[v] = w;
            used[w] = true;
            if extend(v + 1, image, used, adj_a, adj_b, deg_a, deg_b) {
                return true;
            }
            used[w] = false;
            image[v] = usize::MAX;
        }
    }
    false
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.p()]; g.p()];
    for &(u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}
