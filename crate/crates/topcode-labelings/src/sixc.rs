//! The six-condition check for total labelings on bipartite graphs.

use crate::{kinds, Color, Labeling, LabelingError};
use serde::{Deserialize, Serialize};
use topcode_graph::Graph;

/// How many edges the pairing searches in conditions (ii), (iii) and (v)
/// will take on.
const MAX_EDGES: usize = 12;

/// One flag per condition, plus the constants recovered along the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SixCReport {
    pub e_magic: bool,
    pub ee_difference: bool,
    pub ee_balanced: bool,
    pub ev_ordered: bool,
    pub ve_matching: bool,
    pub set_ordered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_magic_constant: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ee_balanced_constant: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ve_matching_constant: Option<i64>,
}

impl SixCReport {
    pub fn pass(&self) -> bool {
        self.e_magic
            && self.ee_difference
            && self.ee_balanced
            && self.ev_ordered
            && self.ve_matching
            && self.set_ordered
    }
}

/// Runs all six conditions on a total labeling that is a bijection onto
/// [1, p+q] over a bipartite graph.
pub fn verify_6c(g: &Graph, f: &Labeling) -> Result<SixCReport, LabelingError> {
    f.check_shape(g)?;
    if g.bipartition().is_none() {
        return Err(LabelingError::NotBipartite);
    }
    let edge_colors = f.edge_colors().ok_or(LabelingError::MissingEdgeColors)?;
    let total = g.p() + g.q();
    let mut all: Vec<Color> = f.vertex_colors().to_vec();
    all.extend(edge_colors);
    all.sort_unstable();
    if all != (1..=total as Color).collect::<Vec<_>>() {
        return Err(LabelingError::NotABijection(total));
    }
    if g.q() > MAX_EDGES {
        return Err(LabelingError::TooManyEdges(g.q(), MAX_EDGES));
    }

    let vertex_values: Vec<i64> = f.vertex_colors().iter().map(|&c| c as i64).collect();
    let edge_values: Vec<i64> = edge_colors.iter().map(|&c| c as i64).collect();
    let differences: Vec<i64> = g
        .edges()
        .iter()
        .map(|&(u, v)| (vertex_values[u] - vertex_values[v]).abs())
        .collect();
    let modulus = 2 * total as i64;

    let (e_magic, e_magic_constant) = e_magic(&edge_values, &differences);
    let ee_difference = pairing_exists(edge_values.len(), &|i, j| {
        let forward = edge_values[i] == differences[j] || edge_values[i] == modulus - differences[j];
        let backward =
            edge_values[j] == differences[i] || edge_values[j] == modulus - differences[i];
        forward && backward
    });
    let balance: Vec<i64> =
        differences.iter().zip(&edge_values).map(|(&d, &e)| d - e).collect();
    let (ee_balanced, ee_balanced_constant) = balanced_pairing(&balance, modulus);
    let ev_ordered = ev_ordered(&vertex_values, &edge_values);
    let (ve_matching, ve_matching_constant) =
        ve_matching(&vertex_values, &edge_values, total as i64);
    let set_ordered = kinds::set_ordered_violation(g, f.vertex_colors()).is_none();

    Ok(SixCReport {
        e_magic,
        ee_difference,
        ee_balanced,
        ev_ordered,
        ve_matching,
        set_ordered,
        e_magic_constant,
        ee_balanced_constant,
        ve_matching_constant,
    })
}

/// Condition (i): f(uv) + |f(u)-f(v)| takes one constant value.
fn e_magic(edge_values: &[i64], differences: &[i64]) -> (bool, Option<i64>) {
    let mut constant = None;
    for (&e, &d) in edge_values.iter().zip(differences) {
        let value = e + d;
        match constant {
            None => constant = Some(value),
            Some(c) if c != value => return (false, None),
            Some(_) => {}
        }
    }
    (true, constant)
}

/// Looks for a perfect pairing of 0..n under a symmetric compatibility
/// relation.
fn pairing_exists(n: usize, compatible: &dyn Fn(usize, usize) -> bool) -> bool {
    if n % 2 != 0 {
        return false;
    }
    fn search(paired: &mut [bool], compatible: &dyn Fn(usize, usize) -> bool) -> bool {
        let Some(first) = paired.iter().position(|&used| !used) else {
            return true;
        };
        paired[first] = true;
        for partner in first + 1..paired.len() {
            if !paired[partner] && compatible(first, partner) {
                paired[partner] = true;
                if search(paired, compatible) {
                    return true;
                }
                paired[partner] = false;
            }
        }
        paired[first] = false;
        false
    }
    search(&mut vec![false; n], compatible)
}

/// Condition (iii): a pairing where every pair's balance values sum to k',
/// possibly shifted by 2(p+q); the first pair fixes k'.
fn balanced_pairing(balance: &[i64], modulus: i64) -> (bool, Option<i64>) {
    if balance.is_empty() {
        return (true, None);
    }
    if balance.len() % 2 != 0 {
        return (false, None);
    }
    for partner in 1..balance.len() {
        let base = balance[0] + balance[partner];
        for constant in [base, base + modulus] {
            let compatible = |i: usize, j: usize| {
                let s = balance[i] + balance[j];
                s == constant || s + modulus == constant
            };
            if pairing_exists(balance.len(), &compatible) {
                return (true, Some(constant));
            }
        }
    }
    (false, None)
}

/// Condition (iv): one of the five listed orderings of vertex against edge
/// colors.
fn ev_ordered(vertex_values: &[i64], edge_values: &[i64]) -> bool {
    if vertex_values.is_empty() || edge_values.is_empty() {
        return true;
    }
    let v_min = *vertex_values.iter().min().unwrap();
    let v_max = *vertex_values.iter().max().unwrap();
    let e_min = *edge_values.iter().min().unwrap();
    let e_max = *edge_values.iter().max().unwrap();
    let subset = |xs: &[i64], ys: &[i64]| xs.iter().all(|x| ys.contains(x));
    v_min > e_max
        || v_max < e_min
        || subset(vertex_values, edge_values)
        || subset(edge_values, vertex_values)
        || (vertex_values.iter().all(|v| v % 2 == 1) && edge_values.iter().all(|e| e % 2 == 0))
}

/// Condition (v): edges and vertices pair off with a constant color sum; when
/// the sides differ by one, the element colored floor((p+q+1)/2) on the larger
/// side sits out.
fn ve_matching(vertex_values: &[i64], edge_values: &[i64], total: i64) -> (bool, Option<i64>) {
    let mut vertices = vertex_values.to_vec();
    let mut edges = edge_values.to_vec();
    let p = vertices.len();
    let q = edges.len();
    if p.abs_diff(q) > 1 {
        return (false, None);
    }
    if p != q {
        let singularity = (total + 1) / 2;
        let larger = if p > q { &mut vertices } else { &mut edges };
        let Some(position) = larger.iter().position(|&c| c == singularity) else {
            return (false, None);
        };
        larger.swap_remove(position);
    }
    if edges.is_empty() {
        return (true, None);
    }
    // colors are distinct, so a fixed constant forces the whole matching
    vertices.sort_unstable();
    for &w in &vertices {
        let constant = edges[0] + w;
        let image: Vec<i64> = {
            let mut image: Vec<i64> = edges.iter().map(|&e| constant - e).collect();
            image.sort_unstable();
            image
        };
        if image == vertices {
            return (true, Some(constant));
        }
    }
    (false, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::path(3)
    }

    #[test]
    fn the_three_five_four_witness_meets_all_six() {
        let f = Labeling::total(vec![3, 5, 4], vec![1, 2]);
        let report = verify_6c(&p3(), &f).unwrap();
        assert!(report.pass(), "{report:?}");
        assert_eq!(report.e_magic_constant, Some(3));
        assert_eq!(report.ee_balanced_constant, Some(0));
        assert_eq!(report.ve_matching_constant, Some(6));
    }

    #[test]
    fn ordering_and_matching_can_fail_alone() {
        // vertices (1,5,2), edges (3,4): e-magic with k=7 but the vertex and
        // edge colors interleave and the singularity 3 is on an edge
        let f = Labeling::total(vec![1, 5, 2], vec![3, 4]);
        let report = verify_6c(&p3(), &f).unwrap();
        assert!(report.e_magic);
        assert_eq!(report.e_magic_constant, Some(7));
        assert!(report.ee_difference);
        assert!(report.ee_balanced);
        assert!(!report.ev_ordered);
        assert!(!report.ve_matching);
        assert!(report.set_ordered);
        assert!(!report.pass());
    }

    #[test]
    fn non_bijections_are_rejected() {
        let f = Labeling::total(vec![3, 5, 3], vec![1, 2]);
        assert!(matches!(verify_6c(&p3(), &f), Err(LabelingError::NotABijection(5))));
        let vertex_only = Labeling::vertex_only(vec![3, 5, 4]);
        assert!(matches!(verify_6c(&p3(), &vertex_only), Err(LabelingError::MissingEdgeColors)));
    }

    #[test]
    fn odd_cycles_are_rejected() {
        let f = Labeling::total(vec![1, 2, 3], vec![4, 5, 6]);
        assert!(matches!(verify_6c(&Graph::cycle(3), &f), Err(LabelingError::NotBipartite)));
    }

    #[test]
    fn large_graphs_are_capped() {
        let star = Graph::star(13);
        let f = Labeling::total((1..=14).collect(), (15..=27).collect());
        assert!(matches!(verify_6c(&star, &f), Err(LabelingError::TooManyEdges(13, 12))));
    }

    #[test]
    fn odd_edge_counts_cannot_pair() {
        // K1,3: vertices 1,5,6,7, edges 2,3,4: three edges cannot pair up
        let star = Graph::star(3);
        let f = Labeling::total(vec![1, 5, 6, 7], vec![4, 3, 2]);
        let report = verify_6c(&star, &f).unwrap();
        assert!(!report.ee_difference);
        assert!(!report.ee_balanced);
    }
}
