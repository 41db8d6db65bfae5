//! The sorted view of a set-ordered graceful labeling that the constructive
//! transforms share: which vertices make up the low side X and the high side
//! Y, each ascending by color, and the edges ascending by induced color.

use crate::TransformError;
use topcode_graph::Graph;
use topcode_labelings::{verify, Color, Labeling, VerifierSpec};

pub(crate) struct SetOrderedForm {
    /// Low-side vertices ascending by color.
    pub x: Vec<usize>,
    /// High-side vertices ascending by color.
    pub y: Vec<usize>,
    /// Edge indices ascending by induced absolute difference.
    pub edge_order: Vec<usize>,
}

/// Confirms that `f` is a set-ordered graceful labeling of the connected
/// graph `g` and returns its sorted structure, orienting X as the side with
/// the smaller colors.
pub(crate) fn set_ordered_form(g: &Graph, f: &Labeling) -> Result<SetOrderedForm, TransformError> {
    if !g.is_connected() {
        return Err(TransformError::NotConnected);
    }
    let report = verify(g, f, &VerifierSpec::SetOrderedGraceful)?;
    if !report.pass {
        let conditions: Vec<&str> =
            report.failures.iter().map(|w| w.condition.as_str()).collect();
        return Err(TransformError::NotSetOrdered(conditions.join(", ")));
    }
    let sides = g.bipartition().expect("set-ordered graceful implies bipartite");
    let colors = f.vertex_colors();
    let (mut x, mut y) = (sides.x, sides.y);
    if !x.is_empty() && !y.is_empty() {
        let max_x = x.iter().map(|&v| colors[v]).max().expect("nonempty");
        let min_y = y.iter().map(|&v| colors[v]).min().expect("nonempty");
        if max_x > min_y {
            std::mem::swap(&mut x, &mut y);
        }
    }
    x.sort_by_key(|&v| colors[v]);
    y.sort_by_key(|&v| colors[v]);
    let mut edge_order: Vec<usize> = (0..g.q()).collect();
    edge_order.sort_by_key(|&e| {
        let (u, v) = g.edges()[e];
        colors[u].abs_diff(colors[v])
    });
    Ok(SetOrderedForm { x, y, edge_order })
}

/// The canonical coordinates the family constructions assume: the i-th X
/// vertex holds color i-1 and the j-th Y vertex holds color s-1+j, so the
/// colors are exactly 0..=q. A labeling already of that shape passes through
/// unchanged; anything else is relabeled by rank within each side and
/// re-checked, which can only succeed on trees (a connected graph with fewer
/// vertices than q+1 cannot reach the edge color q with ranked colors).
pub(crate) fn canonical_form(
    g: &Graph,
    f: &Labeling,
) -> Result<(Labeling, SetOrderedForm), TransformError> {
    let form = set_ordered_form(g, f)?;
    let s = form.x.len() as Color;
    let mut ranked = f.vertex_colors().to_vec();
    for (i, &v) in form.x.iter().enumerate() {
        ranked[v] = i as Color;
    }
    for (j, &v) in form.y.iter().enumerate() {
        ranked[v] = s + j as Color;
    }
    if ranked == f.vertex_colors() {
        return Ok((Labeling::vertex_only(ranked), form));
    }
    let relabeled = Labeling::vertex_only(ranked);
    match set_ordered_form(g, &relabeled) {
        Ok(form) => Ok((relabeled, form)),
        Err(_) => Err(TransformError::NotCanonical(
            "relabeling each side by rank does not stay graceful".to_string(),
        )),
    }
}
