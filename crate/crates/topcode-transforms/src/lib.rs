//! Deterministic transformations from one labeling to another: duals and
//! rank reversals, linear maps over a bipartition, the harmonious family
//! grown out of a canonical set-ordered graceful labeling, equivalences onto
//! odd-graceful and magic labelings, and the leaf-adding extension for
//! graded total colorings.
//!
//! Every constructive transform re-verifies its own output against the
//! target predicate before returning it. A failed re-verification is
//! reported as [`TransformError::OutputFailedVerification`] instead of being
//! silently accepted, because it means the construction itself does not
//! generalize to the given input.

use topcode_graph::{Graph, GraphError};
use topcode_labelings::{verify, Color, Labeling, LabelingError, VerifierSpec};

mod equivalence;
mod family;
mod form;
mod leaf;

pub use equivalence::{
    equivalent_transform, image_pair, kd_graceful_from_graceful, EquivalenceTarget,
};
pub use family::{harmonious_family, FamilyMember};
pub use leaf::leaf_add_kd;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("the element set is empty")]
    EmptySet,
    #[error("the graph is not bipartite")]
    NotBipartite,
    #[error("the graph is not connected")]
    NotConnected,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("the labeling is not set-ordered graceful ({0})")]
    NotSetOrdered(String),
    #[error("the labeling is not in canonical set-ordered form: {0}")]
    NotCanonical(String),
    #[error("not a graded (k,d)-gracefully total coloring: {0}")]
    BadColoring(String),
    #[error("the {target} output failed verification: {details}")]
    OutputFailedVerification { target: String, details: String },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which side of a bipartition an operation acts on. X is the side holding
/// each component's smallest vertex index in [`Graph::bipartition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// Reflects the colors of the vertices in `s` through the maximum plus
/// minimum of their current colors. Vertices outside `s` and any explicit
/// edge colors are untouched, so applying the same reflection twice restores
/// the original labeling.
pub fn dual(f: &Labeling, s: &[usize]) -> Result<Labeling, TransformError> {
    if s.is_empty() {
        return Err(TransformError::EmptySet);
    }
    let colors = f.vertex_colors();
    for &v in s {
        if v >= colors.len() {
            return Err(LabelingError::UncoloredVertex(v).into());
        }
    }
    let lo = s.iter().map(|&v| colors[v]).min().expect("s is nonempty");
    let hi = s.iter().map(|&v| colors[v]).max().expect("s is nonempty");
    let mut out = colors.to_vec();
    for &v in s {
        out[v] = checked(u128::from(hi) + u128::from(lo) - u128::from(colors[v]))?;
    }
    Ok(relabeled(f, out))
}

/// The dual restricted to one side of the graph's bipartition. An empty side
/// leaves the labeling unchanged; the X and Y partial duals commute.
pub fn partial_dual(g: &Graph, f: &Labeling, side: Side) -> Result<Labeling, TransformError> {
    f.check_shape(g)?;
    let chosen = side_vertices(g, side)?;
    if chosen.is_empty() {
        return Ok(f.clone());
    }
    dual(f, &chosen)
}

/// Reverses the rank order of colors within one side: the vertex holding the
/// i-th smallest color there receives the i-th largest. The side's color set
/// is preserved exactly, which distinguishes this from the partial dual.
pub fn reciprocal(g: &Graph, f: &Labeling, side: Side) -> Result<Labeling, TransformError> {
    f.check_shape(g)?;
    let chosen = side_vertices(g, side)?;
    let colors = f.vertex_colors();
    let mut order = chosen;
    order.sort_by_key(|&v| colors[v]);
    for pair in order.windows(2) {
        if colors[pair[0]] == colors[pair[1]] {
            return Err(TransformError::BadParameter(format!(
                "side colors must be distinct to reverse their order, {} appears twice",
                colors[pair[0]]
            )));
        }
    }
    let mut out = colors.to_vec();
    for (i, &v) in order.iter().enumerate() {
        out[v] = colors[order[order.len() - 1 - i]];
    }
    Ok(relabeled(f, out))
}

/// Scales the X side to a·color and maps the Y side to b + a·color, with
/// a >= 1 and b >= 0. With a = 1 and b = 0 this is the identity.
pub fn linear(g: &Graph, f: &Labeling, a: u64, b: u64) -> Result<Labeling, TransformError> {
    if a == 0 {
        return Err(TransformError::BadParameter("the scale factor a must be at least 1".into()));
    }
    f.check_shape(g)?;
    let b_part = g.bipartition().ok_or(TransformError::NotBipartite)?;
    let colors = f.vertex_colors();
    let mut out = colors.to_vec();
    for &v in &b_part.x {
        out[v] = checked(u128::from(a) * u128::from(colors[v]))?;
    }
    for &v in &b_part.y {
        out[v] = checked(u128::from(b) + u128::from(a) * u128::from(colors[v]))?;
    }
    Ok(relabeled(f, out))
}

fn side_vertices(g: &Graph, side: Side) -> Result<Vec<usize>, TransformError> {
    let b = g.bipartition().ok_or(TransformError::NotBipartite)?;
    Ok(match side {
        Side::X => b.x,
        Side::Y => b.y,
    })
}

/// Keeps any explicit edge colors while swapping in new vertex colors.
fn relabeled(f: &Labeling, vertex_colors: Vec<Color>) -> Labeling {
    match f.edge_colors() {
        Some(e) => Labeling::total(vertex_colors, e.to_vec()),
        None => Labeling::vertex_only(vertex_colors),
    }
}

fn checked(value: u128) -> Result<Color, TransformError> {
    Color::try_from(value)
        .map_err(|_| TransformError::BadParameter("transformed color exceeds the color range".into()))
}

/// Verifies `out` against `spec` before handing it back, folding any extra
/// condition notes into the error. Every constructive transform funnels its
/// output through here.
fn verified(
    g: &Graph,
    out: Labeling,
    target: &str,
    spec: &VerifierSpec,
    mut notes: Vec<String>,
) -> Result<Labeling, TransformError> {
    let report = verify(g, &out, spec)?;
    notes.extend(report.failures.into_iter().map(|f| format!("{}: {}", f.condition, f.witness)));
    if notes.is_empty() {
        Ok(out)
    } else {
        Err(TransformError::OutputFailedVerification {
            target: target.to_string(),
            details: notes.join("; "),
        })
    }
}
