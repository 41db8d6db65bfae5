//! Topcode matrices: the 3 × q tables that carry a labeled graph's incidence
//! data, and the number-based strings read off from them.
//!
//! A [`TopcodeMatrix`] holds one column per edge: the two end colors in the
//! `X` and `Y` rows with the edge color between them in the `E` row.
//! [`from_labeled_graph`] builds the canonical matrix of a colored graph,
//! [`classify`] recognises which labeling families a matrix encodes,
//! [`analyze`] reports the shape of the multigraph its columns draw,
//! [`emit_string`] flattens a matrix into one decimal string along a reading
//! route, and [`partition_string`] brute-forces such a string back into every
//! matrix it could have come from.

mod analyze;
mod classify;
mod emit;
mod partition;

pub use analyze::{analyze, StructureReport, HAMILTON_BRUTE_FORCE_CAP};
pub use classify::{classify, MatrixClass, MatrixClassKind};
pub use emit::{emit_string, Route, Variant};
pub use partition::{partition_string, partition_string_with_cap, DEFAULT_PARTITION_CAP};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use topcode_graph::Graph;
use topcode_labelings::{induced_edge_color, InducedRule, Labeling, LabelingError};

/// A single matrix entry; all colors are non-negative.
pub type Entry = u64;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("rows must share one length, got |X|={x}, |E|={e}, |Y|={y}")]
    RaggedRows { x: usize, e: usize, y: usize },
    #[error("the labeling has no edge colors; pass a total labeling or induce the colors first")]
    MissingEdgeColors,
    #[error("cell order must list every index below {expected} exactly once")]
    BadCellOrder { expected: usize },
    #[error("cannot parse {0:?} as a reading route")]
    BadRoute(String),
    #[error("cannot parse {0:?} as a route variant")]
    BadVariant(String),
    #[error("cannot parse {0:?} as a matrix class")]
    BadClass(String),
    #[error("{0:?} is not a string of decimal digits")]
    NotDigits(String),
    #[error("partitioning into {q} columns exceeds the cap of {cap}")]
    PartitionTooWide { q: usize, cap: usize },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// A 3 × q table with one column (x_i, e_i, y_i) per edge: ends on the `X`
/// and `Y` rows, the edge color on the `E` row.
///
/// Serializes as `{"X": [...], "E": [...], "Y": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Rows", into = "Rows")]
pub struct TopcodeMatrix {
    x: Vec<Entry>,
    e: Vec<Entry>,
    y: Vec<Entry>,
}

/// The serialized shape of a matrix.
#[derive(Clone, Serialize, Deserialize)]
struct Rows {
    #[serde(rename = "X")]
    x: Vec<Entry>,
    #[serde(rename = "E")]
    e: Vec<Entry>,
    #[serde(rename = "Y")]
    y: Vec<Entry>,
}

impl TryFrom<Rows> for TopcodeMatrix {
    type Error = MatrixError;

    fn try_from(rows: Rows) -> Result<Self, MatrixError> {
        TopcodeMatrix::new(rows.x, rows.e, rows.y)
    }
}

impl From<TopcodeMatrix> for Rows {
    fn from(t: TopcodeMatrix) -> Rows {
        Rows { x: t.x, e: t.e, y: t.y }
    }
}

impl TopcodeMatrix {
    pub fn new(x: Vec<Entry>, e: Vec<Entry>, y: Vec<Entry>) -> Result<Self, MatrixError> {
        if x.len() != e.len() || e.len() != y.len() {
            return Err(MatrixError::RaggedRows { x: x.len(), e: e.len(), y: y.len() });
        }
        Ok(TopcodeMatrix { x, e, y })
    }

    pub fn empty() -> Self {
        TopcodeMatrix { x: Vec::new(), e: Vec::new(), y: Vec::new() }
    }

    /// The number of columns.
    pub fn size(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    pub fn x_row(&self) -> &[Entry] {
        &self.x
    }

    pub fn e_row(&self) -> &[Entry] {
        &self.e
    }

    pub fn y_row(&self) -> &[Entry] {
        &self.y
    }

    pub fn column(&self, i: usize) -> Option<(Entry, Entry, Entry)> {
        (i < self.size()).then(|| (self.x[i], self.e[i], self.y[i]))
    }

    /// Columns as (x, e, y) triples, left to right.
    pub fn columns(&self) -> impl Iterator<Item = (Entry, Entry, Entry)> + '_ {
        (0..self.size()).map(|i| (self.x[i], self.e[i], self.y[i]))
    }

    /// The distinct values appearing on the end rows, ascending.
    pub fn end_values(&self) -> BTreeSet<Entry> {
        self.x.iter().chain(&self.y).copied().collect()
    }

    /// The distinct values appearing on the edge row, ascending.
    pub fn edge_values(&self) -> BTreeSet<Entry> {
        self.e.iter().copied().collect()
    }

    /// Whether every edge entry equals `rule` applied to its two ends.
    pub fn evaluated_by<F>(&self, rule: F) -> bool
    where
        F: Fn(Entry, Entry) -> Entry,
    {
        self.columns().all(|(x, e, y)| rule(x, y) == e)
    }

    /// The matrix with its end rows exchanged.
    pub fn swap_ends(&self) -> Self {
        TopcodeMatrix { x: self.y.clone(), e: self.e.clone(), y: self.x.clone() }
    }

    /// The matrix with its columns in reverse order.
    pub fn reverse_columns(&self) -> Self {
        let flip = |row: &[Entry]| row.iter().rev().copied().collect();
        TopcodeMatrix { x: flip(&self.x), e: flip(&self.e), y: flip(&self.y) }
    }

    /// Rows concatenated, with `self`'s columns first. The empty matrix is
    /// the identity, and chaining unions is associative.
    pub fn union(&self, other: &Self) -> Self {
        let join = |a: &[Entry], b: &[Entry]| a.iter().chain(b).copied().collect();
        TopcodeMatrix {
            x: join(&self.x, &other.x),
            e: join(&self.e, &other.e),
            y: join(&self.y, &other.y),
        }
    }
}

impl fmt::Display for TopcodeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |entries: &[Entry]| {
            entries.iter().map(Entry::to_string).collect::<Vec<_>>().join(" ")
        };
        write!(f, "X: {}\nE: {}\nY: {}", row(&self.x), row(&self.e), row(&self.y))
    }
}

/// The canonical matrix of a totally colored graph: one column per edge with
/// the smaller end color on the X row, columns sorted by edge color and then
/// by end colors, so equal labelings of equal graphs always produce the same
/// matrix.
///
/// A set-ordered labeling lands its low side on the X row automatically,
/// since each of its edges joins a low color to a high one.
pub fn from_labeled_graph(g: &Graph, f: &Labeling) -> Result<TopcodeMatrix, MatrixError> {
    f.check_shape(g)?;
    let edge_colors = f.edge_colors().ok_or(MatrixError::MissingEdgeColors)?;
    let vertex_colors = f.vertex_colors();
    let mut columns: Vec<(Entry, Entry, Entry)> = g
        .edges()
        .iter()
        .zip(edge_colors)
        .map(|(&(u, v), &e)| {
            let low = vertex_colors[u].min(vertex_colors[v]);
            let high = vertex_colors[u].max(vertex_colors[v]);
            (e, low, high)
        })
        .collect();
    columns.sort_unstable();
    Ok(TopcodeMatrix {
        x: columns.iter().map(|&(_, low, _)| low).collect(),
        e: columns.iter().map(|&(e, _, _)| e).collect(),
        y: columns.iter().map(|&(_, _, high)| high).collect(),
    })
}

/// The canonical matrix of a vertex labeling whose edge colors come from
/// `rule`.
pub fn from_vertex_labeling(
    g: &Graph,
    f: &Labeling,
    rule: InducedRule,
) -> Result<TopcodeMatrix, MatrixError> {
    let edge_colors = g
        .edges()
        .iter()
        .map(|&edge| induced_edge_color(f, rule, edge))
        .collect::<Result<Vec<_>, _>>()?;
    let total = Labeling::total(f.vertex_colors().to_vec(), edge_colors);
    from_labeled_graph(g, &total)
}
