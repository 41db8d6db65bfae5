//! Labelings and colorings of graphs, and the predicates that certify them.
//!
//! A [`Labeling`] assigns a non-negative integer to every vertex and,
//! optionally, to every edge (aligned with the graph's stored edge order).
//! [`verify`] checks it against one of the families in [`VerifierSpec`] and
//! reports every violated condition with a witness instead of a bare boolean.

use serde::{Deserialize, Serialize};
use std::fmt;
use topcode_graph::{Edge, Graph, GraphError};

mod flawed;
mod kinds;
mod sixc;
mod spec;
mod twin;

pub use flawed::verify_flawed;
pub use sixc::{verify_6c, SixCReport};
pub use spec::VerifierSpec;
pub use twin::{verify_twin_pair, TwinKind, TwinPairReport};

/// Colors are non-negative integers.
pub type Color = u64;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("labeling covers {got} vertices but the graph has {expected}")]
    VertexCountMismatch { expected: usize, got: usize },
    #[error("labeling colors {got} edges but the graph has {expected}")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error("this kind needs explicit edge colors")]
    MissingEdgeColors,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("cannot parse labeling kind: {0}")]
    ParseSpec(String),
    #[error("vertex {0} has no color")]
    UncoloredVertex(usize),
    #[error("the graph is not bipartite")]
    NotBipartite,
    #[error("colors are not a bijection onto [1,{0}]")]
    NotABijection(usize),
    #[error("{0} edges exceed the search limit of {1}")]
    TooManyEdges(usize, usize),
    #[error("the assembled graph is not connected")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A vertex assignment with optional edge colors in stored edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    #[serde(rename = "vertex")]
    vertex_colors: Vec<Color>,
    #[serde(rename = "edge", default)]
    edge_colors: Option<Vec<Color>>,
}

impl Labeling {
    pub fn vertex_only(vertex_colors: Vec<Color>) -> Self {
        Labeling { vertex_colors, edge_colors: None }
    }

    pub fn total(vertex_colors: Vec<Color>, edge_colors: Vec<Color>) -> Self {
        Labeling { vertex_colors, edge_colors: Some(edge_colors) }
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> Option<&[Color]> {
        self.edge_colors.as_deref()
    }

    pub fn vertex_color(&self, v: usize) -> Result<Color, LabelingError> {
        self.vertex_colors.get(v).copied().ok_or(LabelingError::UncoloredVertex(v))
    }

    /// Checks the labeling fits the graph: every vertex colored, and edge
    /// colors (when present) matching the edge count.
    pub fn check_shape(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.vertex_colors.len() != g.p() {
            return Err(LabelingError::VertexCountMismatch {
                expected: g.p(),
                got: self.vertex_colors.len(),
            });
        }
        if let Some(edge_colors) = &self.edge_colors {
            if edge_colors.len() != g.q() {
                return Err(LabelingError::EdgeCountMismatch {
                    expected: g.q(),
                    got: edge_colors.len(),
                });
            }
        }
        Ok(())
    }
}

/// How an edge color is derived from its endpoint colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum InducedRule {
    AbsDiff,
    SumMod { m: u64 },
    Gcd,
    /// k + ((sum - k) mod m), the mod taken into [0, m-1] even when the sum
    /// falls below k.
    SumPlusMod { k: u64, m: u64 },
}

impl fmt::Display for InducedRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InducedRule::AbsDiff => write!(f, "abs-diff"),
            InducedRule::SumMod { m } => write!(f, "sum-mod({m})"),
            InducedRule::Gcd => write!(f, "gcd"),
            InducedRule::SumPlusMod { k, m } => write!(f, "sum-plus-mod({k},{m})"),
        }
    }
}

/// The color `rule` assigns to the edge `e` under `f`.
pub fn induced_edge_color(
    f: &Labeling,
    rule: InducedRule,
    e: Edge,
) -> Result<Color, LabelingError> {
    let a = f.vertex_color(e.0)?;
    let b = f.vertex_color(e.1)?;
    Ok(apply_rule(rule, a, b))
}

pub(crate) fn apply_rule(rule: InducedRule, a: Color, b: Color) -> Color {
    match rule {
        InducedRule::AbsDiff => a.abs_diff(b),
        InducedRule::SumMod { m } => ((a as u128 + b as u128) % m as u128) as Color,
        InducedRule::Gcd => gcd(a, b),
        InducedRule::SumPlusMod { k, m } => {
            let shifted = (a as i128 + b as i128 - k as i128).rem_euclid(m as i128);
            k + shifted as Color
        }
    }
}

/// gcd with gcd(0, x) = x.
pub(crate) fn gcd(mut a: Color, mut b: Color) -> Color {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One violated condition with the element that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub condition: String,
    pub witness: String,
}

/// What a verifier found: a verdict, every failed condition, and the magic
/// constant it detected when the kind has one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub pass: bool,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived_constant: Option<i64>,
}

impl VerifyReport {
    pub(crate) fn from_failures(failures: Vec<Failure>, derived_constant: Option<i64>) -> Self {
        VerifyReport { pass: failures.is_empty(), failures, derived_constant }
    }
}

/// Checks `f` against `spec` on `G`. Shape mismatches (wrong counts, missing
/// edge colors, invalid parameters) are errors; everything else is reported
/// as pass/fail with witnesses.
pub fn verify(g: &Graph, f: &Labeling, spec: &VerifierSpec) -> Result<VerifyReport, LabelingError> {
    spec.validate()?;
    f.check_shape(g)?;
    if spec.requires_edge_colors() && f.edge_colors().is_none() {
        return Err(LabelingError::MissingEdgeColors);
    }
    Ok(kinds::run(g, f, spec))
}

/// The four edge-function constants of a total labeling: each is present
/// exactly when its value is identical on every edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MagicProfile {
    /// f(u) + f(uv) + f(v)
    pub sum: Option<i64>,
    /// f(uv) + |f(u) - f(v)|
    pub edge_difference: Option<i64>,
    /// |f(u) + f(v) - f(uv)|
    pub felicitous_difference: Option<i64>,
    /// ||f(u) - f(v)| - f(uv)|
    pub graceful_difference: Option<i64>,
}

pub fn magic_profile(g: &Graph, f: &Labeling) -> Result<MagicProfile, LabelingError> {
    f.check_shape(g)?;
    let edge_colors = f.edge_colors().ok_or(LabelingError::MissingEdgeColors)?;
    let values = |function: fn(i64, i64, i64) -> i64| -> Option<i64> {
        let mut constant = None;
        for (index, &(u, v)) in g.edges().iter().enumerate() {
            let value = function(
                f.vertex_colors[u] as i64,
                f.vertex_colors[v] as i64,
                edge_colors[index] as i64,
            );
            match constant {
                None => constant = Some(value),
                Some(c) if c != value => return None,
                Some(_) => {}
            }
        }
        constant
    };
    Ok(MagicProfile {
        sum: values(|a, b, e| a + b + e),
        edge_difference: values(|a, b, e| e + (a - b).abs()),
        felicitous_difference: values(|a, b, e| (a + b - e).abs()),
        graceful_difference: values(|a, b, e| ((a - b).abs() - e).abs()),
    })
}
