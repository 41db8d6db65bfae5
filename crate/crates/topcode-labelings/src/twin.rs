//! Paired labelings: one graph's labeling constrains a partner graph.

use crate::{Color, Failure, Labeling, LabelingError, VerifierSpec, VerifyReport};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use topcode_graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    TwinOddGraceful,
    TwinOddElegant,
}

impl fmt::Display for TwinKind {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwinKind::TwinOddGraceful => write!(out, "twin-odd-graceful"),
            TwinKind::TwinOddElegant => write!(out, "twin-odd-elegant"),
        }
    }
}

impl std::str::FromStr for TwinKind {
    type Err = LabelingError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text {
            "twin-odd-graceful" => Ok(TwinKind::TwinOddGraceful),
            "twin-odd-elegant" => Ok(TwinKind::TwinOddElegant),
            other => Err(LabelingError::ParseSpec(other.to_string())),
        }
    }
}

/// Like a plain report, with the size of the shared vertex-color set added.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TwinPairReport {
    pub pass: bool,
    pub failures: Vec<Failure>,
    /// How many vertex colors the two labelings share.
    pub overlap: usize,
}

/// Checks a pair of labelings on two graphs with the same edge count.
///
/// For twin-odd-graceful the first labeling must be odd-graceful on its
/// graph, the second graph's color differences must also cover the odd
/// numbers [1,2q-1], and all vertex colors stay within [0,2q-1]. For
/// twin-odd-elegant both labelings must be odd-elegant and all vertex colors
/// stay within [0,q-1].
pub fn verify_twin_pair(
    g1: &Graph,
    f1: &Labeling,
    g2: &Graph,
    f2: &Labeling,
    kind: TwinKind,
) -> Result<TwinPairReport, LabelingError> {
    if g1.q() != g2.q() {
        return Err(LabelingError::EdgeCountMismatch { expected: g1.q(), got: g2.q() });
    }
    f1.check_shape(g1)?;
    f2.check_shape(g2)?;
    let q = g1.q() as i128;
    let mut failures = Vec::new();
    match kind {
        TwinKind::TwinOddGraceful => {
            absorb(&mut failures, "first", crate::verify(g1, f1, &VerifierSpec::OddGraceful)?);
            let mut diffs: Vec<i128> = g2
                .edges()
                .iter()
                .map(|&(u, v)| {
                    (f2.vertex_colors()[u] as i128 - f2.vertex_colors()[v] as i128).abs()
                })
                .collect();
            diffs.sort_unstable();
            if diffs != (0..q).map(|i| 2 * i + 1).collect::<Vec<_>>() {
                failures.push(Failure {
                    condition: "edge-color-set".into(),
                    witness: format!(
                        "second graph's color differences must be the odd numbers [1,{}]",
                        2 * q - 1
                    ),
                });
            }
            check_union_bound(&mut failures, f1, f2, 2 * q - 1);
        }
        TwinKind::TwinOddElegant => {
            absorb(&mut failures, "first", crate::verify(g1, f1, &VerifierSpec::OddElegant)?);
            absorb(&mut failures, "second", crate::verify(g2, f2, &VerifierSpec::OddElegant)?);
            check_union_bound(&mut failures, f1, f2, q - 1);
        }
    }
    let shared: BTreeSet<Color> = f1.vertex_colors().iter().copied().collect();
    let other: BTreeSet<Color> = f2.vertex_colors().iter().copied().collect();
    let overlap = shared.intersection(&other).count();
    Ok(TwinPairReport { pass: failures.is_empty(), failures, overlap })
}

fn absorb(failures: &mut Vec<Failure>, which: &str, report: VerifyReport) {
    for failure in report.failures {
        failures.push(Failure {
            condition: failure.condition,
            witness: format!("{which} labeling: {}", failure.witness),
        });
    }
}

fn check_union_bound(failures: &mut Vec<Failure>, f1: &Labeling, f2: &Labeling, hi: i128) {
    let beyond = f1
        .vertex_colors()
        .iter()
        .chain(f2.vertex_colors())
        .find(|&&c| c as i128 > hi);
    if let Some(&c) = beyond {
        failures.push(Failure {
            condition: "vertex-range".into(),
            witness: format!("color {c} lies beyond the shared bound {hi}"),
        });
    }
}
