//! Recognising which labeling families a matrix encodes.
//!
//! Each family is a conjunction of checks on the three rows: a range for the
//! distinct end values, an exact set for the edge values, an arithmetic rule
//! tying each edge entry to its ends, or a constant shared by every column.
//! A matrix can belong to several families at once; [`classify`] reports all
//! of them.

use crate::{Entry, MatrixError, TopcodeMatrix};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A family tag, carrying the detected constant where the family has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixClass {
    /// Ends within [0, q], edges exactly [1, q], each edge the difference of
    /// its ends.
    Graceful,
    /// Graceful with every X entry below every Y entry.
    SetOrderedGraceful,
    /// Ends within [0, 2q-1], edges exactly the odds [1, 2q-1], each edge the
    /// difference of its ends.
    OddGraceful,
    /// Odd-graceful with every X entry below every Y entry.
    SetOrderedOddGraceful,
    /// Ends exactly [0, p-1] with p <= q+1, each edge the sum of its ends
    /// mod q, edges exactly [0, q-1].
    Elegant,
    /// Ends within [0, 2q-1], each edge the sum of its ends mod 2q, edges
    /// exactly the odds [1, 2q-1].
    OddElegant,
    /// Ends within [0, q], each edge the sum of its ends mod q, edges exactly
    /// [0, q-1].
    Harmonious,
    /// Every column sums to the constant.
    EdgeMagicTotal(Entry),
    /// Ends and edges together cover [1, p+q] exactly, and every column's
    /// edge entry plus its end difference equals the constant.
    EdgeDifference(Entry),
    /// Edges exactly [1, q], and |x + y - e| equals the constant in every
    /// column.
    FelicitousDifference(Entry),
    /// Edges exactly [1, q], and ||x - y| - e| equals the constant in every
    /// column.
    GracefulDifference(Entry),
}

/// A family tag with its constant stripped, for filtering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixClassKind {
    Graceful,
    SetOrderedGraceful,
    OddGraceful,
    SetOrderedOddGraceful,
    Elegant,
    OddElegant,
    Harmonious,
    EdgeMagicTotal,
    EdgeDifference,
    FelicitousDifference,
    GracefulDifference,
}

impl MatrixClass {
    pub fn kind(&self) -> MatrixClassKind {
        match self {
            MatrixClass::Graceful => MatrixClassKind::Graceful,
            MatrixClass::SetOrderedGraceful => MatrixClassKind::SetOrderedGraceful,
            MatrixClass::OddGraceful => MatrixClassKind::OddGraceful,
            MatrixClass::SetOrderedOddGraceful => MatrixClassKind::SetOrderedOddGraceful,
            MatrixClass::Elegant => MatrixClassKind::Elegant,
            MatrixClass::OddElegant => MatrixClassKind::OddElegant,
            MatrixClass::Harmonious => MatrixClassKind::Harmonious,
            MatrixClass::EdgeMagicTotal(_) => MatrixClassKind::EdgeMagicTotal,
            MatrixClass::EdgeDifference(_) => MatrixClassKind::EdgeDifference,
            MatrixClass::FelicitousDifference(_) => MatrixClassKind::FelicitousDifference,
            MatrixClass::GracefulDifference(_) => MatrixClassKind::GracefulDifference,
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixClass::EdgeMagicTotal(k) => write!(f, "edge-magic-total({k})"),
            MatrixClass::EdgeDifference(k) => write!(f, "edge-difference({k})"),
            MatrixClass::FelicitousDifference(k) => write!(f, "felicitous-difference({k})"),
            MatrixClass::GracefulDifference(k) => write!(f, "graceful-difference({k})"),
            other => write!(f, "{}", other.kind()),
        }
    }
}

impl fmt::Display for MatrixClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MatrixClassKind::Graceful => "graceful",
            MatrixClassKind::SetOrderedGraceful => "set-ordered-graceful",
            MatrixClassKind::OddGraceful => "odd-graceful",
            MatrixClassKind::SetOrderedOddGraceful => "set-ordered-odd-graceful",
            MatrixClassKind::Elegant => "elegant",
            MatrixClassKind::OddElegant => "odd-elegant",
            MatrixClassKind::Harmonious => "harmonious",
            MatrixClassKind::EdgeMagicTotal => "edge-magic-total",
            MatrixClassKind::EdgeDifference => "edge-difference",
            MatrixClassKind::FelicitousDifference => "felicitous-difference",
            MatrixClassKind::GracefulDifference => "graceful-difference",
        };
        f.write_str(name)
    }
}

impl FromStr for MatrixClassKind {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, MatrixError> {
        let kind = match s {
            "graceful" => MatrixClassKind::Graceful,
            "set-ordered-graceful" => MatrixClassKind::SetOrderedGraceful,
            "odd-graceful" => MatrixClassKind::OddGraceful,
            "set-ordered-odd-graceful" => MatrixClassKind::SetOrderedOddGraceful,
            "elegant" => MatrixClassKind::Elegant,
            "odd-elegant" => MatrixClassKind::OddElegant,
            "harmonious" => MatrixClassKind::Harmonious,
            "edge-magic-total" => MatrixClassKind::EdgeMagicTotal,
            "edge-difference" => MatrixClassKind::EdgeDifference,
            "felicitous-difference" => MatrixClassKind::FelicitousDifference,
            "graceful-difference" => MatrixClassKind::GracefulDifference,
            other => return Err(MatrixError::BadClass(other.to_string())),
        };
        Ok(kind)
    }
}

/// Every family tag the matrix satisfies, in the order the variants are
/// declared. Rule and range checks hold vacuously on the empty matrix;
/// constant-carrying tags need at least one column to witness the constant.
pub fn classify(t: &TopcodeMatrix) -> Vec<MatrixClass> {
    let q = t.size();
    let ends = t.end_values();
    let edges = t.edge_values();
    let p = ends.len();

    let ends_within = |hi: i128| ends.iter().all(|&w| (w as i128) <= hi);
    let ends_within_q = ends_within(q as i128);
    let ends_within_odd = ends_within(2 * q as i128 - 1);
    let ends_initial_run = is_run(&ends, 0, p) && p <= q + 1;
    let edges_one_to_q = is_run(&edges, 1, q);
    let edges_zero_to_qm1 = is_run(&edges, 0, q);
    let edges_odd = edges.len() == q && edges.iter().zip(0u64..).all(|(&w, i)| w == 2 * i + 1);

    let abs_diff = t.evaluated_by(|x, y| x.abs_diff(y));
    let sum_mod_q = q == 0 || t.evaluated_by(|x, y| (x + y) % q as Entry);
    let sum_mod_2q = q == 0 || t.evaluated_by(|x, y| (x + y) % (2 * q as Entry));

    let set_ordered = match (t.x_row().iter().max(), t.y_row().iter().min()) {
        (Some(&top_x), Some(&bottom_y)) => top_x < bottom_y,
        _ => true,
    };

    let magic = constant(t.columns().map(|(x, e, y)| x + e + y));
    let edge_difference = constant(t.columns().map(|(x, e, y)| e + x.abs_diff(y)));
    let felicitous_difference = constant(t.columns().map(|(x, e, y)| (x + y).abs_diff(e)));
    let graceful_difference = constant(t.columns().map(|(x, e, y)| x.abs_diff(y).abs_diff(e)));
    let covers_one_to_p_plus_q = {
        let mut both: BTreeSet<Entry> = ends.clone();
        both.extend(edges.iter().copied());
        is_run(&both, 1, p + q)
    };

    let graceful = ends_within_q && edges_one_to_q && abs_diff;
    let odd_graceful = ends_within_odd && edges_odd && abs_diff;

    let mut tags = Vec::new();
    if graceful {
        tags.push(MatrixClass::Graceful);
        if set_ordered {
            tags.push(MatrixClass::SetOrderedGraceful);
        }
    }
    if odd_graceful {
        tags.push(MatrixClass::OddGraceful);
        if set_ordered {
            tags.push(MatrixClass::SetOrderedOddGraceful);
        }
    }
    if ends_initial_run && sum_mod_q && edges_zero_to_qm1 {
        tags.push(MatrixClass::Elegant);
    }
    if ends_within_odd && sum_mod_2q && edges_odd {
        tags.push(MatrixClass::OddElegant);
    }
    if ends_within_q && sum_mod_q && edges_zero_to_qm1 {
        tags.push(MatrixClass::Harmonious);
    }
    if let Some(k) = magic {
        tags.push(MatrixClass::EdgeMagicTotal(k));
    }
    if covers_one_to_p_plus_q {
        if let Some(k) = edge_difference {
            tags.push(MatrixClass::EdgeDifference(k));
        }
    }
    if edges_one_to_q {
        if let Some(k) = felicitous_difference {
            tags.push(MatrixClass::FelicitousDifference(k));
        }
        if let Some(k) = graceful_difference {
            tags.push(MatrixClass::GracefulDifference(k));
        }
    }
    tags
}

/// Whether `set` is exactly `{lo, lo+1, ..., lo+len-1}`.
fn is_run(set: &BTreeSet<Entry>, lo: Entry, len: usize) -> bool {
    set.len() == len && set.iter().zip(0u64..).all(|(&w, i)| w == lo + i)
}

/// The shared value of a non-empty stream, if there is one.
fn constant(mut values: impl Iterator<Item = Entry>) -> Option<Entry> {
    let first = values.next()?;
    values.all(|v| v == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tests::{edge_magic_example_matrix, odd_graceful_example_matrix, single_column};

    #[test]
    fn the_odd_graceful_example_is_exactly_odd_graceful() {
        assert_eq!(classify(&odd_graceful_example_matrix()), vec![MatrixClass::OddGraceful]);
    }

    #[test]
    fn the_edge_magic_example_is_exactly_edge_magic_with_constant_26() {
        assert_eq!(
            classify(&edge_magic_example_matrix()),
            vec![MatrixClass::EdgeMagicTotal(26)]
        );
    }

    #[test]
    fn a_single_graceful_column_wears_many_hats() {
        assert_eq!(
            classify(&single_column()),
            vec![
                MatrixClass::Graceful,
                MatrixClass::SetOrderedGraceful,
                MatrixClass::OddGraceful,
                MatrixClass::SetOrderedOddGraceful,
                MatrixClass::OddElegant,
                MatrixClass::EdgeMagicTotal(2),
                MatrixClass::FelicitousDifference(0),
                MatrixClass::GracefulDifference(0),
            ]
        );
    }

    #[test]
    fn a_graceful_triangle_also_has_difference_constant_zero() {
        // C3 colored (0, 1, 3): edges 1, 2, 3.
        let t = TopcodeMatrix::new(vec![0, 1, 0], vec![1, 2, 3], vec![1, 3, 3]).unwrap();
        assert_eq!(
            classify(&t),
            vec![MatrixClass::Graceful, MatrixClass::GracefulDifference(0)]
        );
    }

    #[test]
    fn a_sum_colored_star_is_elegant_and_harmonious() {
        // K1,3 with center 0 and leaves 1, 2, 3; edges are sums mod 3.
        let t = TopcodeMatrix::new(vec![0, 0, 0], vec![0, 1, 2], vec![3, 1, 2]).unwrap();
        assert_eq!(classify(&t), vec![MatrixClass::Elegant, MatrixClass::Harmonious]);
    }

    #[test]
    fn an_alternating_path_is_exactly_odd_elegant() {
        // P3 colored (0, 1, 2): edge sums mod 4 are 1 and 3.
        let t = TopcodeMatrix::new(vec![0, 1], vec![1, 3], vec![1, 2]).unwrap();
        assert_eq!(classify(&t), vec![MatrixClass::OddElegant]);
    }

    #[test]
    fn the_empty_matrix_passes_every_family_without_a_constant() {
        assert_eq!(
            classify(&TopcodeMatrix::empty()),
            vec![
                MatrixClass::Graceful,
                MatrixClass::SetOrderedGraceful,
                MatrixClass::OddGraceful,
                MatrixClass::SetOrderedOddGraceful,
                MatrixClass::Elegant,
                MatrixClass::OddElegant,
                MatrixClass::Harmonious,
            ]
        );
    }

    #[test]
    fn tags_render_with_their_constants() {
        assert_eq!(MatrixClass::EdgeMagicTotal(26).to_string(), "edge-magic-total(26)");
        assert_eq!(MatrixClass::SetOrderedGraceful.to_string(), "set-ordered-graceful");
        assert_eq!(MatrixClass::GracefulDifference(0).to_string(), "graceful-difference(0)");
    }

    #[test]
    fn kinds_parse_from_their_names() {
        for kind in [
            MatrixClassKind::Graceful,
            MatrixClassKind::SetOrderedGraceful,
            MatrixClassKind::OddGraceful,
            MatrixClassKind::SetOrderedOddGraceful,
            MatrixClassKind::Elegant,
            MatrixClassKind::OddElegant,
            MatrixClassKind::Harmonious,
            MatrixClassKind::EdgeMagicTotal,
            MatrixClassKind::EdgeDifference,
            MatrixClassKind::FelicitousDifference,
            MatrixClassKind::GracefulDifference,
        ] {
            assert_eq!(kind.to_string().parse::<MatrixClassKind>().unwrap(), kind);
        }
        assert!("gracefull".parse::<MatrixClassKind>().is_err());
    }

    #[test]
    fn edge_difference_needs_full_coverage_of_ends_and_edges() {
        // One column (1, 3, 2): ends and edge together cover [1, 3], and
        // 3 + |1 - 2| = 4, so the tag fires alongside the column-sum tag.
        let t = TopcodeMatrix::new(vec![1], vec![3], vec![2]).unwrap();
        assert_eq!(
            classify(&t),
            vec![MatrixClass::EdgeMagicTotal(6), MatrixClass::EdgeDifference(4)]
        );

        // Raising the edge value to 5 keeps a constant but breaks coverage.
        let t = TopcodeMatrix::new(vec![1], vec![5], vec![2]).unwrap();
        assert_eq!(classify(&t), vec![MatrixClass::EdgeMagicTotal(8)]);
    }
}
