//! Seven sibling labelings grown from one canonical set-ordered graceful
//! labeling of a tree: the low side is kept (up to scaling) and the high
//! side is read back in reverse rank order, then wrapped, doubled or spread
//! so the edge sums land on the member's target set.

use crate::form::{canonical_form, SetOrderedForm};
use crate::{checked, verified, TransformError};
use topcode_graph::Graph;
use topcode_labelings::{induced_edge_color, Color, InducedRule, Labeling, VerifierSpec};

/// Which member of the family to build. Each variant notes the predicate
/// the output is verified against before it is returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyMember {
    /// Harmonious: edge sums mod q cover [0, q-1]; on a tree one vertex
    /// color (the wrapped 0) repeats once, which the predicate allows.
    G1,
    /// Even-harmonious: doubled colors, edge sums mod 2q cover the even
    /// values [0, 2q-2].
    G2,
    /// Odd-harmonious: doubled colors with the high side pulled down by
    /// one, edge sums mod 2q cover the odd values [1, 2q-1].
    G3,
    /// k-even-sequential-harmonious: colors scaled by 2k, shifted edge sums
    /// cover {2k, 2k+2, ..., 2k+2q-2}. Only k = 1 fits the required color
    /// window [k-1, k+2q-1]; larger k fail the output check honestly.
    G4 { k: u64 },
    /// Strongly c-harmonious: plain edge sums form a consecutive run; the
    /// realized c is the smallest sum, which equals |X|.
    G5,
    /// Strongly odd-harmonious: plain edge sums cover the odd values
    /// [1, 2q-1]; requires side sizes differing by exactly one.
    G6,
    /// (k,d)-harmonious: the low side scaled by d, the high side spread by
    /// d with offset k; shifted edge sums cover {k, k+d, ..., k+(q-1)d}.
    G7 { k: u64, d: u64 },
}

/// Builds the requested family member from a set-ordered graceful labeling
/// of the tree `g`, normalizing `f` to rank form first. The output carries
/// explicit edge colors under the member's edge rule and has been verified
/// against the member's target predicate; parameter choices whose values
/// collide (such as `G4` with k ≥ 2, or `G7` when d divides k and the
/// quotient is below |X|) are reported as errors, never returned.
pub fn harmonious_family(
    g: &Graph,
    f: &Labeling,
    member: FamilyMember,
) -> Result<Labeling, TransformError> {
    if g.q() == 0 {
        return Err(TransformError::BadParameter(
            "the construction needs at least one edge".into(),
        ));
    }
    match member {
        FamilyMember::G4 { k: 0 } => {
            return Err(TransformError::BadParameter("k must be at least 1".into()));
        }
        FamilyMember::G7 { k: 0, .. } | FamilyMember::G7 { d: 0, .. } => {
            return Err(TransformError::BadParameter("k and d must both be at least 1".into()));
        }
        _ => {}
    }
    let (canon, form) = canonical_form(g, f)?;
    if member == FamilyMember::G6 {
        return strongly_odd(g, canon, form);
    }
    let q = g.q() as Color;
    let colors = canon.vertex_colors();
    let t = form.y.len();
    let mut out: Vec<Color> = vec![0; g.p()];
    for &v in &form.x {
        out[v] = low_value(member, colors[v])?;
    }
    for (j, &v) in form.y.iter().enumerate() {
        let reversed = colors[form.y[t - 1 - j]];
        out[v] = high_value(member, q, reversed)?;
    }
    let vertex = Labeling::vertex_only(out);
    let edge_colors = match edge_rule(member, q)? {
        Some(rule) => g
            .edges()
            .iter()
            .map(|&e| induced_edge_color(&vertex, rule, e).map_err(TransformError::from))
            .collect::<Result<Vec<Color>, _>>()?,
        None => g
            .edges()
            .iter()
            .map(|&(u, v)| {
                checked(
                    u128::from(vertex.vertex_colors()[u]) + u128::from(vertex.vertex_colors()[v]),
                )
            })
            .collect::<Result<Vec<Color>, _>>()?,
    };
    let (target, spec, notes) = goal(member, q, vertex.vertex_colors(), &edge_colors)?;
    let total = Labeling::total(vertex.vertex_colors().to_vec(), edge_colors);
    verified(g, total, target, &spec, notes)
}

/// The new color of a low-side vertex currently holding `c`.
fn low_value(member: FamilyMember, c: Color) -> Result<Color, TransformError> {
    Ok(match member {
        FamilyMember::G1 | FamilyMember::G5 => c,
        FamilyMember::G2 | FamilyMember::G3 => 2 * c,
        FamilyMember::G4 { k } => checked(2 * u128::from(k) * u128::from(c))?,
        FamilyMember::G7 { d, .. } => checked(u128::from(d) * u128::from(c))?,
        FamilyMember::G6 => unreachable!("built by strongly_odd"),
    })
}

/// The new color of the j-th high-side vertex, fed the color `reversed`
/// taken from its rank-reversed partner.
fn high_value(member: FamilyMember, q: Color, reversed: Color) -> Result<Color, TransformError> {
    Ok(match member {
        FamilyMember::G1 => reversed % q,
        FamilyMember::G2 => 2 * reversed,
        // high-side colors are at least 1, so this cannot underflow
        FamilyMember::G3 => 2 * reversed - 1,
        FamilyMember::G4 { k } => checked(2 * u128::from(k) * u128::from(reversed))?,
        FamilyMember::G5 => reversed,
        FamilyMember::G7 { k, d } => {
            checked(u128::from(k) + u128::from(d) * u128::from(reversed % q))?
        }
        FamilyMember::G6 => unreachable!("built by strongly_odd"),
    })
}

/// How stored edge colors are derived; `None` means plain endpoint sums.
fn edge_rule(member: FamilyMember, q: u64) -> Result<Option<InducedRule>, TransformError> {
    Ok(match member {
        FamilyMember::G1 => Some(InducedRule::SumMod { m: q }),
        FamilyMember::G2 | FamilyMember::G3 => Some(InducedRule::SumMod { m: 2 * q }),
        FamilyMember::G4 { k } => {
            Some(InducedRule::SumPlusMod { k: mul(2, k)?, m: mul(mul(2, q)?, k)? })
        }
        FamilyMember::G5 | FamilyMember::G6 => None,
        FamilyMember::G7 { k, d } => Some(InducedRule::SumPlusMod { k, m: mul(q, d)? }),
    })
}

/// The target predicate to verify against, with any conditions the catalog
/// kinds do not already cover folded in as notes.
fn goal(
    member: FamilyMember,
    q: u64,
    vertex_colors: &[Color],
    edge_colors: &[Color],
) -> Result<(&'static str, VerifierSpec, Vec<String>), TransformError> {
    Ok(match member {
        FamilyMember::G1 => {
            ("harmonious", VerifierSpec::Harmonious { tree_exception: true }, Vec::new())
        }
        FamilyMember::G2 => (
            "even-harmonious",
            VerifierSpec::Custom {
                target_edge_set: (0..q).map(|i| 2 * i).collect(),
                induced_rule: InducedRule::SumMod { m: 2 * q },
            },
            color_window_notes(vertex_colors, 0, 2 * q),
        ),
        FamilyMember::G3 => (
            "odd-harmonious",
            VerifierSpec::Custom {
                target_edge_set: (0..q).map(|i| 2 * i + 1).collect(),
                induced_rule: InducedRule::SumMod { m: 2 * q },
            },
            color_window_notes(vertex_colors, 0, 2 * q - 1),
        ),
        FamilyMember::G4 { k } => {
            let floor = mul(2, k)?;
            (
                "k-even-sequential-harmonious",
                VerifierSpec::Custom {
                    target_edge_set: (0..q)
                        .map(|i| checked(u128::from(floor) + 2 * u128::from(i)))
                        .collect::<Result<Vec<Color>, _>>()?,
                    induced_rule: InducedRule::SumPlusMod { k: floor, m: mul(mul(2, q)?, k)? },
                },
                color_window_notes(vertex_colors, k - 1, checked(u128::from(k) + 2 * u128::from(q) - 1)?),
            )
        }
        FamilyMember::G5 => {
            let c = *edge_colors.iter().min().expect("at least one edge");
            (
                "strongly-c-harmonious",
                VerifierSpec::KdArithmetic { k: c, d: 1 },
                color_window_notes(vertex_colors, 0, q),
            )
        }
        FamilyMember::G6 => unreachable!("built by strongly_odd"),
        FamilyMember::G7 { k, d } => {
            ("kd-harmonious", VerifierSpec::KdHarmonious { k, d }, Vec::new())
        }
    })
}

/// The strongly odd-harmonious member: even colors ascending on the larger
/// low side, odd colors descending on the high side, so the plain sums are
/// 1, 3, ..., 2q-1. When the high side is the larger one the labeling is
/// dualized first, which swaps the sides while keeping the rank form.
fn strongly_odd(
    g: &Graph,
    canon: Labeling,
    form: SetOrderedForm,
) -> Result<Labeling, TransformError> {
    let (s, t) = (form.x.len(), form.y.len());
    let (canon, form) = if s == t + 1 {
        (canon, form)
    } else if t == s + 1 {
        let everything: Vec<usize> = (0..g.p()).collect();
        let dualized = crate::dual(&canon, &everything)?;
        canonical_form(g, &dualized)?
    } else {
        return Err(TransformError::BadParameter(format!(
            "side sizes must differ by exactly one, got {s} and {t}"
        )));
    };
    let colors = canon.vertex_colors();
    let t = form.y.len();
    let mut out: Vec<Color> = vec![0; g.p()];
    for &v in &form.x {
        out[v] = 2 * colors[v];
    }
    for (j, &v) in form.y.iter().enumerate() {
        out[v] = 2 * (t - 1 - j) as Color + 1;
    }
    let edge_colors = g
        .edges()
        .iter()
        .map(|&(u, v)| checked(u128::from(out[u]) + u128::from(out[v])))
        .collect::<Result<Vec<Color>, _>>()?;
    let notes = color_window_notes(&out, 0, g.q() as Color);
    let total = Labeling::total(out, edge_colors);
    verified(g, total, "strongly-odd-harmonious", &VerifierSpec::KdArithmetic { k: 1, d: 2 }, notes)
}

/// Conditions the catalog predicates leave open: distinct vertex colors
/// inside a closed window.
fn color_window_notes(colors: &[Color], lo: Color, hi: Color) -> Vec<String> {
    let mut notes = Vec::new();
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        notes.push(format!("vertex color {} repeats", w[0]));
    }
    match (sorted.first(), sorted.last()) {
        (Some(&min), Some(&max)) if min < lo || max > hi => {
            notes.push(format!("vertex colors fall outside [{lo},{hi}]"));
        }
        _ => {}
    }
    notes
}

fn mul(a: u64, b: u64) -> Result<u64, TransformError> {
    a.checked_mul(b)
        .ok_or_else(|| TransformError::BadParameter("parameter product overflows".into()))
}
