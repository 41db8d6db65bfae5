//! The catalog of verifiable labeling kinds and their parameters.

use crate::{InducedRule, LabelingError};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which labeling family to verify, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VerifierSpec {
    Graceful,
    OddGraceful,
    SetOrderedGraceful,
    SetOrderedOddGraceful,
    StronglyGraceful,
    StronglyOddGraceful,
    KGraceful { k: u64 },
    KdGraceful { k: u64, d: u64 },
    KdArithmetic { k: u64, d: u64 },
    KdEdgeAntimagicTotal { k: u64, d: u64 },
    KdHarmonious { k: u64, d: u64 },
    EdgeMagicTotal,
    SuperEdgeMagicTotal,
    EdgeMagicGraceful,
    EdgeMagicTotalGraceful,
    KLambdaMagic { k: i64, lambda: i64 },
    Felicitous,
    Harmonious { tree_exception: bool },
    OddElegant,
    TotalGraceful,
    GcdGraceful,
    GcdOddGraceful,
    /// Constant enforced when given, detected from the first edge when not.
    EdgeDifference { k: Option<i64> },
    GracefulDifference { k: Option<i64> },
    FelicitousDifference { k: Option<i64> },
    /// Induced edge colors must reproduce `target_edge_set` exactly, with no
    /// vertex-side constraints.
    Custom { target_edge_set: Vec<u64>, induced_rule: InducedRule },
}

impl VerifierSpec {
    /// Rejects parameter values the definitions exclude.
    pub fn validate(&self) -> Result<(), LabelingError> {
        match *self {
            VerifierSpec::KdGraceful { d, .. }
            | VerifierSpec::KdArithmetic { d, .. }
            | VerifierSpec::KdEdgeAntimagicTotal { d, .. } => {
                if d == 0 {
                    return Err(LabelingError::BadParameter("d must be at least 1".into()));
                }
            }
            VerifierSpec::KdHarmonious { k, d } => {
                if k == 0 || d == 0 {
                    return Err(LabelingError::BadParameter(
                        "k and d must both be at least 1".into(),
                    ));
                }
            }
            VerifierSpec::KLambdaMagic { lambda, .. } => {
                if lambda == 0 {
                    return Err(LabelingError::BadParameter("lambda must be nonzero".into()));
                }
            }
            VerifierSpec::Custom { induced_rule, .. } => match induced_rule {
                InducedRule::SumMod { m } if m == 0 => {
                    return Err(LabelingError::BadParameter("modulus must be at least 1".into()));
                }
                InducedRule::SumPlusMod { m, .. } if m == 0 => {
                    return Err(LabelingError::BadParameter("modulus must be at least 1".into()));
                }
                _ => {}
            },
            _ => {}
        }
        Ok(())
    }

    /// Whether the kind needs explicit edge colors (total labelings and the
    /// three difference colorings).
    pub fn requires_edge_colors(&self) -> bool {
        matches!(
            self,
            VerifierSpec::KdEdgeAntimagicTotal { .. }
                | VerifierSpec::EdgeMagicTotal
                | VerifierSpec::SuperEdgeMagicTotal
                | VerifierSpec::EdgeMagicGraceful
                | VerifierSpec::EdgeMagicTotalGraceful
                | VerifierSpec::KLambdaMagic { .. }
                | VerifierSpec::EdgeDifference { .. }
                | VerifierSpec::GracefulDifference { .. }
                | VerifierSpec::FelicitousDifference { .. }
        )
    }

    /// The rule deriving edge colors from endpoint colors, for kinds that
    /// have one.
    pub fn induced_rule(&self, q: usize) -> Option<InducedRule> {
        let q = q as u64;
        match *self {
            VerifierSpec::Graceful
            | VerifierSpec::OddGraceful
            | VerifierSpec::SetOrderedGraceful
            | VerifierSpec::SetOrderedOddGraceful
            | VerifierSpec::StronglyGraceful
            | VerifierSpec::StronglyOddGraceful
            | VerifierSpec::KGraceful { .. }
            | VerifierSpec::KdGraceful { .. }
            | VerifierSpec::TotalGraceful => Some(InducedRule::AbsDiff),
            // kd-arithmetic colors edges with plain sums, which the verifier
            // computes directly rather than through a shared rule
            VerifierSpec::KdHarmonious { k, d } => {
                Some(InducedRule::SumPlusMod { k, m: q * d })
            }
            VerifierSpec::Felicitous | VerifierSpec::Harmonious { .. } => {
                Some(InducedRule::SumMod { m: q })
            }
            VerifierSpec::OddElegant => Some(InducedRule::SumMod { m: 2 * q }),
            VerifierSpec::GcdGraceful | VerifierSpec::GcdOddGraceful => Some(InducedRule::Gcd),
            VerifierSpec::Custom { induced_rule, .. } => Some(induced_rule),
            _ => None,
        }
    }
}

impl fmt::Display for VerifierSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifierSpec::Graceful => write!(f, "graceful"),
            VerifierSpec::OddGraceful => write!(f, "odd-graceful"),
            VerifierSpec::SetOrderedGraceful => write!(f, "set-ordered-graceful"),
            VerifierSpec::SetOrderedOddGraceful => write!(f, "set-ordered-odd-graceful"),
            VerifierSpec::StronglyGraceful => write!(f, "strongly-graceful"),
            VerifierSpec::StronglyOddGraceful => write!(f, "strongly-odd-graceful"),
            VerifierSpec::KGraceful { k } => write!(f, "k-graceful({k})"),
            VerifierSpec::KdGraceful { k, d } => write!(f, "kd-graceful({k},{d})"),
            VerifierSpec::KdArithmetic { k, d } => write!(f, "kd-arithmetic({k},{d})"),
            VerifierSpec::KdEdgeAntimagicTotal { k, d } => {
                write!(f, "kd-edge-antimagic-total({k},{d})")
            }
            VerifierSpec::KdHarmonious { k, d } => write!(f, "kd-harmonious({k},{d})"),
            VerifierSpec::EdgeMagicTotal => write!(f, "edge-magic-total"),
            VerifierSpec::SuperEdgeMagicTotal => write!(f, "super-edge-magic-total"),
            VerifierSpec::EdgeMagicGraceful => write!(f, "edge-magic-graceful"),
            VerifierSpec::EdgeMagicTotalGraceful => write!(f, "edge-magic-total-graceful"),
            VerifierSpec::KLambdaMagic { k, lambda } => write!(f, "k-lambda-magic({k},{lambda})"),
            VerifierSpec::Felicitous => write!(f, "felicitous"),
            VerifierSpec::Harmonious { tree_exception: false } => write!(f, "harmonious"),
            VerifierSpec::Harmonious { tree_exception: true } => write!(f, "harmonious(tree)"),
            VerifierSpec::OddElegant => write!(f, "odd-elegant"),
            VerifierSpec::TotalGraceful => write!(f, "total-graceful"),
            VerifierSpec::GcdGraceful => write!(f, "gcd-graceful"),
            VerifierSpec::GcdOddGraceful => write!(f, "gcd-odd-graceful"),
            VerifierSpec::EdgeDifference { k: None } => write!(f, "edge-difference"),
            VerifierSpec::EdgeDifference { k: Some(k) } => write!(f, "edge-difference({k})"),
            VerifierSpec::GracefulDifference { k: None } => write!(f, "graceful-difference"),
            VerifierSpec::GracefulDifference { k: Some(k) } => {
                write!(f, "graceful-difference({k})")
            }
            VerifierSpec::FelicitousDifference { k: None } => write!(f, "felicitous-difference"),
            VerifierSpec::FelicitousDifference { k: Some(k) } => {
                write!(f, "felicitous-difference({k})")
            }
            VerifierSpec::Custom { target_edge_set, induced_rule } => {
                write!(f, "custom({target_edge_set:?}, {induced_rule})")
            }
        }
    }
}

impl FromStr for VerifierSpec {
    type Err = LabelingError;

    /// Parses the kind names as printed by `Display`, e.g. `kd-graceful(2,3)`
    /// or `edge-difference` (detected constant) vs `edge-difference(4)`. The
    /// `custom` kind carries a target set and so has no string form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(open) => {
                let close = s
                    .rfind(')')
                    .ok_or_else(|| LabelingError::ParseSpec(format!("unclosed '(' in {s:?}")))?;
                let args: Vec<&str> = s[open + 1..close].split(',').map(str::trim).collect();
                (&s[..open], args)
            }
            None => (s, Vec::new()),
        };
        let unsigned = |args: &[&str], want: usize| -> Result<Vec<u64>, LabelingError> {
            if args.len() != want {
                return Err(LabelingError::ParseSpec(format!(
                    "{name} takes {want} argument(s), got {}",
                    args.len()
                )));
            }
            args.iter()
                .map(|a| {
                    a.parse::<u64>().map_err(|_| {
                        LabelingError::ParseSpec(format!("bad argument {a:?} for {name}"))
                    })
                })
                .collect()
        };
        let signed_one = |args: &[&str]| -> Result<Option<i64>, LabelingError> {
            match args.len() {
                0 => Ok(None),
                1 => args[0]
                    .parse::<i64>()
                    .map(Some)
                    .map_err(|_| LabelingError::ParseSpec(format!("bad argument for {name}"))),
                n => Err(LabelingError::ParseSpec(format!(
                    "{name} takes at most one argument, got {n}"
                ))),
            }
        };
        let spec = match name {
            "graceful" => VerifierSpec::Graceful,
            "odd-graceful" => VerifierSpec::OddGraceful,
            "set-ordered-graceful" => VerifierSpec::SetOrderedGraceful,
            "set-ordered-odd-graceful" => VerifierSpec::SetOrderedOddGraceful,
            "strongly-graceful" => VerifierSpec::StronglyGraceful,
            "strongly-odd-graceful" => VerifierSpec::StronglyOddGraceful,
            "k-graceful" => {
                let a = unsigned(&args, 1)?;
                VerifierSpec::KGraceful { k: a[0] }
            }
            "kd-graceful" => {
                let a = unsigned(&args, 2)?;
                VerifierSpec::KdGraceful { k: a[0], d: a[1] }
            }
            "kd-arithmetic" => {
                let a = unsigned(&args, 2)?;
                VerifierSpec::KdArithmetic { k: a[0], d: a[1] }
            }
            "kd-edge-antimagic-total" => {
                let a = unsigned(&args, 2)?;
                VerifierSpec::KdEdgeAntimagicTotal { k: a[0], d: a[1] }
            }
            "kd-harmonious" => {
                let a = unsigned(&args, 2)?;
                VerifierSpec::KdHarmonious { k: a[0], d: a[1] }
            }
            "edge-magic-total" => VerifierSpec::EdgeMagicTotal,
            "super-edge-magic-total" => VerifierSpec::SuperEdgeMagicTotal,
            "edge-magic-graceful" => VerifierSpec::EdgeMagicGraceful,
            "edge-magic-total-graceful" => VerifierSpec::EdgeMagicTotalGraceful,
            "k-lambda-magic" => {
                if args.len() != 2 {
                    return Err(LabelingError::ParseSpec(
                        "k-lambda-magic takes two arguments".into(),
                    ));
                }
                let parse = |a: &str| {
                    a.parse::<i64>().map_err(|_| {
                        LabelingError::ParseSpec(format!("bad argument {a:?} for k-lambda-magic"))
                    })
                };
                VerifierSpec::KLambdaMagic { k: parse(args[0])?, lambda: parse(args[1])? }
            }
            "felicitous" => VerifierSpec::Felicitous,
            "harmonious" => match args.as_slice() {
                [] => VerifierSpec::Harmonious { tree_exception: false },
                ["tree"] => VerifierSpec::Harmonious { tree_exception: true },
                _ => {
                    return Err(LabelingError::ParseSpec(
                        "harmonious takes no argument or the word tree".into(),
                    ))
                }
            },
            "odd-elegant" => VerifierSpec::OddElegant,
            "total-graceful" => VerifierSpec::TotalGraceful,
            "gcd-graceful" => VerifierSpec::GcdGraceful,
            "gcd-odd-graceful" => VerifierSpec::GcdOddGraceful,
            "edge-difference" => VerifierSpec::EdgeDifference { k: signed_one(&args)? },
            "graceful-difference" => VerifierSpec::GracefulDifference { k: signed_one(&args)? },
            "felicitous-difference" => {
                VerifierSpec::FelicitousDifference { k: signed_one(&args)? }
            }
            other => {
                return Err(LabelingError::ParseSpec(format!("unknown labeling kind {other:?}")))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips_through_display() {
        for text in [
            "graceful",
            "odd-graceful",
            "set-ordered-graceful",
            "strongly-odd-graceful",
            "k-graceful(2)",
            "kd-graceful(2,3)",
            "kd-arithmetic(1,2)",
            "kd-edge-antimagic-total(4,1)",
            "kd-harmonious(1,1)",
            "edge-magic-total",
            "super-edge-magic-total",
            "edge-magic-graceful",
            "edge-magic-total-graceful",
            "k-lambda-magic(5,-1)",
            "felicitous",
            "harmonious",
            "harmonious(tree)",
            "odd-elegant",
            "total-graceful",
            "gcd-graceful",
            "gcd-odd-graceful",
            "edge-difference",
            "edge-difference(4)",
            "graceful-difference(0)",
            "felicitous-difference",
        ] {
            let spec: VerifierSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!("kd-graceful(2,0)".parse::<VerifierSpec>().is_err());
        assert!("kd-harmonious(0,1)".parse::<VerifierSpec>().is_err());
        assert!("k-lambda-magic(3,0)".parse::<VerifierSpec>().is_err());
        assert!("no-such-kind".parse::<VerifierSpec>().is_err());
        assert!("k-graceful".parse::<VerifierSpec>().is_err());
        assert!("k-graceful(1,2)".parse::<VerifierSpec>().is_err());
    }

    #[test]
    fn json_shape_is_tagged() {
        let spec = VerifierSpec::KdGraceful { k: 2, d: 3 };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"kind":"kd-graceful","k":2,"d":3}"#);
        assert_eq!(serde_json::from_str::<VerifierSpec>(&json).unwrap(), spec);
    }
}
