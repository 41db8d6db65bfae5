//! One verifier per labeling family, sharing a small toolkit of checks.

use crate::{apply_rule, Color, Failure, InducedRule, Labeling, VerifierSpec, VerifyReport};
use std::collections::HashMap;
use topcode_graph::Graph;

pub(crate) fn run(g: &Graph, f: &Labeling, spec: &VerifierSpec) -> VerifyReport {
    let mut ctx = Ctx { g, f, failures: Vec::new() };
    let q = g.q() as i128;
    let mut derived = None;
    match *spec {
        VerifierSpec::Graceful => ctx.graceful(),
        VerifierSpec::OddGraceful => ctx.odd_graceful(),
        VerifierSpec::SetOrderedGraceful => {
            ctx.graceful();
            ctx.check_set_ordered();
        }
        VerifierSpec::SetOrderedOddGraceful => {
            ctx.odd_graceful();
            ctx.check_set_ordered();
        }
        VerifierSpec::StronglyGraceful => {
            ctx.graceful();
            ctx.check_forced_matching(q);
        }
        VerifierSpec::StronglyOddGraceful => {
            ctx.odd_graceful();
            ctx.check_forced_matching(2 * q - 1);
        }
        VerifierSpec::KGraceful { k } => {
            let k = k as i128;
            ctx.check_vertex_injective("vertex-injectivity");
            ctx.check_vertex_max(q + k - 1);
            let colors = ctx.explicit_or_induced(InducedRule::AbsDiff);
            ctx.check_multiset("edge-color-set", colors, (k..=q + k - 1).collect());
        }
        VerifierSpec::KdGraceful { k, d } => {
            ctx.check_vertex_injective("vertex-injectivity");
            ctx.check_vertex_max(k as i128 + (q - 1) * d as i128);
            let colors = ctx.explicit_or_induced(InducedRule::AbsDiff);
            ctx.check_multiset("edge-color-set", colors, progression(k, d, g.q()));
        }
        VerifierSpec::KdArithmetic { k, d } => {
            ctx.check_vertex_injective("vertex-injectivity");
            ctx.check_vertex_max(k as i128 + (q - 1) * d as i128);
            let sums = ctx.plain_sums();
            ctx.check_multiset("edge-sum-set", sums, progression(k, d, g.q()));
        }
        VerifierSpec::KdEdgeAntimagicTotal { k, d } => {
            ctx.check_total_bijection();
            let edge_colors = ctx.f.edge_colors().expect("edge colors checked by caller");
            let sums = g
                .edges()
                .iter()
                .zip(edge_colors)
                .map(|(&(u, v), &e)| {
                    ctx.f.vertex_colors()[u] as i128
                        + ctx.f.vertex_colors()[v] as i128
                        + e as i128
                })
                .collect();
            ctx.check_multiset("total-sum-set", sums, progression(k, d, g.q()));
        }
        VerifierSpec::KdHarmonious { k, d } => {
            ctx.check_vertex_injective("vertex-injectivity");
            ctx.check_vertex_max(k as i128 + (q - 1) * d as i128);
            if g.q() > 0 {
                let colors =
                    ctx.explicit_or_induced(InducedRule::SumPlusMod { k, m: g.q() as u64 * d });
                ctx.check_multiset("edge-color-set", colors, progression(k, d, g.q()));
            }
        }
        VerifierSpec::EdgeMagicTotal => {
            derived = ctx.check_edge_constant("magic-sum", |a, b, e| a + b + e, None);
        }
        VerifierSpec::SuperEdgeMagicTotal => {
            derived = ctx.check_edge_constant("magic-sum", |a, b, e| a + b + e, None);
            let p = ctx.g.p() as i128;
            ctx.check_value_set(
                "vertex-color-set",
                ctx.f.vertex_colors().to_vec(),
                1..=p,
            );
            ctx.check_value_set(
                "edge-color-set",
                ctx.f.edge_colors().expect("edge colors checked by caller").to_vec(),
                p + 1..=p + q,
            );
        }
        VerifierSpec::EdgeMagicGraceful => {
            ctx.check_total_bijection();
            derived = ctx.check_edge_constant("magic-difference", |a, b, e| (a + b - e).abs(), None);
        }
        VerifierSpec::EdgeMagicTotalGraceful => {
            ctx.check_total_bijection();
            derived = ctx.check_edge_constant("magic-difference", |a, b, e| e + (a - b).abs(), None);
        }
        VerifierSpec::KLambdaMagic { k, lambda } => {
            let p = ctx.g.p() as i128;
            ctx.check_all_colors_within(1, p + q);
            ctx.check_vertex_injective("vertex-injectivity");
            ctx.check_edge_injective("edge-injectivity");
            let edge_colors = ctx.f.edge_colors().expect("edge colors checked by caller");
            for (index, (&(u, v), &e)) in g.edges().iter().zip(edge_colors).enumerate() {
                let lhs = ctx.f.vertex_colors()[u] as i128 + ctx.f.vertex_colors()[v] as i128;
                let rhs = k as i128 + lambda as i128 * e as i128;
                if lhs != rhs {
                    ctx.fail(
                        "magic-equation",
                        format!("edge {index}: {lhs} differs from k + lambda*{e} = {rhs}"),
                    );
                }
            }
        }
        VerifierSpec::Felicitous => {
            ctx.check_vertex_injective("vertex-injectivity");
            ctx.check_vertex_max(q);
            if g.q() > 0 {
                let colors = ctx.explicit_or_induced(InducedRule::SumMod { m: g.q() as u64 });
                ctx.check_distinct("edge-color-distinctness", &colors);
            }
        }
        VerifierSpec::Harmonious { tree_exception } => {
            ctx.check_vertex_max(q - 1);
            ctx.check_almost_injective(tree_exception);
            if g.q() > 0 {
                let colors = ctx.explicit_or_induced(InducedRule::SumMod { m: g.q() as u64 });
                ctx.check_multiset("edge-color-set", colors, (0..q).collect());
            }
        }
        VerifierSpec::OddElegant => {
            ctx.check_vertex_injective("vertex-injectivity");
            ctx.check_vertex_max(2 * q - 1);
            if g.q() > 0 {
                let colors = ctx.explicit_or_induced(InducedRule::SumMod { m: 2 * g.q() as u64 });
                ctx.check_multiset("edge-color-set", colors, odd_numbers(g.q()));
            }
        }
        VerifierSpec::TotalGraceful => {
            ctx.check_vertex_injective("vertex-injectivity");
            let colors = ctx.explicit_or_induced(InducedRule::AbsDiff);
            ctx.check_distinct("edge-color-distinctness", &colors);
            let p = ctx.g.p() as i128;
            let mut all: Vec<i128> =
                ctx.f.vertex_colors().iter().map(|&c| c as i128).collect();
            all.extend(colors);
            all.sort_unstable();
            all.dedup();
            if all != (1..=p + q).collect::<Vec<_>>() {
                ctx.fail(
                    "total-color-set",
                    format!("vertex and edge colors together must be exactly [1,{}]", p + q),
                );
            }
        }
        VerifierSpec::GcdGraceful => {
            ctx.check_vertex_min(1);
            let colors = ctx.explicit_or_induced(InducedRule::Gcd);
            ctx.check_multiset("edge-color-set", colors, (1..=q).collect());
        }
        VerifierSpec::GcdOddGraceful => {
            ctx.check_vertex_min(1);
            let colors = ctx.explicit_or_induced(InducedRule::Gcd);
            ctx.check_multiset("edge-color-set", colors, odd_numbers(g.q()));
        }
        VerifierSpec::EdgeDifference { k } => {
            ctx.check_coloring_min(1);
            derived = ctx.check_edge_constant("difference-constant", |a, b, e| e + (a - b).abs(), k);
        }
        VerifierSpec::GracefulDifference { k } => {
            ctx.check_coloring_min(1);
            derived =
                ctx.check_edge_constant("difference-constant", |a, b, e| ((a - b).abs() - e).abs(), k);
        }
        VerifierSpec::FelicitousDifference { k } => {
            ctx.check_coloring_min(1);
            derived = ctx.check_edge_constant("difference-constant", |a, b, e| (a + b - e).abs(), k);
        }
        VerifierSpec::Custom { ref target_edge_set, induced_rule } => {
            let colors = ctx.explicit_or_induced(induced_rule);
            ctx.check_multiset(
                "edge-color-set",
                colors,
                target_edge_set.iter().map(|&c| c as i128).collect(),
            );
        }
    }
    VerifyReport::from_failures(ctx.failures, derived)
}

/// The arithmetic progression S(k,d) = {k, k+d, ..., k+(q-1)d}.
fn progression(k: u64, d: u64, q: usize) -> Vec<i128> {
    (0..q as i128).map(|i| k as i128 + i * d as i128).collect()
}

/// The odd numbers [1, 2q-1].
fn odd_numbers(q: usize) -> Vec<i128> {
    (0..q as i128).map(|i| 2 * i + 1).collect()
}

struct Ctx<'a> {
    g: &'a Graph,
    f: &'a Labeling,
    failures: Vec<Failure>,
}

impl Ctx<'_> {
    fn fail(&mut self, condition: &str, witness: impl Into<String>) {
        self.failures.push(Failure { condition: condition.into(), witness: witness.into() });
    }

    fn graceful(&mut self) {
        self.check_vertex_injective("vertex-injectivity");
        self.check_vertex_max(self.g.q() as i128);
        let colors = self.explicit_or_induced(InducedRule::AbsDiff);
        self.check_multiset("edge-color-set", colors, (1..=self.g.q() as i128).collect());
    }

    fn odd_graceful(&mut self) {
        self.check_vertex_injective("vertex-injectivity");
        self.check_vertex_max(2 * self.g.q() as i128 - 1);
        let colors = self.explicit_or_induced(InducedRule::AbsDiff);
        self.check_multiset("edge-color-set", colors, odd_numbers(self.g.q()));
    }

    fn check_vertex_injective(&mut self, condition: &str) {
        if let Some(value) = first_duplicate(self.f.vertex_colors()) {
            self.fail(condition, format!("color {value} is used on more than one vertex"));
        }
    }

    fn check_edge_injective(&mut self, condition: &str) {
        let colors = self.f.edge_colors().expect("edge colors checked by caller");
        if let Some(value) = first_duplicate(colors) {
            self.fail(condition, format!("color {value} is used on more than one edge"));
        }
    }

    /// At most one vertex color may repeat, and at most twice, when the tree
    /// exception is on; plain injectivity otherwise.
    fn check_almost_injective(&mut self, tree_exception: bool) {
        if !tree_exception {
            self.check_vertex_injective("vertex-injectivity");
            return;
        }
        let mut counts: HashMap<Color, usize> = HashMap::new();
        for &c in self.f.vertex_colors() {
            *counts.entry(c).or_insert(0) += 1;
        }
        let mut doubled: Vec<Color> = Vec::new();
        for (&value, &count) in &counts {
            if count > 2 {
                self.fail(
                    "vertex-injectivity",
                    format!("color {value} is used on {count} vertices"),
                );
                return;
            }
            if count == 2 {
                doubled.push(value);
            }
        }
        if doubled.len() > 1 {
            doubled.sort_unstable();
            self.fail(
                "vertex-injectivity",
                format!("colors {doubled:?} each repeat; only one may"),
            );
        }
    }

    fn check_vertex_max(&mut self, hi: i128) {
        for (v, &c) in self.f.vertex_colors().iter().enumerate() {
            if c as i128 > hi {
                self.fail("vertex-range", format!("vertex {v} has color {c}, beyond {hi}"));
                return;
            }
        }
    }

    fn check_vertex_min(&mut self, lo: Color) {
        for (v, &c) in self.f.vertex_colors().iter().enumerate() {
            if c < lo {
                self.fail("vertex-range", format!("vertex {v} has color {c}, below {lo}"));
                return;
            }
        }
    }

    /// Vertex and edge colors all at least `lo` (difference colorings).
    fn check_coloring_min(&mut self, lo: Color) {
        self.check_vertex_min(lo);
        let edge_colors = self.f.edge_colors().expect("edge colors checked by caller");
        for (index, &c) in edge_colors.iter().enumerate() {
            if c < lo {
                self.fail("edge-range", format!("edge {index} has color {c}, below {lo}"));
                return;
            }
        }
    }

    fn check_all_colors_within(&mut self, lo: i128, hi: i128) {
        for (v, &c) in self.f.vertex_colors().iter().enumerate() {
            if (c as i128) < lo || c as i128 > hi {
                self.fail("color-range", format!("vertex {v} has color {c}, outside [{lo},{hi}]"));
                return;
            }
        }
        let edge_colors = self.f.edge_colors().expect("edge colors checked by caller");
        for (index, &c) in edge_colors.iter().enumerate() {
            if (c as i128) < lo || c as i128 > hi {
                self.fail("color-range", format!("edge {index} has color {c}, outside [{lo},{hi}]"));
                return;
            }
        }
    }

    /// Vertex and edge colors together are exactly [1, p+q].
    fn check_total_bijection(&mut self) {
        let total = self.g.p() as i128 + self.g.q() as i128;
        let mut all: Vec<i128> = self.f.vertex_colors().iter().map(|&c| c as i128).collect();
        all.extend(
            self.f
                .edge_colors()
                .expect("edge colors checked by caller")
                .iter()
                .map(|&c| c as i128),
        );
        all.sort_unstable();
        if all != (1..=total).collect::<Vec<_>>() {
            self.fail(
                "total-bijection",
                format!("colors must be a bijection onto [1,{total}]"),
            );
        }
    }

    /// Induced colors for every edge; explicit edge colors, when present,
    /// must agree with the rule.
    fn explicit_or_induced(&mut self, rule: InducedRule) -> Vec<i128> {
        let induced: Vec<Color> = self
            .g
            .edges()
            .iter()
            .map(|&(u, v)| {
                apply_rule(rule, self.f.vertex_colors()[u], self.f.vertex_colors()[v])
            })
            .collect();
        if let Some(explicit) = self.f.edge_colors() {
            for (index, (&stored, &computed)) in explicit.iter().zip(&induced).enumerate() {
                if stored != computed {
                    self.fail(
                        "edge-color-consistency",
                        format!("edge {index} stores {stored} but the rule gives {computed}"),
                    );
                    break;
                }
            }
        }
        induced.into_iter().map(|c| c as i128).collect()
    }

    fn plain_sums(&mut self) -> Vec<i128> {
        let sums: Vec<i128> = self
            .g
            .edges()
            .iter()
            .map(|&(u, v)| {
                self.f.vertex_colors()[u] as i128 + self.f.vertex_colors()[v] as i128
            })
            .collect();
        if let Some(explicit) = self.f.edge_colors() {
            for (index, (&stored, &computed)) in explicit.iter().zip(&sums).enumerate() {
                if stored as i128 != computed {
                    self.fail(
                        "edge-color-consistency",
                        format!("edge {index} stores {stored} but the sum is {computed}"),
                    );
                    break;
                }
            }
        }
        sums
    }

    fn check_multiset(&mut self, condition: &str, mut actual: Vec<i128>, mut expected: Vec<i128>) {
        actual.sort_unstable();
        expected.sort_unstable();
        if actual != expected {
            let missing = expected.iter().find(|c| !actual.contains(c));
            let witness = match missing {
                Some(c) => format!("expected color {c} does not appear"),
                None => "a color appears more often than expected".to_string(),
            };
            self.fail(condition, witness);
        }
    }

    fn check_value_set(
        &mut self,
        condition: &str,
        values: Vec<Color>,
        expected: std::ops::RangeInclusive<i128>,
    ) {
        let mut values: Vec<i128> = values.into_iter().map(|c| c as i128).collect();
        values.sort_unstable();
        if values != expected.clone().collect::<Vec<_>>() {
            self.fail(
                condition,
                format!("colors must be exactly [{},{}]", expected.start(), expected.end()),
            );
        }
    }

    fn check_distinct(&mut self, condition: &str, colors: &[i128]) {
        let mut sorted = colors.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            self.fail(condition, format!("color {} repeats", w[0]));
        }
    }

    /// Detects (or takes as given) the constant of an edge function and
    /// enforces it on every edge. Returns the constant for the report.
    fn check_edge_constant(
        &mut self,
        condition: &str,
        function: fn(i64, i64, i64) -> i64,
        given: Option<i64>,
    ) -> Option<i64> {
        let edge_colors = self.f.edge_colors().expect("edge colors checked by caller");
        let mut constant = given;
        for (index, (&(u, v), &e)) in self.g.edges().iter().zip(edge_colors).enumerate() {
            let value = function(
                self.f.vertex_colors()[u] as i64,
                self.f.vertex_colors()[v] as i64,
                e as i64,
            );
            match constant {
                None => constant = Some(value),
                Some(c) if c != value => {
                    self.fail(condition, format!("edge {index} yields {value}, expected {c}"));
                    return constant;
                }
                Some(_) => {}
            }
        }
        constant
    }

    /// The edges whose endpoint colors sum to `target` must form a perfect
    /// matching.
    fn check_forced_matching(&mut self, target: i128) {
        let mut cover = vec![0usize; self.g.p()];
        for &(u, v) in self.g.edges() {
            let sum = self.f.vertex_colors()[u] as i128 + self.f.vertex_colors()[v] as i128;
            if sum == target {
                cover[u] += 1;
                cover[v] += 1;
            }
        }
        for (v, &count) in cover.iter().enumerate() {
            if count != 1 {
                self.fail(
                    "forced-matching",
                    format!(
                        "vertex {v} lies on {count} edges with color sum {target}, need exactly 1"
                    ),
                );
                return;
            }
        }
    }

    fn check_set_ordered(&mut self) {
        if let Some(witness) = set_ordered_violation(self.g, self.f.vertex_colors()) {
            self.fail("set-ordered", witness);
        }
    }
}

/// Checks whether some per-component choice of sides puts every color on one
/// side strictly below every color on the other. Returns a witness when not.
pub(crate) fn set_ordered_violation(g: &Graph, colors: &[Color]) -> Option<String> {
    let Some(bipartition) = g.bipartition() else {
        return Some("the graph is not bipartite".to_string());
    };
    if g.q() == 0 {
        return None;
    }
    let mut thresholds: Vec<Color> = colors.to_vec();
    thresholds.sort_unstable();
    thresholds.dedup();
    let components = g.components();
    let side_profile = |component: &[usize], in_x: bool| -> (Option<Color>, Option<Color>) {
        // (max, min) of the colors on one side of this component
        let side: Vec<Color> = component
            .iter()
            .filter(|v| bipartition.x.contains(v) == in_x)
            .map(|&v| colors[v])
            .collect();
        (side.iter().max().copied(), side.iter().min().copied())
    };
    let profiles: Vec<_> = components
        .iter()
        .map(|component| (side_profile(component, true), side_profile(component, false)))
        .collect();
    for &t in &thresholds {
        let all_orientable = profiles.iter().all(|&((max_a, min_a), (max_b, min_b))| {
            let a_low = max_a.is_none_or(|m| m <= t) && min_b.is_none_or(|m| m > t);
            let b_low = max_b.is_none_or(|m| m <= t) && min_a.is_none_or(|m| m > t);
            a_low || b_low
        });
        if all_orientable {
            return None;
        }
    }
    Some("no choice of sides separates the color sets".to_string())
}

fn first_duplicate(colors: &[Color]) -> Option<Color> {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
}
