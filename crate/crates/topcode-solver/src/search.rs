//! The backtracking engines: one for vertex-only kinds, one for kinds that
//! place explicit edge colors.

use crate::{SolverError, DEFAULT_MAX_NODES, MAX_NODES_ENV};
use std::collections::{HashMap, HashSet};
use topcode_graph::Graph;
use topcode_labelings::{verify, Color, Labeling, VerifierSpec};

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Stop after this many labelings.
    pub limit: Option<usize>,
    /// Emit one representative per dual-complement pair (difference-based
    /// kinds only): the lowest-index vertex carrying an extreme label must
    /// carry the low one.
    pub symmetry_break: bool,
}

/// All labelings passing the spec, depth-first, vertices in index order and
/// labels ascending.
pub fn search(
    g: &Graph,
    spec: &VerifierSpec,
    options: &SearchOptions,
) -> Result<Vec<Labeling>, SolverError> {
    if options.limit == Some(0) {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    run(g, spec, options.symmetry_break, &mut |labeling| {
        found.push(labeling);
        options.limit.is_none_or(|limit| found.len() < limit)
    })?;
    Ok(found)
}

pub fn exists_labeling(g: &Graph, spec: &VerifierSpec) -> Result<bool, SolverError> {
    let mut seen = false;
    run(g, spec, false, &mut |_| {
        seen = true;
        false
    })?;
    Ok(seen)
}

pub fn count_labelings(g: &Graph, spec: &VerifierSpec) -> Result<u64, SolverError> {
    let mut count = 0u64;
    run(g, spec, false, &mut |_| {
        count += 1;
        true
    })?;
    Ok(count)
}

/// The visitor returns false to stop the search.
fn run(
    g: &Graph,
    spec: &VerifierSpec,
    symmetry_break: bool,
    visit: &mut dyn FnMut(Labeling) -> bool,
) -> Result<(), SolverError> {
    spec.validate()?;
    if g.p() == 0 {
        let labeling = if needs_edge_colors(spec) {
            Labeling::total(Vec::new(), Vec::new())
        } else {
            Labeling::vertex_only(Vec::new())
        };
        if verify(g, &labeling, spec)?.pass {
            visit(labeling);
        }
        return Ok(());
    }
    if let Some(kind) = total_plan(spec) {
        check_cap(g.p() + g.q(), g.p())?;
        let mut engine = TotalSearch::new(g, spec, kind);
        engine.descend(0, visit);
        return Ok(());
    }
    let Some(plan) = vertex_plan(spec, g) else {
        return Err(SolverError::UnsupportedKind(spec.to_string()));
    };
    check_cap(plan.universe.len(), g.p())?;
    let mut engine = VertexSearch {
        g,
        spec,
        symmetry_break: symmetry_break && plan.difference_family,
        universe: plan.universe,
        injectivity: plan.injectivity,
        tracker: plan.tracker,
        colors: Vec::with_capacity(g.p()),
        counts: HashMap::new(),
        doubled: 0,
    };
    engine.descend(visit);
    Ok(())
}

fn check_cap(universe_size: usize, p: usize) -> Result<(), SolverError> {
    let cap = std::env::var(MAX_NODES_ENV)
        .ok()
        .and_then(|value| value.parse().ok())
        .unwrap_or(DEFAULT_MAX_NODES);
    let estimate =
        (universe_size as u128).checked_pow(p as u32).unwrap_or(u128::MAX);
    if estimate > cap {
        return Err(SolverError::UniverseTooLarge { estimate, cap });
    }
    Ok(())
}

fn needs_edge_colors(spec: &VerifierSpec) -> bool {
    total_plan(spec).is_some()
}

// ---------------------------------------------------------------------------
// vertex-only kinds

/// How an induced edge value is computed during pruning; mirrors the
/// verifier's rules.
#[derive(Clone, Copy)]
enum Value {
    AbsDiff,
    PlainSum,
    SumMod(u64),
    SumPlusMod { k: u64, m: u64 },
    Gcd,
}

impl Value {
    fn eval(self, a: Color, b: Color) -> i128 {
        match self {
            Value::AbsDiff => (a as i128 - b as i128).abs(),
            Value::PlainSum => a as i128 + b as i128,
            Value::SumMod(m) => ((a as i128 + b as i128) % m as i128) as i128,
            Value::SumPlusMod { k, m } => {
                k as i128 + (a as i128 + b as i128 - k as i128).rem_euclid(m as i128)
            }
            Value::Gcd => gcd(a, b) as i128,
        }
    }
}

fn gcd(a: Color, b: Color) -> Color {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

enum Injectivity {
    Strict,
    /// At most one color may appear twice (harmonious trees).
    OneDouble,
    Free,
}

enum Tracker {
    None,
    /// Induced values must land in a fixed multiset.
    Multiset { rule: Value, remaining: HashMap<i128, usize> },
    /// Induced values must all differ.
    Distinct { rule: Value, used: HashSet<i128> },
    /// Vertex colors and induced values share one pool of distinct values
    /// within [1, hi].
    Pool { used: HashSet<i128>, hi: i128 },
}

struct VertexPlan {
    universe: Vec<Color>,
    injectivity: Injectivity,
    tracker: Tracker,
    /// Eligible for the dual-complement symmetry break.
    difference_family: bool,
}

fn range(lo: i128, hi: i128) -> Vec<Color> {
    if hi < lo {
        Vec::new()
    } else {
        (lo..=hi).map(|c| c as Color).collect()
    }
}

fn multiset(rule: Value, values: impl Iterator<Item = i128>) -> Tracker {
    let mut remaining: HashMap<i128, usize> = HashMap::new();
    for value in values {
        *remaining.entry(value).or_insert(0) += 1;
    }
    Tracker::Multiset { rule, remaining }
}

fn odd_values(q: i128) -> impl Iterator<Item = i128> {
    (0..q).map(|i| 2 * i + 1)
}

fn vertex_plan(spec: &VerifierSpec, g: &Graph) -> Option<VertexPlan> {
    let q = g.q() as i128;
    let p = g.p() as i128;
    let plan = match *spec {
        VerifierSpec::Graceful
        | VerifierSpec::SetOrderedGraceful
        | VerifierSpec::StronglyGraceful => VertexPlan {
            universe: range(0, q),
            injectivity: Injectivity::Strict,
            tracker: multiset(Value::AbsDiff, 1..=q),
            difference_family: true,
        },
        VerifierSpec::OddGraceful
        | VerifierSpec::SetOrderedOddGraceful
        | VerifierSpec::StronglyOddGraceful => VertexPlan {
            universe: range(0, 2 * q - 1),
            injectivity: Injectivity::Strict,
            tracker: multiset(Value::AbsDiff, odd_values(q)),
            difference_family: true,
        },
        VerifierSpec::KGraceful { k } => VertexPlan {
            universe: range(0, q + k as i128 - 1),
            injectivity: Injectivity::Strict,
            tracker: multiset(Value::AbsDiff, k as i128..=q + k as i128 - 1),
            difference_family: true,
        },
        VerifierSpec::KdGraceful { k, d } => VertexPlan {
            universe: range(0, k as i128 + (q - 1) * d as i128),
            injectivity: Injectivity::Strict,
            tracker: multiset(Value::AbsDiff, (0..q).map(|i| k as i128 + i * d as i128)),
            difference_family: true,
        },
        VerifierSpec::KdArithmetic { k, d } => VertexPlan {
            universe: range(0, k as i128 + (q - 1) * d as i128),
            injectivity: Injectivity::Strict,
            tracker: multiset(Value::PlainSum, (0..q).map(|i| k as i128 + i * d as i128)),
            difference_family: false,
        },
        VerifierSpec::KdHarmonious { k, d } => VertexPlan {
            universe: range(0, k as i128 + (q - 1) * d as i128),
            injectivity: Injectivity::Strict,
            tracker: if q > 0 {
                multiset(
                    Value::SumPlusMod { k, m: g.q() as u64 * d },
                    (0..q).map(|i| k as i128 + i * d as i128),
                )
            } else {
                Tracker::None
            },
            difference_family: false,
        },
        VerifierSpec::Felicitous => VertexPlan {
            universe: range(0, q),
            injectivity: Injectivity::Strict,
            tracker: if q > 0 {
                Tracker::Distinct { rule: Value::SumMod(g.q() as u64), used: HashSet::new() }
            } else {
                Tracker::None
            },
            difference_family: false,
        },
        VerifierSpec::Harmonious { tree_exception } => VertexPlan {
            universe: range(0, q - 1),
            injectivity: if tree_exception {
                Injectivity::OneDouble
            } else {
                Injectivity::Strict
            },
            tracker: if q > 0 {
                multiset(Value::SumMod(g.q() as u64), 0..q)
            } else {
                Tracker::None
            },
            difference_family: false,
        },
        VerifierSpec::OddElegant => VertexPlan {
            universe: range(0, 2 * q - 1),
            injectivity: Injectivity::Strict,
            tracker: if q > 0 {
                multiset(Value::SumMod(2 * g.q() as u64), odd_values(q))
            } else {
                Tracker::None
            },
            difference_family: false,
        },
        VerifierSpec::TotalGraceful => VertexPlan {
            universe: range(1, p + q),
            injectivity: Injectivity::Free,
            tracker: Tracker::Pool { used: HashSet::new(), hi: p + q },
            difference_family: false,
        },
        VerifierSpec::GcdGraceful => VertexPlan {
            universe: range(1, 2 * q),
            injectivity: Injectivity::Free,
            tracker: multiset(Value::Gcd, 1..=q),
            difference_family: false,
        },
        VerifierSpec::GcdOddGraceful => VertexPlan {
            universe: range(1, 2 * q),
            injectivity: Injectivity::Free,
            tracker: multiset(Value::Gcd, odd_values(q)),
            difference_family: false,
        },
        _ => return None,
    };
    Some(plan)
}

struct VertexSearch<'a> {
    g: &'a Graph,
    spec: &'a VerifierSpec,
    symmetry_break: bool,
    universe: Vec<Color>,
    injectivity: Injectivity,
    tracker: Tracker,
    colors: Vec<Color>,
    counts: HashMap<Color, usize>,
    doubled: usize,
}

/// What a successful placement changed, so it can be reverted.
struct Placed {
    tracked: Vec<i128>,
    pool_vertex: bool,
}

impl VertexSearch<'_> {
    fn descend(&mut self, visit: &mut dyn FnMut(Labeling) -> bool) -> bool {
        let v = self.colors.len();
        if v == self.g.p() {
            return self.emit(visit);
        }
        for index in 0..self.universe.len() {
            let color = self.universe[index];
            let Some(placed) = self.place(v, color) else {
                continue;
            };
            self.colors.push(color);
            let keep_going = self.descend(visit);
            self.colors.pop();
            self.unplace(color, placed);
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn place(&mut self, v: usize, color: Color) -> Option<Placed> {
        match self.injectivity {
            Injectivity::Strict if self.counts.get(&color).copied().unwrap_or(0) > 0 => {
                return None;
            }
            Injectivity::OneDouble => {
                let count = self.counts.get(&color).copied().unwrap_or(0);
                if count >= 2 || (count == 1 && self.doubled >= 1) {
                    return None;
                }
            }
            _ => {}
        }
        let mut placed = Placed { tracked: Vec::new(), pool_vertex: false };
        if let Tracker::Pool { used, .. } = &mut self.tracker {
            if !used.insert(color as i128) {
                return None;
            }
            placed.pool_vertex = true;
        }
        for u in self.g.neighbors(v) {
            if u >= v {
                continue;
            }
            let other = self.colors[u];
            let admitted = match &mut self.tracker {
                Tracker::None => true,
                Tracker::Multiset { rule, remaining } => {
                    let value = rule.eval(color, other);
                    match remaining.get_mut(&value) {
                        Some(count) if *count > 0 => {
                            *count -= 1;
                            placed.tracked.push(value);
                            true
                        }
                        _ => false,
                    }
                }
                Tracker::Distinct { rule, used } => {
                    let value = rule.eval(color, other);
                    if used.insert(value) {
                        placed.tracked.push(value);
                        true
                    } else {
                        false
                    }
                }
                Tracker::Pool { used, hi } => {
                    let value = Value::AbsDiff.eval(color, other);
                    if value >= 1 && value <= *hi && used.insert(value) {
                        placed.tracked.push(value);
                        true
                    } else {
                        false
                    }
                }
            };
            if !admitted {
                self.unplace(color, placed);
                return None;
            }
        }
        let count = self.counts.entry(color).or_insert(0);
        *count += 1;
        if *count == 2 {
            self.doubled += 1;
        }
        Some(placed)
    }

    fn unplace(&mut self, color: Color, placed: Placed) {
        match &mut self.tracker {
            Tracker::None => {}
            Tracker::Multiset { remaining, .. } => {
                for value in placed.tracked {
                    *remaining.get_mut(&value).expect("tracked value") += 1;
                }
            }
            Tracker::Distinct { used, .. } | Tracker::Pool { used, .. } => {
                for value in placed.tracked {
                    used.remove(&value);
                }
                if placed.pool_vertex {
                    used.remove(&(color as i128));
                }
            }
        }
        if let Some(count) = self.counts.get_mut(&color) {
            if *count == 2 {
                self.doubled -= 1;
            }
            *count = count.saturating_sub(1);
        }
    }

    fn emit(&mut self, visit: &mut dyn FnMut(Labeling) -> bool) -> bool {
        let labeling = Labeling::vertex_only(self.colors.clone());
        let report =
            verify(self.g, &labeling, self.spec).expect("vertex kinds verify without errors");
        if !report.pass {
            return true;
        }
        if self.symmetry_break && !self.is_representative() {
            return true;
        }
        visit(labeling)
    }

    /// Keeps the member of each dual-complement pair whose first extreme
    /// vertex carries the low label.
    fn is_representative(&self) -> bool {
        let Some(&hi) = self.universe.last() else {
            return true;
        };
        if hi == 0 {
            return true;
        }
        match self.colors.iter().find(|&&c| c == 0 || c == hi) {
            Some(&c) => c == 0,
            None => true,
        }
    }
}

// ---------------------------------------------------------------------------
// kinds with explicit edge colors

#[derive(Clone, Copy)]
enum TotalKind {
    Magic,
    SuperMagic,
    MagicGraceful,
    TotalMagicGraceful,
    Antimagic,
    LambdaMagic { k: i64, lambda: i64 },
}

fn total_plan(spec: &VerifierSpec) -> Option<TotalKind> {
    match *spec {
        VerifierSpec::EdgeMagicTotal => Some(TotalKind::Magic),
        VerifierSpec::SuperEdgeMagicTotal => Some(TotalKind::SuperMagic),
        VerifierSpec::EdgeMagicGraceful => Some(TotalKind::MagicGraceful),
        VerifierSpec::EdgeMagicTotalGraceful => Some(TotalKind::TotalMagicGraceful),
        VerifierSpec::KdEdgeAntimagicTotal { .. } => Some(TotalKind::Antimagic),
        VerifierSpec::KLambdaMagic { k, lambda } => Some(TotalKind::LambdaMagic { k, lambda }),
        _ => None,
    }
}

struct TotalSearch<'a> {
    g: &'a Graph,
    spec: &'a VerifierSpec,
    kind: TotalKind,
    total: i128,
    /// Edges whose later endpoint is this vertex, by stored index.
    pending: Vec<Vec<usize>>,
    vertex_colors: Vec<Color>,
    edge_colors: Vec<Color>,
    /// Which of 1..=total is taken (index 0 unused). For the lambda kind,
    /// vertices and edges track separately.
    used: Vec<bool>,
    used_edge: Vec<bool>,
    constant: Option<i64>,
    /// Remaining target sums for the antimagic kind, in ascending order with
    /// multiplicity.
    remaining_sums: Vec<i128>,
}

impl<'a> TotalSearch<'a> {
    fn new(g: &'a Graph, spec: &'a VerifierSpec, kind: TotalKind) -> Self {
        let total = (g.p() + g.q()) as i128;
        let mut pending = vec![Vec::new(); g.p()];
        for (index, &(u, v)) in g.edges().iter().enumerate() {
            pending[u.max(v)].push(index);
        }
        let remaining_sums = match *spec {
            VerifierSpec::KdEdgeAntimagicTotal { k, d } => {
                (0..g.q() as i128).map(|i| k as i128 + i * d as i128).collect()
            }
            _ => Vec::new(),
        };
        TotalSearch {
            g,
            spec,
            kind,
            total,
            pending,
            vertex_colors: Vec::with_capacity(g.p()),
            edge_colors: vec![0; g.q()],
            used: vec![false; (total + 1) as usize],
            used_edge: vec![false; (total + 1) as usize],
            constant: None,
            remaining_sums,
        }
    }

    fn vertex_bound(&self) -> i128 {
        match self.kind {
            TotalKind::SuperMagic => self.g.p() as i128,
            _ => self.total,
        }
    }

    fn descend(&mut self, v: usize, visit: &mut dyn FnMut(Labeling) -> bool) -> bool {
        if v == self.g.p() {
            let labeling =
                Labeling::total(self.vertex_colors.clone(), self.edge_colors.clone());
            let report = verify(self.g, &labeling, self.spec)
                .expect("total kinds verify without errors");
            if !report.pass {
                return true;
            }
            return visit(labeling);
        }
        for color in 1..=self.vertex_bound() {
            if self.used[color as usize] {
                continue;
            }
            self.used[color as usize] = true;
            self.vertex_colors.push(color as Color);
            let keep_going = self.assign_edges(v, 0, visit);
            self.vertex_colors.pop();
            self.used[color as usize] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn assign_edges(
        &mut self,
        v: usize,
        position: usize,
        visit: &mut dyn FnMut(Labeling) -> bool,
    ) -> bool {
        if position == self.pending[v].len() {
            return self.descend(v + 1, visit);
        }
        let edge_index = self.pending[v][position];
        let (a, b) = self.g.edges()[edge_index];
        let fu = self.vertex_colors[a] as i128;
        let fv = self.vertex_colors[b] as i128;
        let lambda_kind = matches!(self.kind, TotalKind::LambdaMagic { .. });
        let edge_low = match self.kind {
            TotalKind::SuperMagic => self.g.p() as i128 + 1,
            _ => 1,
        };

        let mut step = |search: &mut Self, fe: i128, set_constant: Option<i64>| -> bool {
            if fe < edge_low || fe > search.total {
                return true;
            }
            let pool = if lambda_kind { &mut search.used_edge } else { &mut search.used };
            if pool[fe as usize] {
                return true;
            }
            pool[fe as usize] = true;
            search.edge_colors[edge_index] = fe as Color;
            let saved_constant = search.constant;
            if set_constant.is_some() {
                search.constant = set_constant;
            }
            let keep_going = search.assign_edges(v, position + 1, visit);
            search.constant = saved_constant;
            let pool = if lambda_kind { &mut search.used_edge } else { &mut search.used };
            pool[fe as usize] = false;
            keep_going
        };

        match self.kind {
            TotalKind::Magic | TotalKind::SuperMagic => match self.constant {
                Some(c) => step(self, c as i128 - fu - fv, None),
                None => {
                    for fe in edge_low..=self.total {
                        let constant = (fu + fv + fe) as i64;
                        if !step(self, fe, Some(constant)) {
                            return false;
                        }
                    }
                    true
                }
            },
            TotalKind::MagicGraceful => match self.constant {
                Some(k) => {
                    let mut candidates = vec![fu + fv - k as i128];
                    if k != 0 {
                        candidates.push(fu + fv + k as i128);
                    }
                    candidates.sort_unstable();
                    for fe in candidates {
                        if !step(self, fe, None) {
                            return false;
                        }
                    }
                    true
                }
                None => {
                    for fe in edge_low..=self.total {
                        let constant = (fu + fv - fe).abs() as i64;
                        if !step(self, fe, Some(constant)) {
                            return false;
                        }
                    }
                    true
                }
            },
            TotalKind::TotalMagicGraceful => match self.constant {
                Some(k) => step(self, k as i128 - (fu - fv).abs(), None),
                None => {
                    for fe in edge_low..=self.total {
                        let constant = (fe + (fu - fv).abs()) as i64;
                        if !step(self, fe, Some(constant)) {
                            return false;
                        }
                    }
                    true
                }
            },
            TotalKind::Antimagic => {
                for index in 0..self.remaining_sums.len() {
                    let sum = self.remaining_sums[index];
                    if index > 0 && self.remaining_sums[index - 1] == sum {
                        continue;
                    }
                    self.remaining_sums.remove(index);
                    let keep_going = step(self, sum - fu - fv, None);
                    self.remaining_sums.insert(index, sum);
                    if !keep_going {
                        return false;
                    }
                }
                true
            }
            TotalKind::LambdaMagic { k, lambda } => {
                let numerator = fu + fv - k as i128;
                if numerator % lambda as i128 != 0 {
                    return true;
                }
                step(self, numerator / lambda as i128, None)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(name: &str) -> VerifierSpec {
        name.parse().unwrap()
    }

    #[test]
    fn path_on_three_vertices_has_four_graceful_labelings() {
        let labelings =
            search(&Graph::path(3), &spec("graceful"), &SearchOptions::default()).unwrap();
        assert_eq!(labelings.len(), 4);
        assert!(labelings.contains(&Labeling::vertex_only(vec![0, 2, 1])));
        assert_eq!(count_labelings(&Graph::path(3), &spec("graceful")).unwrap(), 4);
    }

    #[test]
    fn single_edge_has_two_graceful_labelings() {
        let labelings =
            search(&Graph::path(2), &spec("graceful"), &SearchOptions::default()).unwrap();
        assert_eq!(
            labelings,
            vec![Labeling::vertex_only(vec![0, 1]), Labeling::vertex_only(vec![1, 0])]
        );
    }

    #[test]
    fn symmetry_break_halves_the_graceful_stream() {
        let options = SearchOptions { limit: None, symmetry_break: true };
        let labelings = search(&Graph::path(2), &spec("graceful"), &options).unwrap();
        assert_eq!(labelings, vec![Labeling::vertex_only(vec![0, 1])]);
        let p3 = search(&Graph::path(3), &spec("graceful"), &options).unwrap();
        assert_eq!(p3.len(), 2);
    }

    #[test]
    fn triangle_is_graceful_but_not_odd_graceful() {
        assert!(exists_labeling(&Graph::cycle(3), &spec("graceful")).unwrap());
        let odd =
            search(&Graph::cycle(3), &spec("odd-graceful"), &SearchOptions::default()).unwrap();
        assert!(odd.is_empty());
    }

    #[test]
    fn single_edge_magic_search_finds_constant_six() {
        let labelings =
            search(&Graph::path(2), &spec("edge-magic-total"), &SearchOptions::default())
                .unwrap();
        // all six placements of {1,2,3} on two vertices and one edge work
        assert_eq!(labelings.len(), 6);
        assert!(labelings.contains(&Labeling::total(vec![1, 2], vec![3])));
        for labeling in &labelings {
            let report =
                verify(&Graph::path(2), labeling, &spec("edge-magic-total")).unwrap();
            assert_eq!(report.derived_constant, Some(6));
        }
    }

    #[test]
    fn limits_stop_the_stream_early() {
        let options = SearchOptions { limit: Some(1), symmetry_break: false };
        let labelings = search(&Graph::path(3), &spec("graceful"), &options).unwrap();
        assert_eq!(labelings.len(), 1);
        assert_eq!(labelings[0], Labeling::vertex_only(vec![0, 2, 1]));
    }

    #[test]
    fn unsupported_kinds_are_refused() {
        assert!(matches!(
            search(&Graph::path(2), &spec("edge-difference"), &SearchOptions::default()),
            Err(SolverError::UnsupportedKind(_))
        ));
    }

    #[test]
    fn oversized_universes_are_refused() {
        let big = Graph::path(12);
        assert!(matches!(
            search(&big, &spec("odd-graceful"), &SearchOptions::default()),
            Err(SolverError::UniverseTooLarge { .. })
        ));
    }

    #[test]
    fn super_magic_single_edge() {
        let labelings =
            search(&Graph::path(2), &spec("super-edge-magic-total"), &SearchOptions::default())
                .unwrap();
        assert_eq!(
            labelings,
            vec![Labeling::total(vec![1, 2], vec![3]), Labeling::total(vec![2, 1], vec![3])]
        );
    }

    #[test]
    fn lambda_magic_solutions_reverify() {
        let labelings = search(
            &Graph::path(3),
            &spec("k-lambda-magic(0,1)"),
            &SearchOptions::default(),
        )
        .unwrap();
        assert!(!labelings.is_empty());
        for labeling in &labelings {
            assert!(verify(&Graph::path(3), labeling, &spec("k-lambda-magic(0,1)"))
                .unwrap()
                .pass);
        }
    }

    #[test]
    fn empty_graph_yields_the_empty_labeling() {
        let g = Graph::new(0, vec![]).unwrap();
        let labelings = search(&g, &spec("graceful"), &SearchOptions::default()).unwrap();
        assert_eq!(labelings, vec![Labeling::vertex_only(vec![])]);
    }
}
