//! Every-zero graphic groups.
//!
//! Translating every color of a labeled graph by `i - 1` modulo `n` yields a
//! family `{f_1, ..., f_n}` of labelings of the same graph.  The family is
//! closed under the operation `f_i ⊕_k f_j = f_λ` with
//! `λ = ((i + j - k - 1) mod n) + 1`, where the member `f_k` — *any* member —
//! plays the role of the zero; hence "every-zero".  On labels the operation
//! acts pointwise: `f_i(x) + f_j(x) - f_k(x) ≡ f_λ(x) (mod n)`.
//!
//! The group underlies two constructions implemented here: assigning group
//! elements to the vertices of a target graph so that every edge receives the
//! sum of its ends under a chosen zero ([`encrypt_graph`]), and recovering
//! such an assignment for a tree from its edge elements alone
//! ([`tree_group_coloring`]).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use topcode_graph::Graph;
use topcode_labelings::{Color, Labeling, LabelingError};

/// Errors raised by group construction and arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    /// A group needs at least one element.
    #[error("a graphic group needs at least one element")]
    EmptyGroup,
    /// In mixed mode the element count must equal the product of the moduli.
    #[error("mixed group of {n} elements does not match moduli {p_mod} x {q_mod}")]
    BadModulus { n: usize, p_mod: usize, q_mod: usize },
    /// Edge and mixed modes translate edge colors, so the base labeling must
    /// have them.
    #[error("edge translation needs a labeling with edge colors")]
    MissingEdgeColors,
    /// Element indices are 1-based and bounded by the group order.
    #[error("element index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    /// Exhaustive axiom checking is limited to small groups.
    #[error("axiom check is exhaustive and limited to {cap} elements, group has {n}")]
    TooLargeToCheck { n: usize, cap: usize },
    /// Tree colorings are only defined on connected acyclic graphs.
    #[error("graph is not a tree")]
    NotATree,
    /// One group element per edge (or per vertex when seeding) is required.
    #[error("expected {expected} element indices, got {got}")]
    AssignmentLength { expected: usize, got: usize },
    /// Tree edge assignments must be injective.
    #[error("element index {0} assigned to more than one edge")]
    DuplicateAssignment(usize),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// Which colors the translation `+ (i - 1) mod n` acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Vertex colors are translated modulo the group order; edge colors, if
    /// present, ride along unchanged.
    Vertex,
    /// Edge colors are translated modulo the group order; vertex colors ride
    /// along unchanged.
    Edge,
    /// Vertex and edge colors are translated independently: element
    /// `(s, k)` shifts vertex colors by `s` modulo `p_mod` and edge colors by
    /// `k` modulo `q_mod`.  The flat 1-based index is `s * q_mod + k + 1`.
    Mixed { p_mod: usize, q_mod: usize },
}

/// A finite family of labelings of one graph, closed under zero-parametric
/// addition.
///
/// Elements are indexed `1..=n`.  Groups built by [`build_group`] satisfy the
/// translation rule by construction; [`GraphicGroup::from_labelings`] accepts
/// any shape-compatible family, which [`check_axioms`] can then audit.
#[derive(Debug, Clone)]
pub struct GraphicGroup {
    graph: Graph,
    elements: Vec<Labeling>,
    mode: Mode,
}

impl GraphicGroup {
    /// Wraps an explicit family of labelings as a group.
    ///
    /// Every labeling must fit the graph, edge and mixed modes require edge
    /// colors throughout, and in mixed mode the family size must equal
    /// `p_mod * q_mod`.  The translation rule itself is *not* enforced here;
    /// run [`check_axioms`] to test it.
    pub fn from_labelings(
        graph: Graph,
        elements: Vec<Labeling>,
        mode: Mode,
    ) -> Result<Self, GroupError> {
        if elements.is_empty() {
            return Err(GroupError::EmptyGroup);
        }
        if let Mode::Mixed { p_mod, q_mod } = mode {
            if p_mod * q_mod != elements.len() {
                return Err(GroupError::BadModulus { n: elements.len(), p_mod, q_mod });
            }
        }
        for f in &elements {
            f.check_shape(&graph)?;
            if !matches!(mode, Mode::Vertex) && f.edge_colors().is_none() {
                return Err(GroupError::MissingEdgeColors);
            }
        }
        Ok(GraphicGroup { graph, elements, mode })
    }

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.elements.len()
    }

    /// The translation mode the group was built with.
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The underlying graph shared by all element labelings.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The element labelings in index order (`elements()[i - 1]` is `f_i`).
    pub fn elements(&self) -> &[Labeling] {
        &self.elements
    }

    /// The labeling of element `i` (1-based).
    pub fn element(&self, i: usize) -> Result<&Labeling, GroupError> {
        self.check_index(i)?;
        Ok(&self.elements[i - 1])
    }

    /// Adds elements `i` and `j` treating element `zero` as the identity.
    ///
    /// In the cyclic modes the result index is `((i + j - zero - 1) mod n) + 1`;
    /// in mixed mode the `(s, k)` coordinates combine independently modulo
    /// `p_mod` and `q_mod`.  Either way the labels obey
    /// `f_i(x) + f_j(x) - f_zero(x) ≡ f_result(x)` modulo the translation
    /// modulus of each color.
    pub fn add(&self, i: usize, j: usize, zero: usize) -> Result<usize, GroupError> {
        self.combine(i, j, zero, |a, b, z, m| (a + b - z).rem_euclid(m))
    }

    /// Subtracts element `j` from element `i` treating element `zero` as the
    /// identity, so that `add(subtract(i, j, zero), j, zero) == i`.
    ///
    /// In the cyclic modes the result index is `((i - j + zero - 1) mod n) + 1`.
    pub fn subtract(&self, i: usize, j: usize, zero: usize) -> Result<usize, GroupError> {
        self.combine(i, j, zero, |a, b, z, m| (a - b + z).rem_euclid(m))
    }

    fn combine(
        &self,
        i: usize,
        j: usize,
        zero: usize,
        op: fn(i128, i128, i128, i128) -> i128,
    ) -> Result<usize, GroupError> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_index(zero)?;
        match self.mode {
            Mode::Vertex | Mode::Edge => {
                let n = self.n() as i128;
                let raw = op(i as i128, j as i128, zero as i128, n);
                // The offsets above are 1-based, so `raw` lands in `0..n` and
                // shifts back by one.
                Ok(((raw - 1).rem_euclid(n)) as usize + 1)
            }
            Mode::Mixed { p_mod, q_mod } => {
                let (si, ki) = split(i, q_mod);
                let (sj, kj) = split(j, q_mod);
                let (sz, kz) = split(zero, q_mod);
                let s = op(si as i128, sj as i128, sz as i128, p_mod as i128) as usize;
                let k = op(ki as i128, kj as i128, kz as i128, q_mod as i128) as usize;
                Ok(s * q_mod + k + 1)
            }
        }
    }

    fn check_index(&self, i: usize) -> Result<(), GroupError> {
        if i < 1 || i > self.n() {
            return Err(GroupError::IndexOutOfRange { index: i, n: self.n() });
        }
        Ok(())
    }
}

/// Zero-based `(s, k)` coordinates of a 1-based mixed element index.
fn split(index: usize, q_mod: usize) -> (usize, usize) {
    ((index - 1) / q_mod, (index - 1) % q_mod)
}

/// Builds the translated family of `(graph, base)` with `n` elements.
///
/// Element `i` carries the base coloring shifted by `i - 1` on the mode's
/// domain; all colors on that domain are reduced into `0..modulus`, so when
/// the base already colors within the modulus, element 1 *is* the base.  In
/// mixed mode `n` must equal `p_mod * q_mod` and element `s * q_mod + k + 1`
/// shifts vertex colors by `s` and edge colors by `k`.
pub fn build_group(
    graph: &Graph,
    base: &Labeling,
    n: usize,
    mode: Mode,
) -> Result<GraphicGroup, GroupError> {
    if n < 1 {
        return Err(GroupError::EmptyGroup);
    }
    base.check_shape(graph)?;
    if !matches!(mode, Mode::Vertex) && base.edge_colors().is_none() {
        return Err(GroupError::MissingEdgeColors);
    }
    let elements = match mode {
        Mode::Vertex => (0..n)
            .map(|offset| {
                let vertex = shift(base.vertex_colors(), offset, n);
                match base.edge_colors() {
                    Some(edge) => Labeling::total(vertex, edge.to_vec()),
                    None => Labeling::vertex_only(vertex),
                }
            })
            .collect(),
        Mode::Edge => (0..n)
            .map(|offset| {
                let edge = shift(base.edge_colors().unwrap(), offset, n);
                Labeling::total(base.vertex_colors().to_vec(), edge)
            })
            .collect(),
        Mode::Mixed { p_mod, q_mod } => {
            if p_mod * q_mod != n {
                return Err(GroupError::BadModulus { n, p_mod, q_mod });
            }
            let mut elements = Vec::with_capacity(n);
            for s in 0..p_mod {
                for k in 0..q_mod {
                    let vertex = shift(base.vertex_colors(), s, p_mod);
                    let edge = shift(base.edge_colors().unwrap(), k, q_mod);
                    elements.push(Labeling::total(vertex, edge));
                }
            }
            elements
        }
    };
    GraphicGroup::from_labelings(graph.clone(), elements, mode)
}

/// Translates each color by `offset` modulo `modulus`.
fn shift(colors: &[Color], offset: usize, modulus: usize) -> Vec<Color> {
    let m = modulus as u128;
    colors
        .iter()
        .map(|&c| ((c as u128 + offset as u128) % m) as Color)
        .collect()
}

/// Upper bound on the group order accepted by [`check_axioms`].
pub const AXIOM_CHECK_CAP: usize = 64;

/// How many individual failures [`check_axioms`] records before truncating.
pub const MAX_REPORTED_FAILURES: usize = 100;

/// Outcome of an exhaustive axiom audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    /// True when every axiom held under every choice of zero.
    pub pass: bool,
    /// Human-readable descriptions of each violation, truncated after
    /// [`MAX_REPORTED_FAILURES`] entries.
    pub failures: Vec<String>,
}

struct Recorder {
    failures: Vec<String>,
    truncated: bool,
}

impl Recorder {
    fn note(&mut self, msg: String) {
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(msg);
        } else {
            self.truncated = true;
        }
    }
}

/// Exhaustively checks the group axioms under **every** choice of zero.
///
/// For each zero `k` this verifies closure, the zero law `i ⊕ k = i`, unique
/// inverses, commutativity, associativity, and the label-level congruence
/// `f_i(x) + f_j(x) - f_k(x) ≡ f_λ(x)` on the mode's domain.  Violations are
/// collected rather than raised, so hand-built families that break the
/// translation rule produce a failing report instead of an error.  Groups
/// larger than [`AXIOM_CHECK_CAP`] are rejected to keep the sweep exhaustive.
pub fn check_axioms(group: &GraphicGroup) -> Result<AxiomReport, GroupError> {
    let n = group.n();
    if n > AXIOM_CHECK_CAP {
        return Err(GroupError::TooLargeToCheck { n, cap: AXIOM_CHECK_CAP });
    }
    let mut rec = Recorder { failures: Vec::new(), truncated: false };
    for zero in 1..=n {
        for i in 1..=n {
            let sum = group.add(i, zero, zero)?;
            if sum != i {
                rec.note(format!("zero law: {i} + {zero} under zero {zero} gave {sum}"));
            }
            let inverses =
                (1..=n).filter(|&j| group.add(i, j, zero) == Ok(zero)).count();
            if inverses != 1 {
                rec.note(format!(
                    "inverses: element {i} has {inverses} inverses under zero {zero}"
                ));
            }
            for j in i..=n {
                if group.add(i, j, zero)? != group.add(j, i, zero)? {
                    rec.note(format!("commutativity: {i} + {j} under zero {zero}"));
                }
                let lambda = group.add(i, j, zero)?;
                if !(1..=n).contains(&lambda) {
                    rec.note(format!(
                        "closure: {i} + {j} under zero {zero} left the group"
                    ));
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                for l in 1..=n {
                    let left = group.add(group.add(i, j, zero)?, l, zero)?;
                    let right = group.add(i, group.add(j, l, zero)?, zero)?;
                    if left != right {
                        rec.note(format!(
                            "associativity: ({i} + {j}) + {l} under zero {zero}"
                        ));
                    }
                }
                check_congruence(group, i, j, zero, &mut rec)?;
            }
        }
    }
    let pass = rec.failures.is_empty() && !rec.truncated;
    let mut failures = rec.failures;
    if rec.truncated {
        failures.push("further failures suppressed".into());
    }
    Ok(AxiomReport { pass, failures })
}

/// Checks `f_i + f_j - f_zero ≡ f_λ` color by color on the mode's domain.
fn check_congruence(
    group: &GraphicGroup,
    i: usize,
    j: usize,
    zero: usize,
    rec: &mut Recorder,
) -> Result<(), GroupError> {
    let lambda = group.add(i, j, zero)?;
    let (fi, fj, fz, fl) = (
        group.element(i)?,
        group.element(j)?,
        group.element(zero)?,
        group.element(lambda)?,
    );
    let (vertex_mod, edge_mod) = match group.mode() {
        Mode::Vertex => (Some(group.n()), None),
        Mode::Edge => (None, Some(group.n())),
        Mode::Mixed { p_mod, q_mod } => (Some(p_mod), Some(q_mod)),
    };
    if let Some(m) = vertex_mod {
        for (x, (((&a, &b), &z), &l)) in fi
            .vertex_colors()
            .iter()
            .zip(fj.vertex_colors())
            .zip(fz.vertex_colors())
            .zip(fl.vertex_colors())
            .enumerate()
        {
            if !congruent(a, b, z, l, m) {
                rec.note(format!(
                    "congruence: f_{i} + f_{j} - f_{zero} differs from f_{lambda} \
                     at vertex {x} (mod {m})"
                ));
            }
        }
    }
    if let Some(m) = edge_mod {
        let edges = |f: &Labeling| f.edge_colors().unwrap_or(&[]).to_vec();
        for (x, (((a, b), z), l)) in edges(fi)
            .into_iter()
            .zip(edges(fj))
            .zip(edges(fz))
            .zip(edges(fl))
            .enumerate()
        {
            if !congruent(a, b, z, l, m) {
                rec.note(format!(
                    "congruence: f_{i} + f_{j} - f_{zero} differs from f_{lambda} \
                     at edge {x} (mod {m})"
                ));
            }
        }
    }
    Ok(())
}

/// Whether `a + b - z ≡ l (mod m)`.
fn congruent(a: Color, b: Color, z: Color, l: Color, m: usize) -> bool {
    let m = m as u128;
    (a as u128 + b as u128 + m - z as u128 % m) % m == l as u128 % m
}

/// Colors the vertices of a tree from a family of edge elements.
///
/// Given one distinct group element per edge, this finds vertex elements
/// `F(v)` such that every edge `uv` satisfies `F(u) ⊕ F(v) = assigned element`
/// under zero `f_1`.  The root (vertex 0) is pinned to element 1 and the rest
/// follow by breadth-first propagation: an unknown end is the assigned edge
/// element minus the known end.  The returned map is re-verified edge by edge
/// before it is handed back.
pub fn tree_group_coloring(
    tree: &Graph,
    group: &GraphicGroup,
    assignment: &[usize],
) -> Result<Vec<usize>, GroupError> {
    if !tree.is_connected() || tree.q() + 1 != tree.p() {
        return Err(GroupError::NotATree);
    }
    if assignment.len() != tree.q() {
        return Err(GroupError::AssignmentLength {
            expected: tree.q(),
            got: assignment.len(),
        });
    }
    let mut seen = std::collections::BTreeSet::new();
    for &z in assignment {
        group.check_index(z)?;
        if !seen.insert(z) {
            return Err(GroupError::DuplicateAssignment(z));
        }
    }
    let zero = 1;
    let mut colors = vec![0usize; tree.p()];
    colors[0] = 1;
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut visited = vec![false; tree.p()];
    visited[0] = true;
    while let Some(u) = queue.pop_front() {
        for v in tree.neighbors(u) {
            if !visited[v] {
                visited[v] = true;
                let e = tree.edge_index(u, v).expect("neighbor without an edge");
                colors[v] = group.subtract(assignment[e], colors[u], zero)?;
                queue.push_back(v);
            }
        }
    }
    for (e, &(u, v)) in tree.edges().iter().enumerate() {
        let sum = group.add(colors[u], colors[v], zero)?;
        assert_eq!(sum, assignment[e], "tree coloring failed re-verification");
    }
    Ok(colors)
}

/// Where the vertex elements of an encryption come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexSeed<'a> {
    /// Use exactly these element indices, one per vertex.
    Explicit(&'a [usize]),
    /// Draw element indices uniformly from a seeded generator; the same seed
    /// always produces the same assignment.
    Random(u64),
}

/// A graph whose vertices and edges carry group elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEncryption {
    /// Element index per vertex, in vertex order.
    pub vertex_elements: Vec<usize>,
    /// Element index per edge, in stored edge order: the ⊕-sum of the ends.
    pub edge_elements: Vec<usize>,
    /// True when the edge element indices are exactly `{1, ..., q}`.
    pub graceful: bool,
    /// True when the edge element indices are exactly `{1, 3, ..., 2q - 1}`.
    pub odd_graceful: bool,
}

/// Labels a graph with group elements: vertices from the seed, every edge the
/// ⊕-sum of its ends under the chosen zero.
///
/// The report flags whether the resulting edge indices form the consecutive
/// run `1..=q` or the odd run `1, 3, ..., 2q - 1`, the two distributions that
/// make the element assignment a graceful (respectively odd-graceful) one at
/// the index level.
pub fn encrypt_graph(
    graph: &Graph,
    group: &GraphicGroup,
    zero: usize,
    seed: VertexSeed,
) -> Result<GroupEncryption, GroupError> {
    group.check_index(zero)?;
    let vertex_elements = match seed {
        VertexSeed::Explicit(indices) => {
            if indices.len() != graph.p() {
                return Err(GroupError::AssignmentLength {
                    expected: graph.p(),
                    got: indices.len(),
                });
            }
            for &i in indices {
                group.check_index(i)?;
            }
            indices.to_vec()
        }
        VertexSeed::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..graph.p()).map(|_| rng.gen_range(1..=group.n())).collect()
        }
    };
    let edge_elements = graph
        .edges()
        .iter()
        .map(|&(u, v)| group.add(vertex_elements[u], vertex_elements[v], zero))
        .collect::<Result<Vec<_>, _>>()?;
    let mut sorted = edge_elements.clone();
    sorted.sort_unstable();
    let q = graph.q();
    let graceful = sorted == (1..=q).collect::<Vec<_>>();
    let odd_graceful = sorted == (0..q).map(|t| 2 * t + 1).collect::<Vec<_>>();
    Ok(GroupEncryption { vertex_elements, edge_elements, graceful, odd_graceful })
}
