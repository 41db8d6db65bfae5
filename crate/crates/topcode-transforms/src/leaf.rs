//! Growing a graph by pendant leaves while extending a graded (k,d)
//! total coloring: the high side and its edges slide up by one ladder step
//! per new leaf, and the new edges take the freed colors k, k+d, ... so the
//! grown coloring stays on the ladder.

use crate::{checked, TransformError};
use topcode_graph::{Edge, Graph};
use topcode_labelings::{Color, Labeling};

/// Attaches `leaf_counts[v]` new leaves to each vertex v and extends the
/// graded (k,d)-gracefully total coloring `f` over them. The input must
/// color the connected bipartite `g` with low-side colors that are
/// multiples of d (including 0), high-side colors on the ladder
/// {k, k+d, ...}, and every edge colored by the difference of its ends, the
/// edge colors forming exactly {k, k+d, ..., k+(q-1)d}. The grown pair is
/// re-validated the same way before it is returned.
pub fn leaf_add_kd(
    g: &Graph,
    f: &Labeling,
    k: u64,
    d: u64,
    leaf_counts: &[usize],
) -> Result<(Graph, Labeling), TransformError> {
    if k == 0 || d == 0 {
        return Err(TransformError::BadParameter("k and d must both be at least 1".into()));
    }
    if leaf_counts.len() != g.p() {
        return Err(TransformError::BadParameter(format!(
            "leaf counts cover {} vertices but the graph has {}",
            leaf_counts.len(),
            g.p()
        )));
    }
    let (y_side, problems) = inspect_graded(g, f, k, d)?;
    if !problems.is_empty() {
        return Err(TransformError::BadColoring(problems.join("; ")));
    }
    let total_new: usize = leaf_counts.iter().sum();
    if total_new == 0 {
        return Ok((g.clone(), f.clone()));
    }
    let colors = f.vertex_colors();
    let leaves = u128::from(total_new as u64);
    let offset = leaves * u128::from(d);
    // hosts in permutation order: low side ascending by color, then high
    // side ascending by color, each host's leaves consecutive
    let mut hosts: Vec<usize> = (0..g.p()).filter(|&v| leaf_counts[v] > 0 && !y_side[v]).collect();
    hosts.sort_by_key(|&v| colors[v]);
    let mut high_hosts: Vec<usize> =
        (0..g.p()).filter(|&v| leaf_counts[v] > 0 && y_side[v]).collect();
    high_hosts.sort_by_key(|&v| colors[v]);
    hosts.extend(high_hosts);

    let mut vertex_colors = colors.to_vec();
    for (v, c) in vertex_colors.iter_mut().enumerate() {
        if y_side[v] {
            *c = checked(u128::from(*c) + offset)?;
        }
    }
    let mut edge_colors: Vec<Color> = f
        .edge_colors()
        .expect("validated above")
        .iter()
        .map(|&c| checked(u128::from(c) + offset))
        .collect::<Result<_, _>>()?;
    let mut edges: Vec<Edge> = g.edges().to_vec();
    let mut next = g.p();
    let by_leaf: Vec<usize> = hosts
        .iter()
        .flat_map(|&host| std::iter::repeat(host).take(leaf_counts[host]))
        .collect();
    for (r, &host) in by_leaf.iter().enumerate() {
        let r = u128::from(r as u64);
        let edge_color = checked(u128::from(k) + r * u128::from(d))?;
        let leaf_color = if y_side[host] {
            // the leaf joins the low side below its host's raised color
            checked(u128::from(colors[host] - k) + (leaves - r) * u128::from(d))?
        } else {
            checked(u128::from(colors[host]) + u128::from(edge_color))?
        };
        edges.push((host, next));
        vertex_colors.push(leaf_color);
        edge_colors.push(edge_color);
        next += 1;
    }
    let grown = Graph::new(next, edges)?;
    let coloring = Labeling::total(vertex_colors, edge_colors);
    let (_, problems) = inspect_graded(&grown, &coloring, k, d)?;
    if !problems.is_empty() {
        return Err(TransformError::OutputFailedVerification {
            target: "graded (k,d)-gracefully total coloring".into(),
            details: problems.join("; "),
        });
    }
    Ok((grown, coloring))
}

/// Checks the graded shape of a total coloring and reports which side of
/// the bipartition plays the high role, together with every violated
/// condition. Structural defects (shape, connectivity, bipartiteness, a
/// missing color 0) are hard errors; ladder violations come back as
/// messages for the caller to wrap.
fn inspect_graded(
    g: &Graph,
    f: &Labeling,
    k: u64,
    d: u64,
) -> Result<(Vec<bool>, Vec<String>), TransformError> {
    f.check_shape(g)?;
    if !g.is_connected() {
        return Err(TransformError::NotConnected);
    }
    let sides = g.bipartition().ok_or(TransformError::NotBipartite)?;
    let Some(edge_colors) = f.edge_colors() else {
        return Err(TransformError::BadColoring(
            "the coloring must carry explicit edge colors".into(),
        ));
    };
    let colors = f.vertex_colors();
    let holds_zero = |side: &[usize]| side.iter().any(|&v| colors[v] == 0);
    let (x, y) = if holds_zero(&sides.x) {
        (sides.x, sides.y)
    } else if holds_zero(&sides.y) {
        (sides.y, sides.x)
    } else {
        return Err(TransformError::BadColoring(
            "no vertex holds color 0, which the low side must".into(),
        ));
    };
    let mut problems = Vec::new();
    for &v in &x {
        if colors[v] % d != 0 {
            problems.push(format!(
                "low-side vertex {v} holds color {}, not a multiple of {d}",
                colors[v]
            ));
        }
    }
    let q = g.q() as u64;
    let ceiling = u128::from(k) + u128::from(q.saturating_sub(1)) * u128::from(d);
    for &v in &y {
        let c = colors[v];
        if c < k || u128::from(c) > ceiling || (c - k) % d != 0 {
            problems.push(format!(
                "high-side vertex {v} holds color {c}, off the ladder [{k}, k+(q-1)d]"
            ));
        }
    }
    let mut y_side = vec![false; g.p()];
    for &v in &y {
        y_side[v] = true;
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (low, high) = if y_side[v] { (u, v) } else { (v, u) };
        match colors[high].checked_sub(colors[low]) {
            Some(gap) if gap == edge_colors[e] => {}
            _ => problems.push(format!(
                "edge {e} stores {} but its ends are {} over {}",
                edge_colors[e], colors[high], colors[low]
            )),
        }
    }
    let mut actual: Vec<u128> = edge_colors.iter().map(|&c| u128::from(c)).collect();
    actual.sort_unstable();
    let ladder: Vec<u128> =
        (0..u128::from(q)).map(|i| u128::from(k) + i * u128::from(d)).collect();
    if actual != ladder {
        problems.push(format!("edge colors are not exactly the ladder starting at {k}"));
    }
    Ok((y_side, problems))
}
