//! The shape of the multigraph a matrix draws: its columns are edges between
//! the distinct end values, so connectivity, degree parity, matchings and
//! cycles all make sense for a matrix on its own, whether or not it came
//! from a graph.

use crate::{Entry, TopcodeMatrix};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The Hamilton search is skipped above this many distinct end values.
pub const HAMILTON_BRUTE_FORCE_CAP: usize = 10;

/// What the columns look like when read as edges between end values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    /// The distinct end values, ascending.
    pub values: Vec<Entry>,
    /// Whether every pair of values is linked through shared column ends.
    pub connected: bool,
    /// Whether every value appears an even number of times as an end.
    pub euler: bool,
    /// Whether some set of columns touches each value exactly once.
    pub perfect_matching: bool,
    /// Whether some cycle of columns visits every value exactly once; `None`
    /// when there are more than [`HAMILTON_BRUTE_FORCE_CAP`] values.
    pub hamiltonian: Option<bool>,
}

pub fn analyze(t: &TopcodeMatrix) -> StructureReport {
    let values: Vec<Entry> = t.end_values().into_iter().collect();
    let index: BTreeMap<Entry, usize> = values.iter().copied().zip(0..).collect();
    let columns: Vec<(usize, usize)> =
        t.columns().map(|(x, _, y)| (index[&x], index[&y])).collect();
    let n = values.len();

    let mut degree = vec![0usize; n];
    for &(a, b) in &columns {
        degree[a] += 1;
        degree[b] += 1;
    }

    StructureReport {
        connected: connected(n, &columns),
        euler: degree.iter().all(|d| d % 2 == 0),
        perfect_matching: has_perfect_matching(n, &columns),
        hamiltonian: (n <= HAMILTON_BRUTE_FORCE_CAP).then(|| has_spanning_cycle(n, &columns)),
        values,
    }
}

fn connected(n: usize, columns: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut component = vec![usize::MAX; n];
    let mut stack = vec![0];
    component[0] = 0;
    while let Some(v) = stack.pop() {
        for &(a, b) in columns {
            for (from, to) in [(a, b), (b, a)] {
                if from == v && component[to] == usize::MAX {
                    component[to] = 0;
                    stack.push(to);
                }
            }
        }
    }
    component.iter().all(|&c| c == 0)
}

/// Backtracking cover of the lowest untouched value; loops cannot take part,
/// since they would touch their value twice.
fn has_perfect_matching(n: usize, columns: &[(usize, usize)]) -> bool {
    fn cover(columns: &[(usize, usize)], touched: &mut [bool]) -> bool {
        let Some(w) = touched.iter().position(|&t| !t) else {
            return true;
        };
        for &(a, b) in columns {
            let partner = match (a == w, b == w) {
                (true, false) => b,
                (false, true) => a,
                _ => continue,
            };
            if touched[partner] {
                continue;
            }
            touched[w] = true;
            touched[partner] = true;
            if cover(columns, touched) {
                return true;
            }
            touched[w] = false;
            touched[partner] = false;
        }
        false
    }
    cover(columns, &mut vec![false; n])
}

/// Whether some cycle visits every value exactly once. A lone value needs a
/// loop column, two values need two parallel columns, and from three values
/// up the usual search over simple adjacency applies.
fn has_spanning_cycle(n: usize, columns: &[(usize, usize)]) -> bool {
    match n {
        0 => false,
        1 => columns.iter().any(|&(a, b)| a == b),
        2 => columns.iter().filter(|&&(a, b)| a != b).count() >= 2,
        _ => {
            let mut adjacent = vec![vec![false; n]; n];
            for &(a, b) in columns {
                if a != b {
                    adjacent[a][b] = true;
                    adjacent[b][a] = true;
                }
            }
            let mut visited = vec![false; n];
            visited[0] = true;
            extend_cycle(&adjacent, &mut visited, 0, 1)
        }
    }
}

fn extend_cycle(adjacent: &[Vec<bool>], visited: &mut [bool], last: usize, placed: usize) -> bool {
    if placed == visited.len() {
        return adjacent[last][0];
    }
    for next in 1..visited.len() {
        if !visited[next] && adjacent[last][next] {
            visited[next] = true;
            if extend_cycle(adjacent, visited, next, placed + 1) {
                return true;
            }
            visited[next] = false;
        }
    }
    false
}
