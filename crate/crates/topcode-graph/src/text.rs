//! Plain-text edge lists: one `u v` pair per line with an optional `p q`
//! header.
//!
//! The header is recognized, not declared: the first line is a header exactly
//! when its second number equals the count of remaining lines and its first
//! number is large enough to be a vertex count for them. Everything else is
//! an edge. `to_text` always writes the header, so its output re-parses
//! unambiguously.

use crate::{Graph, GraphError};
use std::str::FromStr;

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, GraphError> {
        let mut rows: Vec<(usize, usize, usize)> = Vec::new();
        for (index, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut numbers = line.split_whitespace().map(|token| {
                token.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: index + 1,
                    message: format!("expected an unsigned integer, got {token:?}"),
                })
            });
            let a = numbers.next().transpose()?.ok_or(GraphError::Parse {
                line: index + 1,
                message: "expected two numbers".into(),
            })?;
            let b = numbers.next().transpose()?.ok_or(GraphError::Parse {
                line: index + 1,
                message: format!("expected two numbers, got only {a}"),
            })?;
            if let Some(extra) = numbers.next() {
                let extra = extra?;
                return Err(GraphError::Parse {
                    line: index + 1,
                    message: format!("expected two numbers, found a third ({extra})"),
                });
            }
            rows.push((index + 1, a, b));
        }
        let Some(&(_, first_a, first_b)) = rows.first() else {
            return Graph::new(0, Vec::new());
        };
        let rest = &rows[1..];
        let max_index = rest.iter().map(|&(_, u, v)| u.max(v)).max();
        let is_header =
            first_b == rest.len() && first_a >= max_index.map_or(0, |m| m + 1);
        if is_header {
            Graph::new(first_a, rest.iter().map(|&(_, u, v)| (u, v)).collect())
        } else {
            let p = rows.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0);
            Graph::new(p, rows.iter().map(|&(_, u, v)| (u, v)).collect())
        }
    }
}

impl Graph {
    /// Renders the graph as a header line followed by one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.p(), self.q());
        for &(u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
