//! Reading a matrix out as one long decimal string.
//!
//! A route walks the 3 × q cells in a fixed pattern; each entry is written in
//! plain decimal and the digits are concatenated with no separators, which is
//! exactly what makes the result hard to cut apart again (see
//! [`partition_string`](crate::partition_string)). Every route comes in three
//! variants: [`Variant::Base`] reads the matrix as given,
//! [`Variant::Reciprocal`] reads it with the end rows exchanged, and
//! [`Variant::Inverse`] reads it with the columns reversed.

use crate::{Entry, MatrixError, TopcodeMatrix};
use std::str::FromStr;

/// The order in which the cells of a matrix are read out.
///
/// Cell indices run row-major: `X` is `0..q`, `E` is `q..2q`, `Y` is
/// `2q..3q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Route {
    /// The whole X row, then the E row backwards, then the whole Y row.
    O1,
    /// Column by column, flipping direction each time: x e y, then y e x.
    O2,
    /// A zig-zag: `y2 y1 e1 x1`, then blocks `e_2k y_2k+1 y_2k+2 e_2k+1 x_2k
    /// x_2k+1` while they fit, closed by `x_q e_q` when q is even and by
    /// `e_q-1 y_q e_q x_q-1 x_q` when q is odd.
    O3,
    /// Column by column, top to bottom: x1 e1 y1, x2 e2 y2, and so on.
    O4,
    /// A caller-chosen order of all 3q cells.
    Perm(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Read the matrix as given.
    Base,
    /// Read with the X and Y rows exchanged.
    Reciprocal,
    /// Read with the columns reversed.
    Inverse,
}

impl FromStr for Route {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, MatrixError> {
        match s.to_ascii_lowercase().as_str() {
            "o1" => Ok(Route::O1),
            "o2" => Ok(Route::O2),
            "o3" => Ok(Route::O3),
            "o4" => Ok(Route::O4),
            other => Err(MatrixError::BadRoute(other.to_string())),
        }
    }
}

impl FromStr for Variant {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, MatrixError> {
        match s.to_ascii_lowercase().as_str() {
            "base" => Ok(Variant::Base),
            "reciprocal" => Ok(Variant::Reciprocal),
            "inverse" => Ok(Variant::Inverse),
            other => Err(MatrixError::BadVariant(other.to_string())),
        }
    }
}

/// The matrix read along `route` in `variant` form: each visited entry in
/// decimal, concatenated. Equal matrices always yield byte-identical strings.
pub fn emit_string(
    t: &TopcodeMatrix,
    route: &Route,
    variant: Variant,
) -> Result<String, MatrixError> {
    let t = match variant {
        Variant::Base => t.clone(),
        Variant::Reciprocal => t.swap_ends(),
        Variant::Inverse => t.reverse_columns(),
    };
    let flat: Vec<Entry> = [t.x_row(), t.e_row(), t.y_row()].concat();
    let mut out = String::new();
    for cell in cell_order(route, t.size())? {
        out.push_str(&flat[cell].to_string());
    }
    Ok(out)
}

/// Row-major cell indices in route order. The helpers take 1-based column
/// positions so the orders read like the patterns they implement.
fn cell_order(route: &Route, q: usize) -> Result<Vec<usize>, MatrixError> {
    let x = |j: usize| j - 1;
    let e = |j: usize| q + j - 1;
    let y = |j: usize| 2 * q + j - 1;
    let cells = match route {
        Route::O1 => {
            let mut cells: Vec<usize> = (1..=q).map(x).collect();
            cells.extend((1..=q).rev().map(e));
            cells.extend((1..=q).map(y));
            cells
        }
        Route::O2 => {
            let mut cells = Vec::with_capacity(3 * q);
            for j in 1..=q {
                if j % 2 == 1 {
                    cells.extend([x(j), e(j), y(j)]);
                } else {
                    cells.extend([y(j), e(j), x(j)]);
                }
            }
            cells
        }
        Route::O3 => match q {
            0 => Vec::new(),
            1 => vec![y(1), e(1), x(1)],
            _ => {
                let mut cells = vec![y(2), y(1), e(1), x(1)];
                let mut k = 1;
                while 2 * k + 2 <= q {
                    cells.extend([
                        e(2 * k),
                        y(2 * k + 1),
                        y(2 * k + 2),
                        e(2 * k + 1),
                        x(2 * k),
                        x(2 * k + 1),
                    ]);
                    k += 1;
                }
                if q % 2 == 0 {
                    cells.extend([x(q), e(q)]);
                } else {
                    cells.extend([e(q - 1), y(q), e(q), x(q - 1), x(q)]);
                }
                cells
            }
        },
        Route::O4 => (1..=q).flat_map(|j| [x(j), e(j), y(j)]).collect(),
        Route::Perm(order) => {
            let mut seen = order.clone();
            seen.sort_unstable();
            if seen != (0..3 * q).collect::<Vec<_>>() {
                return Err(MatrixError::BadCellOrder { expected: 3 * q });
            }
            order.clone()
        }
    };
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tests::{odd_graceful_example_matrix, single_column};
    use crate::TopcodeMatrix;

    /// The string the cells would produce if visited in the given 1-based
    /// (row, column) order; an independent check on the route tables.
    fn spell(t: &TopcodeMatrix, pattern: &[(char, usize)]) -> String {
        pattern
            .iter()
            .map(|&(row, j)| {
                let entry = match row {
                    'x' => t.x_row()[j - 1],
                    'e' => t.e_row()[j - 1],
                    'y' => t.y_row()[j - 1],
                    _ => unreachable!("rows are x, e, y"),
                };
                entry.to_string()
            })
            .collect()
    }

    #[test]
    fn the_row_route_reproduces_the_first_golden_string() {
        let t = odd_graceful_example_matrix();
        assert_eq!(
            emit_string(&t, &Route::O1, Variant::Base).unwrap(),
            "10700220131197531111057111313"
        );
    }

    #[test]
    fn the_alternating_route_reproduces_the_second_golden_string() {
        let t = odd_graceful_example_matrix();
        assert_eq!(
            emit_string(&t, &Route::O2, Variant::Base).unwrap(),
            "10111103705577029111311201313"
        );
    }

    #[test]
    fn a_single_column_reads_the_same_on_most_routes() {
        let t = single_column();
        for route in [Route::O1, Route::O2, Route::O4] {
            assert_eq!(emit_string(&t, &route, Variant::Base).unwrap(), "011");
        }
        assert_eq!(emit_string(&t, &Route::O3, Variant::Base).unwrap(), "110");
        assert_eq!(emit_string(&t, &Route::O1, Variant::Reciprocal).unwrap(), "110");
        assert_eq!(emit_string(&t, &Route::O1, Variant::Inverse).unwrap(), "011");
    }

    #[test]
    fn variants_swap_rows_or_reverse_columns() {
        let t = odd_graceful_example_matrix();
        let spell_rows = |xs: &[Entry], es: &[Entry], ys: &[Entry]| -> String {
            xs.iter()
                .chain(es.iter())
                .chain(ys.iter())
                .map(Entry::to_string)
                .collect()
        };
        let reversed_e: Vec<Entry> = t.e_row().iter().rev().copied().collect();

        // Reciprocal O1: Y forward, E backward, X forward.
        let expected = spell_rows(t.y_row(), &reversed_e, t.x_row());
        assert_eq!(emit_string(&t, &Route::O1, Variant::Reciprocal).unwrap(), expected);

        // Inverse O1: X backward, E forward, Y backward.
        let reversed_x: Vec<Entry> = t.x_row().iter().rev().copied().collect();
        let reversed_y: Vec<Entry> = t.y_row().iter().rev().copied().collect();
        let expected = spell_rows(&reversed_x, t.e_row(), &reversed_y);
        assert_eq!(emit_string(&t, &Route::O1, Variant::Inverse).unwrap(), expected);
    }

    #[test]
    fn the_alternating_route_turns_at_even_columns() {
        let t = TopcodeMatrix::new(vec![1, 2], vec![3, 4], vec![5, 6]).unwrap();
        assert_eq!(emit_string(&t, &Route::O2, Variant::Base).unwrap(), "135642");
        assert_eq!(emit_string(&t, &Route::O2, Variant::Reciprocal).unwrap(), "531246");
        assert_eq!(emit_string(&t, &Route::O2, Variant::Inverse).unwrap(), "246531");
    }

    #[test]
    fn the_zigzag_route_closes_differently_for_even_and_odd_widths() {
        // Distinct entries so the pattern is visible in the output.
        let even = TopcodeMatrix::new(
            (1..=4).collect(),
            (5..=8).collect(),
            (9..=12).collect(),
        )
        .unwrap();
        let expected = spell(
            &even,
            &[
                ('y', 2),
                ('y', 1),
                ('e', 1),
                ('x', 1),
                ('e', 2),
                ('y', 3),
                ('y', 4),
                ('e', 3),
                ('x', 2),
                ('x', 3),
                ('x', 4),
                ('e', 4),
            ],
        );
        assert_eq!(emit_string(&even, &Route::O3, Variant::Base).unwrap(), expected);

        let odd = TopcodeMatrix::new(
            (1..=5).collect(),
            (6..=10).collect(),
            (11..=15).collect(),
        )
        .unwrap();
        let expected = spell(
            &odd,
            &[
                ('y', 2),
                ('y', 1),
                ('e', 1),
                ('x', 1),
                ('e', 2),
                ('y', 3),
                ('y', 4),
                ('e', 3),
                ('x', 2),
                ('x', 3),
                ('e', 4),
                ('y', 5),
                ('e', 5),
                ('x', 4),
                ('x', 5),
            ],
        );
        assert_eq!(emit_string(&odd, &Route::O3, Variant::Base).unwrap(), expected);
    }

    #[test]
    fn every_route_visits_every_cell_exactly_once() {
        for q in 0..=9 {
            for route in [Route::O1, Route::O2, Route::O3, Route::O4] {
                let mut cells = cell_order(&route, q).unwrap();
                cells.sort_unstable();
                assert_eq!(cells, (0..3 * q).collect::<Vec<_>>(), "{route:?} at q={q}");
            }
        }
    }

    #[test]
    fn custom_orders_are_validated_and_followed() {
        let t = single_column();
        assert_eq!(
            emit_string(&t, &Route::Perm(vec![0, 1, 2]), Variant::Base).unwrap(),
            "011"
        );
        assert_eq!(
            emit_string(&t, &Route::Perm(vec![2, 1, 0]), Variant::Base).unwrap(),
            "110"
        );
        assert_eq!(
            emit_string(&t, &Route::Perm(vec![0, 0, 2]), Variant::Base).unwrap_err(),
            MatrixError::BadCellOrder { expected: 3 }
        );
        assert_eq!(
            emit_string(&t, &Route::Perm(vec![0, 1]), Variant::Base).unwrap_err(),
            MatrixError::BadCellOrder { expected: 3 }
        );
    }

    #[test]
    fn the_empty_matrix_emits_the_empty_string() {
        for route in [Route::O1, Route::O2, Route::O3, Route::O4, Route::Perm(Vec::new())] {
            assert_eq!(
                emit_string(&TopcodeMatrix::empty(), &route, Variant::Base).unwrap(),
                ""
            );
        }
    }

    #[test]
    fn routes_and_variants_parse_from_their_names() {
        assert_eq!("o1".parse::<Route>().unwrap(), Route::O1);
        assert_eq!("O3".parse::<Route>().unwrap(), Route::O3);
        assert!("o5".parse::<Route>().is_err());
        assert_eq!("base".parse::<Variant>().unwrap(), Variant::Base);
        assert_eq!("Reciprocal".parse::<Variant>().unwrap(), Variant::Reciprocal);
        assert_eq!("inverse".parse::<Variant>().unwrap(), Variant::Inverse);
        assert!("dual".parse::<Variant>().is_err());
    }
}
