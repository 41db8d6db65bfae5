//! Cutting a digit string back into the matrices it could encode.
//!
//! Decimal concatenation destroys the boundaries between entries on purpose;
//! recovering a matrix means trying every segmentation. This module does that
//! honestly: it enumerates all cuts, keeps the ones that parse, and leaves
//! picking the intended matrix to whoever knows more than the string.

use crate::classify::{classify, MatrixClassKind};
use crate::{Entry, MatrixError, TopcodeMatrix};

/// Widest matrix [`partition_string`] will attempt; the search is exponential
/// in the string length.
pub const DEFAULT_PARTITION_CAP: usize = 5;

/// [`partition_string_with_cap`] with the default width cap.
pub fn partition_string(
    s: &str,
    q: usize,
    filter: Option<MatrixClassKind>,
) -> Result<Vec<TopcodeMatrix>, MatrixError> {
    partition_string_with_cap(s, q, filter, DEFAULT_PARTITION_CAP)
}

/// Every way to cut `s` into 3q decimal numbers, read back as matrices the
/// way the plain O1 route writes them: first the X row, then the E row
/// backwards, then the Y row. A segment must not start with a superfluous
/// zero — a lone `0` is fine — since decimal rendering never produces one.
/// The result is sorted and duplicate-free; `filter` keeps only matrices
/// carrying a tag of that kind.
pub fn partition_string_with_cap(
    s: &str,
    q: usize,
    filter: Option<MatrixClassKind>,
    cap: usize,
) -> Result<Vec<TopcodeMatrix>, MatrixError> {
    if q > cap {
        return Err(MatrixError::PartitionTooWide { q, cap });
    }
    if !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(MatrixError::NotDigits(s.to_string()));
    }
    let mut results = Vec::new();
    let mut segments = Vec::with_capacity(3 * q);
    cut(s.as_bytes(), q, filter, &mut segments, &mut results);
    results.sort_unstable();
    results.dedup();
    Ok(results)
}

fn cut(
    rest: &[u8],
    q: usize,
    filter: Option<MatrixClassKind>,
    segments: &mut Vec<Entry>,
    results: &mut Vec<TopcodeMatrix>,
) {
    let missing = 3 * q - segments.len();
    if missing == 0 {
        if rest.is_empty() {
            let matrix = assemble(segments, q);
            let keep = match filter {
                None => true,
                Some(kind) => classify(&matrix).iter().any(|tag| tag.kind() == kind),
            };
            if keep {
                results.push(matrix);
            }
        }
        return;
    }
    if rest.len() < missing {
        return;
    }
    let longest = if rest[0] == b'0' { 1 } else { rest.len() - (missing - 1) };
    for len in 1..=longest {
        // Beyond 20 digits nothing fits in an entry, and longer is larger.
        let Some(value) = parse(&rest[..len]) else { break };
        segments.push(value);
        cut(&rest[len..], q, filter, segments, results);
        segments.pop();
    }
}

fn parse(digits: &[u8]) -> Option<Entry> {
    std::str::from_utf8(digits).ok()?.parse().ok()
}

/// Undo the O1 reading order: X forward, E backward, Y forward.
fn assemble(segments: &[Entry], q: usize) -> TopcodeMatrix {
    let x = segments[..q].to_vec();
    let mut e = segments[q..2 * q].to_vec();
    e.reverse();
    let y = segments[2 * q..].to_vec();
    TopcodeMatrix::new(x, e, y).expect("segments are cut to equal rows")
}
