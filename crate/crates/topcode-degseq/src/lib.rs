//! Degree sequences and the operations that build new ones from old.
//!
//! A [`DegreeSequence`] is kept sorted in non-increasing order at all times;
//! every operation returns a freshly normalized sequence, so two sequences
//! compare equal exactly when they are equal as multisets.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DegSeqError {
    #[error("position {0} is out of range for a sequence of length {1}")]
    PositionOutOfRange(usize, usize),
    #[error("expected {expected} bumped positions, got {got}")]
    WrongSubsetSize { expected: usize, got: usize },
    #[error("duplicate position {0} in subset")]
    DuplicatePosition(usize),
    #[error("new degree {0} exceeds sequence length {1}")]
    DegreeTooLarge(usize, usize),
    #[error("removing the entry {removed} leaves no {removed}-subset that stays non-negative")]
    NoValidSubset { removed: u32 },
    #[error("coinciding needs between 1 and min(len1, len2) pairs, got {0}")]
    BadPairCount(usize),
    #[error("complement needs n = sequence length and every entry <= n-1")]
    BadComplement,
    #[error("cannot parse {0:?} as a degree entry")]
    Parse(String),
}

/// A degree sequence, stored sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence {
    entries: Vec<u32>,
}

impl DegreeSequence {
    pub fn new(entries: impl IntoIterator<Item = u32>) -> Self {
        let mut entries: Vec<u32> = entries.into_iter().collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&d| d as u64).sum()
    }

    /// Erdős–Gallai test: the sum must be even and for every k,
    /// sum of the k largest entries <= k(k-1) + sum over the rest of min(k, d).
    pub fn is_graphical(&self) -> bool {
        if self.sum() % 2 != 0 {
            return false;
        }
        let n = self.len();
        let d = &self.entries;
        for k in 1..=n {
            let lhs: u64 = d[..k].iter().map(|&x| x as u64).sum();
            let rhs: u64 = (k as u64) * (k as u64 - 1)
                + d[k..].iter().map(|&x| (x as u64).min(k as u64)).sum::<u64>();
            if lhs > rhs {
                return false;
            }
        }
        true
    }

    /// Add a new vertex of degree `k` joined to `k` existing vertices: each
    /// entry at a position in `bumped` gains 1, then `k` is appended.
    pub fn increase_component(&self, k: usize, bumped: &[usize]) -> Result<Self, DegSeqError> {
        if k > self.len() {
            return Err(DegSeqError::DegreeTooLarge(k, self.len()));
        }
        if bumped.len() != k {
            return Err(DegSeqError::WrongSubsetSize { expected: k, got: bumped.len() });
        }
        let mut entries = self.entries.clone();
        let mut seen = vec![false; self.len()];
        for &pos in bumped {
            if pos >= self.len() {
                return Err(DegSeqError::PositionOutOfRange(pos, self.len()));
            }
            if std::mem::replace(&mut seen[pos], true) {
                return Err(DegSeqError::DuplicatePosition(pos));
            }
            entries[pos] += 1;
        }
        entries.push(k as u32);
        Ok(DegreeSequence::new(entries))
    }

    /// Inverse of [`increase_component`](Self::increase_component): remove the
    /// entry at `position` (a degree a) and subtract 1 from a largest entries
    /// of the remainder. Returns the new sequence together with the chosen
    /// positions (indices into the remainder, largest-first), so the choice is
    /// reproducible. Errors when fewer than a remaining entries are >= 1.
    pub fn decrease_component(&self, position: usize) -> Result<(Self, Vec<usize>), DegSeqError> {
        if position >= self.len() {
            return Err(DegSeqError::PositionOutOfRange(position, self.len()));
        }
        let a = self.entries[position];
        let mut rest: Vec<u32> = self.entries.clone();
        rest.remove(position);
        let a = a as usize;
        // rest is still sorted non-increasing, so the a largest entries are a
        // prefix; the subtraction is legal iff the last of them is positive.
        if a > rest.len() || (a > 0 && rest[a - 1] == 0) {
            return Err(DegSeqError::NoValidSubset { removed: self.entries[position] });
        }
        for entry in rest.iter_mut().take(a) {
            *entry -= 1;
        }
        Ok((DegreeSequence::new(rest), (0..a).collect()))
    }

    /// Coincide: each pair (i, j) sums self[i] with other[j] into one entry;
    /// unpaired entries carry over. Between 1 and min(len, len) pairs, with
    /// distinct left positions and distinct right positions.
    pub fn coincide(&self, other: &Self, pairs: &[(usize, usize)]) -> Result<Self, DegSeqError> {
        let s = pairs.len();
        if s == 0 || s > self.len().min(other.len()) {
            return Err(DegSeqError::BadPairCount(s));
        }
        let mut used_left = vec![false; self.len()];
        let mut used_right = vec![false; other.len()];
        let mut entries = Vec::with_capacity(self.len() + other.len() - s);
        for &(i, j) in pairs {
            if i >= self.len() {
                return Err(DegSeqError::PositionOutOfRange(i, self.len()));
            }
            if j >= other.len() {
                return Err(DegSeqError::PositionOutOfRange(j, other.len()));
            }
            if std::mem::replace(&mut used_left[i], true) {
                return Err(DegSeqError::DuplicatePosition(i));
            }
            if std::mem::replace(&mut used_right[j], true) {
                return Err(DegSeqError::DuplicatePosition(j));
            }
            entries.push(self.entries[i] + other.entries[j]);
        }
        entries.extend((0..self.len()).filter(|&i| !used_left[i]).map(|i| self.entries[i]));
        entries.extend((0..other.len()).filter(|&j| !used_right[j]).map(|j| other.entries[j]));
        Ok(DegreeSequence::new(entries))
    }

    /// Join: bump self[i] and other[j] by 1 (the new bridge edge) and
    /// concatenate both sequences.
    pub fn join(&self, other: &Self, i: usize, j: usize) -> Result<Self, DegSeqError> {
        if i >= self.len() {
            return Err(DegSeqError::PositionOutOfRange(i, self.len()));
        }
        if j >= other.len() {
            return Err(DegSeqError::PositionOutOfRange(j, other.len()));
        }
        let mut entries = self.entries.clone();
        entries[i] += 1;
        entries.extend_from_slice(&other.entries);
        // other[j] sits after self's entries in the concatenation
        entries[self.len() + j] += 1;
        Ok(DegreeSequence::new(entries))
    }

    /// Complement within K_n: every entry a becomes n-1-a. Requires n equal to
    /// the length and every entry <= n-1; an involution.
    pub fn complement(&self, n: usize) -> Result<Self, DegSeqError> {
        if n != self.len() || self.entries.iter().any(|&a| a as usize + 1 > n) {
            return Err(DegSeqError::BadComplement);
        }
        Ok(DegreeSequence::new(
            self.entries.iter().map(|&a| (n as u32 - 1) - a),
        ))
    }

    /// Multiset union (disjoint union of the underlying graphs).
    pub fn union(&self, other: &Self) -> Self {
        DegreeSequence::new(self.entries.iter().chain(other.entries.iter()).copied())
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = DegSeqError;

    /// Parses comma-separated entries, e.g. `"4,3,2,2,1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DegreeSequence::new([]));
        }
        let entries = s
            .split(',')
            .map(|tok| tok.trim().parse::<u32>().map_err(|_| DegSeqError::Parse(tok.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DegreeSequence::new(entries))
    }
}
