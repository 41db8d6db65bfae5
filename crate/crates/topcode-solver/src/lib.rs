//! Exhaustive search for labelings, plus degree-sequence realization.
//!
//! The search is a plain depth-first backtracking over vertex labels in
//! vertex-index order with labels tried in ascending order, pruning against
//! the target edge-color multiset as soon as both endpoints of an edge are
//! colored. Kinds with explicit edge colors interleave the edge assignment.
//! Every candidate re-verifies through the labelings crate before it is
//! emitted, so the stream is sound by construction; the pruning only has to
//! be conservative.

mod realize;
mod search;

pub use realize::realize;
pub use search::{count_labelings, exists_labeling, search, SearchOptions};

use thiserror::Error;

/// Environment variable overriding the estimated-node cap.
pub const MAX_NODES_ENV: &str = "TOPCODE_MAX_NODES";

/// Default bound on |universe|^p before the search refuses to start.
pub const DEFAULT_MAX_NODES: u128 = 1_000_000_000;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("search space of about {estimate} nodes exceeds the cap of {cap}")]
    UniverseTooLarge { estimate: u128, cap: u128 },
    #[error("no finite label universe can be derived for kind {0}")]
    UnsupportedKind(String),
    #[error(transparent)]
    Labeling(#[from] topcode_labelings::LabelingError),
}
