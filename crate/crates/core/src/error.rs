//! Crate-wide error type.
//!
//! Every fallible operation in this crate returns [`Error`].  The variants
//! are grouped by the stage that raises them: input parsing, graph data
//! validation, groupoid/word construction, and linear-algebra plumbing.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes exposed by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is outside the supported range
    /// (zero branching degree, oversized alphabet, bad band offset, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A literal (word, symbol, element file, ...) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// A vertex label was not found in the graph.
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    /// An edge literal does not name an edge of the graph.
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    /// A step refers to an edge index outside the graph's edge table.
    #[error("edge index {index} out of range for a graph with {count} edges")]
    ForeignEdge { index: usize, count: usize },

    /// A word is structurally invalid for the graph it was paired with
    /// (bad indices, inadmissible junction, or unreduced steps).
    #[error("word does not belong to this graph: {0}")]
    ForeignWord(String),

    /// The empty step sequence was passed where a path was expected.
    /// A length-zero word must be spelled as a vertex word instead.
    #[error("empty step sequence; spell the unit at a vertex as a vertex word")]
    EmptySteps,

    /// The zero/empty word was used as a key of an algebra element.
    #[error("the empty word cannot carry a coefficient")]
    EmptyWordCoefficient,

    /// Matrix shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The side-reversal map needs a one-sided operator word.
    #[error("operator word must use generators of a single side here")]
    MixedSides,

    /// A requested band or path does not fit inside the truncation window.
    #[error("outside the truncation window: {0}")]
    OutOfTruncation(String),

    /// A graph description (JSON or builder input) is inconsistent.
    #[error("graph data error: {0}")]
    GraphData(String),

    /// Errors bubbled up from the filesystem.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Errors bubbled up from JSON (de)serialization.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
