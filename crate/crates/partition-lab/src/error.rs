//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the library.
///
/// Refusals (cap and domain violations) are deliberate: operations with
/// super-polynomial cost refuse inputs beyond their documented caps instead
/// of running forever, and closed forms refuse arguments outside the range
/// where they are defined.
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration or counting request exceeded its cost cap.
    #[error("{what}: requested n = {requested} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    /// An operation was asked for an argument below its domain.
    #[error("{op} is defined only for n >= {min}, got n = {n}")]
    DomainTooSmall { op: &'static str, n: u64, min: u64 },

    /// A truncated product does not determine coefficients up to the
    /// requested degree.
    #[error(
        "truncation depth {depth} only determines coefficients up to degree {valid}, \
         requested degree {requested}"
    )]
    TruncationTooShallow {
        depth: u32,
        valid: u32,
        requested: u32,
    },

    /// A cache file failed to parse; `line` is 1-based.
    #[error("cache parse error at line {line}: {reason}")]
    CacheParse { line: usize, reason: String },

    /// A partition notation string failed to parse.
    #[error("invalid partition notation {input:?}: {reason}")]
    Notation { input: String, reason: String },

    /// A level breakdown violated its structural invariants.
    #[error("invalid level breakdown: {0}")]
    Breakdown(String),

    /// A table rendering request would produce too many columns.
    #[error("table for max_n = {max_n} needs {columns} columns, cap is {cap}")]
    TableTooWide { max_n: u64, columns: u64, cap: u64 },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
