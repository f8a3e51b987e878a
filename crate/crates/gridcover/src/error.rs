use thiserror::Error;

/// Errors reported by fallible library operations.
///
/// Contract violations on pure mathematical operations (zero polynomial
/// where a nonzero one is required, zero direction vectors, radius zero)
/// panic instead; see the individual functions.
#[derive(Debug, Error)]
pub enum Error {
    /// Polynomial text did not conform to the grammar.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A pattern file was malformed.
    #[error("bad pattern file: {0}")]
    Pattern(String),

    /// Covering constants exceed the neighborhood size.
    #[error("covering constants b={b}, a={a} exceed neighborhood size {size}")]
    InvalidConstants { b: u32, a: u32, size: usize },

    /// A convex-only operation was applied to a non-convex shape.
    #[error("neighborhood shape is not convex")]
    NonConvex,

    /// A search or enumeration exceeded the configured cell cap.
    #[error("requested {requested} cells exceeds the cap of {cap}")]
    CapExceeded { requested: u64, cap: u64 },
}
