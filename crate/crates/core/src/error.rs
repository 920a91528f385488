use thiserror::Error;

/// Errors surfaced by the engine.
///
/// `Internal` always indicates a bug: an invariant that the library itself
/// promised to maintain was observed broken.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A presentation or map entry is inconsistent with the degrees of the
    /// generators/relations it connects.
    #[error("degree mismatch at row {row}, column {col}: {detail}")]
    DegreeMismatch {
        row: usize,
        col: usize,
        detail: String,
    },

    /// A map does not descend to the torsion quotient: the image of the
    /// offending generator is not annihilated by its c-order.
    #[error("map is not well-defined on torsion: generator {generator} of order {order} has an image not killed by c^{order}")]
    TorsionViolation { generator: usize, order: u32 },

    /// A matrix has the wrong shape for the modules it is supposed to connect.
    #[error("matrix shape mismatch: expected {expected_rows}x{expected_cols}, got {got_rows}x{got_cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        got_rows: usize,
        got_cols: usize,
    },

    /// Composition or envelope construction applied to objects that do not
    /// line up.
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),

    /// An envelope morphism whose square does not commute.
    #[error("square does not commute: g∘i differs from i'∘f")]
    NonCommutingSquare,

    /// An operation that requires a short exact sequence received something
    /// else.
    #[error("input is not a short exact sequence: {0}")]
    NotExact(String),

    /// A domain-level argument is out of range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Text input that does not conform to one of the published grammars.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// An internal invariant failed; always a bug.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
