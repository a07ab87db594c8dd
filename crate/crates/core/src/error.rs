//! Error type shared by every module of the crate.

use thiserror::Error;

/// Convenient result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while validating input or computing invariants.
///
/// Most variants describe malformed or inconsistent input. A few describe a
/// broken internal invariant (a constructed complex whose boundary maps do not
/// compose to zero, or an asymmetric pairing matrix); see [`Error::is_internal`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has {found} entries, expected {rows}x{cols}")]
    Shape { rows: usize, cols: usize, found: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degree {degree} is outside the complex range [{lo}, {hi}]")]
    DegreeOutOfRange { degree: i32, lo: i32, hi: i32 },

    #[error("boundary maps do not compose to zero between degrees {from} and {to}")]
    NotAComplex { from: i32, to: i32 },

    #[error("matrix is not symmetric (entry ({row}, {col}) differs from its transpose)")]
    NotSymmetric { row: usize, col: usize },

    #[error("pairing matrix came out asymmetric at ({row}, {col})")]
    AsymmetricPairing { row: usize, col: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("{0}")]
    Empty(String),

    #[error("unknown {kind} `{id}` referenced by {context}")]
    DanglingId { kind: &'static str, id: String, context: String },

    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("two-handle `{0}` has a traversal chain that is not a cycle")]
    NotACycle(String),

    #[error("virtual bands: {0}")]
    VirtualBands(String),

    #[error("band diagram: {0}")]
    BandDiagram(String),

    #[error("closure arcs cannot be routed: {0}")]
    Unroutable(String),

    #[error("weighted crossing sum {0} is odd; the diagram is malformed")]
    OddCrossingSum(String),

    #[error("capped class {index} pairs nontrivially with generator {generator}")]
    CappedClassNotNull { index: usize, generator: usize },

    #[error("surface has no boundary left after capping: {0}")]
    ClosedSurface(String),

    #[error("orientation: {0}")]
    Orientation(String),

    #[error("cobordism contains ribbon singularities; the projection is not an embedding")]
    RibbonInCobordism,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("schema error at line {line}, column {column}: {message}")]
    Schema { line: usize, column: usize, message: String },

    #[error("command `{command}` does not apply to a {kind} document")]
    Inapplicable { command: String, kind: String },
}

impl Error {
    /// True when the error signals a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NotAComplex { .. } | Error::AsymmetricPairing { .. } | Error::Internal(_))
    }

    /// Process exit code for the command line: 2 for internal failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.is_internal() {
            2
        } else {
            1
        }
    }
}
