use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix of size {size} exceeds the cofactor limit {max}")]
    TooLarge { size: usize, max: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("series inverse needs a unit constant term")]
    NonUnitConstantTerm,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("graph has a directed cycle")]
    NotAcyclic,
    #[error("walk enumeration on a graph with directed cycles needs a degree bound")]
    DegreeBoundRequired,
    #[error("tuples have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("index {index} is outside the family ({len} entries)")]
    IndexOutOfFamily { index: usize, len: usize },
    #[error("{0:?} is not a boundary vertex")]
    NotBoundaryVertex(String),
    #[error("vertex sets overlap at {0:?}")]
    Overlap(String),
    #[error("{sources} sources but {sinks} sinks")]
    SourceSinkMismatch { sources: usize, sinks: usize },
    #[error("expected an even tuple, got length {0}")]
    OddTuple(usize),
    #[error("enumeration over {edges} edges exceeds the limit of {max}")]
    TooManyEdges { edges: usize, max: usize },
    #[error("numeric weight overrides are not allowed here: {0}")]
    NumericWeights(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid graph:\n  {}", .0.join("\n  "))]
    Validation(Vec<String>),
    #[error("theorem {theorem} does not apply to a {kind} graph")]
    WrongGraphKind { theorem: String, kind: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
