use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("presentation has no triangles")]
    EmptyPresentation,
    #[error("generator index {index} outside 1..={count}")]
    GeneratorOutOfRange { index: u32, count: u32 },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture `{0}` is a triangle list, not a presentation")]
    NotAPresentation(String),
    #[error("cover label {label} outside 1..={max}")]
    LabelOutOfRange { label: u32, max: u32 },
    #[error("vertex {vertex} does not exist (complex has {count} vertices)")]
    InvalidVertex { vertex: usize, count: usize },
    #[error("brute force over {faces} faces exceeds the limit of {max}; use the kernel method")]
    TooManyFaces { faces: usize, max: usize },
    #[error("enumeration would yield {count} chains, above the cap of {cap}")]
    EnumerationCap { count: u128, cap: u64 },
    #[error("link method precondition failed: {0}")]
    LinkPrecondition(String),
    #[error("bitstring has length {found}, expected {expected}")]
    BitstringLength { expected: usize, found: usize },
    #[error("bitstring contains non-binary character {0:?}")]
    BitstringChar(char),
    #[error("chain is not a 2-cycle: link node {node} at vertex {vertex} has degree {degree}")]
    NotACycle {
        vertex: usize,
        node: String,
        degree: usize,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
