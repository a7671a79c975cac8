use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}) on a graph with {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid attachment: {0}")]
    InvalidAttachment(String),

    #[error("not a {k}-tree: {reason}")]
    NotKTree { k: usize, reason: NotKTree },

    #[error("algorithm invariant violated: {0}")]
    InvariantViolation(String),

    #[error("invalid packing: closed neighborhoods of {a} and {b} intersect")]
    InvalidPacking { a: usize, b: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Why [`crate::recognize`] rejected a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotKTree {
    TooFewVertices { n: usize },
    EdgeCountMismatch { expected: usize, found: usize },
    NoSimplicialVertex { remaining: usize },
    NonCliqueNeighborhood { vertex: usize },
    ResidueNotComplete,
}

impl std::fmt::Display for NotKTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotKTree::TooFewVertices { n } => write!(f, "too few vertices ({n})"),
            NotKTree::EdgeCountMismatch { expected, found } => {
                write!(
                    f,
                    "edge count mismatch (expected {expected}, found {found})"
                )
            }
            NotKTree::NoSimplicialVertex { remaining } => write!(
                f,
                "no simplicial k-vertex left with {remaining} vertices remaining"
            ),
            NotKTree::NonCliqueNeighborhood { vertex } => {
                write!(f, "degree-k vertex {vertex} has a non-clique neighborhood")
            }
            NotKTree::ResidueNotComplete => write!(f, "residue is not a complete graph"),
        }
    }
}
