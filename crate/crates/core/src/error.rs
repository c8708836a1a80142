use thiserror::Error;

/// Errors raised by poset constructions and the algebraic computations built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a directed cycle through element {0}")]
    Cycle(usize),
    #[error("index {index} out of range for a poset of size {size}")]
    Index { index: usize, size: usize },
    #[error("relation is not a partial order: {0}")]
    NotAnOrder(String),
    #[error("size bound exceeded: {0}")]
    Size(String),
    #[error("({0}, {1}) is not an element of the generalized-interval poset")]
    Element(usize, usize),
    #[error("map is not order preserving: {0}")]
    Morphism(String),
    #[error("invalid ideal map: {0}")]
    IdealMap(String),
    #[error("[{0}, {1}] is not an interval: {0} is not below {1}")]
    Interval(usize, usize),
    #[error("module base mismatch: {0}")]
    Base(String),
    #[error("{0} and {1} are not coprime")]
    Coprimality(usize, usize),
    #[error("Cartan matrix is not unimodular")]
    Singular,
    #[error("composition pattern violates the thin-category axioms: {0}")]
    Associativity(String),
    #[error("projective resolution longer than {0}")]
    Length(usize),
    #[error("hom space of dimension {dim} between summands {source_index} and {target}")]
    Thickness { source_index: usize, target: usize, dim: usize },
    #[error("invalid module: {0}")]
    Module(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
