use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polyhedron is empty")]
    EmptyPolyhedron,
    #[error("ambient dimension {dim}: configured bound {bound} exceeded")]
    DimensionOverflow { dim: usize, bound: usize },
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("center is not in the interior of the polytope")]
    CenterNotInterior,
    #[error("polytope is not full-dimensional")]
    NotFullDim,
    #[error("cone leaves the support of the fan")]
    SupportMismatch,
    #[error("unknown root system type: {0}")]
    UnknownType(String),
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("word {0} is not a reduced word of the longest element")]
    NotReduced(String),
    #[error("{what} exceeds budget {budget}")]
    BudgetExceeded { what: &'static str, budget: u64 },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<String>),
    #[error("weight {0:?} is not regular")]
    NotRegular(Vec<String>),
    #[error("provider mismatch: {0}")]
    ProviderMismatch(String),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("fiber over {0} is not a single lattice point")]
    FiberNotSingleton(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("partition has more than {max_rows} rows")]
    ShapeTooTall { max_rows: usize },
    #[error("input leaves the dominant chamber")]
    ChamberViolation,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}
