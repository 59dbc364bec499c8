use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("resource limit exceeded ({guard}): {what}: {size} exceeds limit {limit}")]
    ResourceLimit {
        guard: &'static str,
        what: String,
        size: u128,
        limit: usize,
    },

    #[error("cannot parse scalar {text:?}: {reason}")]
    ScalarParse { text: String, reason: String },

    #[error("Cayley table is not a group: {0}")]
    NotAGroup(String),

    #[error("{q} is not a primitive {n}-th root of unity")]
    NotPrimitiveRoot { q: String, n: usize },

    #[error("Hopf axiom {axiom} fails at basis tuple {witness:?}")]
    AxiomFailure { axiom: String, witness: Vec<usize> },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("cochain mismatch: {0}")]
    CochainMismatch(String),

    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("malformed document at {location}: {reason}")]
    Malformed { location: String, reason: String },

    #[error("linear system for {0} has no solution")]
    Unsolvable(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
