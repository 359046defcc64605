use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the cover relation has a directed cycle through {a} and {b}")]
    Cycle { a: usize, b: usize },

    #[error("{what} has size {size}, above the cap of {cap}")]
    Size {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("element index {index} out of range for a poset with {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("not a lattice: {a} and {b} {reason}")]
    NotALattice { a: usize, b: usize, reason: String },

    #[error("the lattice is not distributive")]
    NotDistributive,

    #[error("the minimum element has no join-irreducible decomposition")]
    MinElement,

    #[error("the lattice needs at least two elements")]
    TooSmall,

    #[error("the given set is not an order ideal")]
    NotAnIdeal,

    #[error("the given set is not an antichain")]
    NotAnAntichain,

    #[error("poset has more than {budget} linear extensions")]
    Budget { budget: usize },

    #[error("path independence fails from {x} through the cover {a} -> {b}")]
    PathIndependence { x: usize, a: usize, b: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("support gate violated in degree {degree}: entry ({row}, {col})")]
    Support { degree: usize, row: usize, col: usize },

    #[error("resolution exceeded {cap} steps")]
    CapExceeded { cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors that stem from malformed input text rather than its meaning.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
