use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cannot certify modulus: {0}")]
    Modulus(String),

    #[error("field tower deeper than 3 levels")]
    TowerTooDeep,

    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("field is not perfect; {0}")]
    Imperfect(String),

    #[error("radical unavailable over this field: {0}")]
    RadicalUnavailable(String),

    #[error("element is not in the Lie algebra of the group: {0}")]
    NotInLieAlgebra(String),

    #[error("subalgebra is not contained in the parabolic of the cocharacter (basis element {witness})")]
    NotInParabolic { witness: usize },

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("capability refused: {0}")]
    Capability(String),

    #[error("no certified path: {0}")]
    NoCertifiedPath(String),

    #[error("schema violation at {pointer}: {msg}")]
    Schema { pointer: String, msg: String },

    #[error("internal verification failure: {0}")]
    Internal(String),
}
