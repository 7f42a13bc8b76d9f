//! Error type shared by all modules.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector's length does not match the ambient dimension of its context.
    DimensionMismatch { expected: usize, found: usize },
    /// A vector was required to lie in the lattice but does not.
    NotInLattice,
    /// The zero vector is not a valid argument here.
    ZeroVector,
    /// The vector is not primitive in the lattice.
    NotPrimitive,
    /// The lattice has no nonzero nonnegative element, so no witness exists.
    EmptySigma,
    /// The operation needs a lattice of positive rank.
    RankZero,
    /// The operation is only defined for positively graded lattices.
    NotPositivelyGraded,
    /// A search or enumeration exceeded its configured limit.
    ResourceLimit { what: &'static str, limit: usize },
    /// Malformed input file or option.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotInLattice => write!(f, "vector is not a lattice element"),
            Error::ZeroVector => write!(f, "zero vector not allowed"),
            Error::NotPrimitive => write!(f, "vector is not primitive in the lattice"),
            Error::EmptySigma => {
                write!(f, "lattice has no nonzero nonnegative element")
            }
            Error::RankZero => write!(f, "lattice rank is zero"),
            Error::NotPositivelyGraded => {
                write!(f, "lattice is not positively graded")
            }
            Error::ResourceLimit { what, limit } => {
                write!(f, "{what} exceeded the limit of {limit}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
