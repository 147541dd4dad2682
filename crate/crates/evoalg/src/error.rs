//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input (field spec, matrix, polynomial, ...).
    Parse(String),
    /// A prime-field modulus that is not prime.
    NonPrime(u64),
    /// Repeated parameter name in a function-field spec.
    DuplicateParam(String),
    /// Operands belong to different fields.
    MixedFields,
    /// Division by zero / inversion of zero.
    DivisionByZero,
    /// A root query this artifact cannot decide (function fields only);
    /// never returned where a sound yes/no answer is known.
    UndecidableRoot(String),
    /// Finite-field enumeration requested over a field that is too large.
    FieldTooLarge { p: u64, limit: u64 },
    /// A matrix that was required to be invertible is singular.
    Singular,
    /// A candidate basis whose two vectors do not multiply to zero.
    NotNatural,
    /// Operation excluded for this characteristic (representations need
    /// characteristic different from 2 and 3).
    CharacteristicExcluded(u64),
    /// A Gröbner-style computation exceeded its configured limits.
    ResourceLimit(String),
    /// Operation not available over this field.
    UnsupportedField(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NonPrime(p) => write!(f, "{p} is not prime"),
            Error::DuplicateParam(name) => write!(f, "duplicate parameter name `{name}`"),
            Error::MixedFields => write!(f, "operands belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::UndecidableRoot(msg) => write!(f, "root test undecidable here: {msg}"),
            Error::FieldTooLarge { p, limit } => {
                write!(f, "field F{p} too large for enumeration (limit {limit})")
            }
            Error::Singular => write!(f, "matrix is singular"),
            Error::NotNatural => write!(f, "candidate basis is not natural (f1*f2 != 0)"),
            Error::CharacteristicExcluded(c) => {
                write!(f, "operation excluded in characteristic {c}")
            }
            Error::ResourceLimit(msg) => write!(f, "resource limit exceeded: {msg}"),
            Error::UnsupportedField(msg) => write!(f, "unsupported field: {msg}"),
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
