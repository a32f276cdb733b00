//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two scalars from different ground fields met in one operation.
    FieldMismatch { left: String, right: String },
    DivisionByZero,
    /// Cyclotomic order outside the supported range for the requested operation.
    BadOrder { order: u32, reason: &'static str },
    DimensionMismatch { expected: usize, got: usize },
    /// Exact multivariate division left a nonzero remainder.
    InexactDivision,
    /// Text parse failure; `pos` is a byte offset into the source.
    Parse { pos: usize, msg: String },
    VariableOutOfRange { index: usize, nvars: usize },
    SingularMatrix,
    NotCommutative,
    NotAssociative,
    NotLeftAlia,
    NotCoalgebra,
    InvalidRepresentation,
    /// A bilinear form fails the stated axiom for the ambient product.
    FormNotInvariant,
    GramNotSymmetric,
    /// A declared subalgebra index range is not closed under the product.
    NotSubalgebraClosed(&'static str),
    Io(String),
    /// Malformed input document.
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch { left, right } => {
                write!(f, "scalar field mismatch: {left} vs {right}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BadOrder { order, reason } => write!(f, "bad order {order}: {reason}"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::InexactDivision => write!(f, "exact division left a nonzero remainder"),
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::VariableOutOfRange { index, nvars } => {
                write!(f, "variable x{index} out of range (nvars = {nvars})")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::NotCommutative => write!(f, "input algebra is not commutative"),
            Error::NotAssociative => write!(f, "input algebra is not associative"),
            Error::NotLeftAlia => write!(f, "input algebra is not left-Alia"),
            Error::NotCoalgebra => write!(f, "input comultiplication is not a left-Alia coalgebra"),
            Error::InvalidRepresentation => {
                write!(f, "input (l, r) pair is not a representation")
            }
            Error::FormNotInvariant => {
                write!(f, "bilinear form is not invariant for the ambient product")
            }
            Error::GramNotSymmetric => write!(f, "Gram matrix is not symmetric"),
            Error::NotSubalgebraClosed(which) => {
                write!(f, "index range `{which}` is not closed under the product")
            }
            Error::Io(msg) => write!(f, "io error: {msg}"),
            Error::Format(msg) => write!(f, "bad input document: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
