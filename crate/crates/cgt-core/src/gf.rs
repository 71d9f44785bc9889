//! Exact arithmetic and dense linear algebra over prime fields GF(p).
//!
//! Residues are stored as least nonnegative representatives and every
//! operation reduces eagerly, so results are bit-exact and reproducible.
//! Elimination uses the first nonzero entry in column order as the pivot —
//! determinism is preferred over numerical heuristics (which are pointless
//! over a finite field anyway).
//!
//! The field modulus is a machine-word prime; extension fields are out of
//! scope.

mod echelon;
mod field;
mod matrix;
mod poly;
mod word;

pub use echelon::Echelon;
pub use field::PrimeField;
pub use matrix::{dual_generators, kernel, mat_mul, mat_inverse, FMatrix};
pub use poly::{minimal_polynomial, GfPoly};
pub use word::{evaluate_word, evaluate_word_in, GenWord};

use alloc::string::String;
use core::fmt;

/// Errors from field construction and matrix operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GfError {
    /// The modulus passed to [`PrimeField::new`] is not prime.
    NotPrime(u64),
    /// An entry is outside `[0, p)` for the carrying field.
    EntryRange {
        /// Offending value.
        value: u64,
        /// Field modulus.
        p: u64,
    },
    /// The entry buffer length does not match `rows · cols`.
    EntryCount {
        /// Expected number of entries.
        expected: usize,
        /// Number of entries supplied.
        got: usize,
    },
    /// Two operands live over different prime fields.
    FieldMismatch {
        /// Modulus of the left operand.
        left: u64,
        /// Modulus of the right operand.
        right: u64,
    },
    /// Operand shapes are incompatible for the requested operation.
    DimMismatch {
        /// Human-readable operation name.
        op: &'static str,
        /// Shape of the left operand.
        left: (usize, usize),
        /// Shape of the right operand (or the required shape).
        right: (usize, usize),
    },
    /// A matrix expected to be invertible is singular.
    Singular {
        /// The rank that elimination reached before failing.
        rank: usize,
    },
    /// A word refers to a generator index outside the supplied image list.
    GeneratorIndex {
        /// The out-of-range index.
        index: usize,
        /// Number of images supplied.
        count: usize,
    },
    /// A word or expression failed to parse.
    Parse(String),
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::NotPrime(p) => write!(f, "{p} is not prime"),
            GfError::EntryRange { value, p } => {
                write!(f, "entry {value} is outside the residue range [0, {p})")
            }
            GfError::EntryCount { expected, got } => {
                write!(f, "expected {expected} matrix entries, got {got}")
            }
            GfError::FieldMismatch { left, right } => {
                write!(f, "field mismatch: GF({left}) vs GF({right})")
            }
            GfError::DimMismatch { op, left, right } => write!(
                f,
                "{op}: incompatible shapes {}x{} and {}x{}",
                left.0, left.1, right.0, right.1
            ),
            GfError::Singular { rank } => {
                write!(f, "matrix is singular (rank {rank})")
            }
            GfError::GeneratorIndex { index, count } => {
                write!(f, "word refers to generator {index}, but only {count} images were given")
            }
            GfError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GfError {}
