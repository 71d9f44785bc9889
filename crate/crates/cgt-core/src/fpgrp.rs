//! Finitely presented groups: relator verification against concrete
//! generator images, Todd–Coxeter coset enumeration, coset actions, and
//! short-word lookup in permutation groups.

mod lookup;
mod pres;
mod tc;
mod verify;

pub use lookup::lookup_word;
pub use pres::{parse_relator, parse_word, Presentation};
pub use tc::{coset_action, todd_coxeter, CosetTable, Strategy, TcOptions, TcStatus};
pub use verify::{verify_relations, VerifyReport};

use alloc::string::String;
use core::fmt;

use crate::perm::PermError;

/// Errors from presentation handling, coset enumeration, and word search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FpError {
    /// A word references a generator name that was never declared.
    UnknownGenerator {
        /// The undeclared name as written.
        name: String,
    },
    /// A word references a generator index outside the presentation.
    GeneratorIndex {
        /// The offending index.
        index: usize,
        /// Number of declared generators.
        count: usize,
    },
    /// Malformed word or presentation text.
    Parse(String),
    /// Generator names must be nonempty, distinct, and not the reserved
    /// word `comm`.
    BadGeneratorName {
        /// The offending name.
        name: String,
    },
    /// An image list does not match the generator count.
    ImageCount {
        /// Declared generators.
        expected: usize,
        /// Images supplied.
        got: usize,
    },
    /// The coset table is not closed, so it defines no permutation action.
    TableNotClosed,
    /// Internal consistency failure: a closed table's permutations violate
    /// a relator.  Never expected; reported rather than trusted.
    RelatorFailed {
        /// Index of the failing relator.
        index: usize,
    },
    /// The target element is not a member of the group.
    NotAMember,
    /// No word of length within the bound evaluates to the target.
    NotFoundWithinBound {
        /// The length bound that was exhausted.
        max_len: usize,
    },
    /// An underlying permutation operation failed.
    Perm(PermError),
}

impl From<PermError> for FpError {
    fn from(e: PermError) -> Self {
        FpError::Perm(e)
    }
}

impl fmt::Display for FpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FpError::UnknownGenerator { name } => write!(f, "unknown generator `{name}`"),
            FpError::GeneratorIndex { index, count } => {
                write!(f, "generator index {index} out of range for {count} generators")
            }
            FpError::Parse(msg) => write!(f, "parse error: {msg}"),
            FpError::BadGeneratorName { name } => {
                write!(f, "bad generator name `{name}`: names must be nonempty identifiers, distinct, and not `comm`")
            }
            FpError::ImageCount { expected, got } => {
                write!(f, "expected {expected} generator images, got {got}")
            }
            FpError::TableNotClosed => write!(f, "coset table is not closed"),
            FpError::RelatorFailed { index } => {
                write!(f, "internal check failed: relator {index} does not hold on the coset action")
            }
            FpError::NotAMember => write!(f, "target element is not a member of the group"),
            FpError::NotFoundWithinBound { max_len } => {
                write!(f, "no word of length at most {max_len} evaluates to the target")
            }
            FpError::Perm(e) => write!(f, "permutation error: {e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FpError {}
