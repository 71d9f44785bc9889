//! Permutations, stabilizer chains (Schreier–Sims), matrix-to-permutation
//! conversion, and conjugacy-class enumeration with power maps.

mod action;
mod bsgs;
mod classes;
mod permutation;

pub use action::{matrix_to_permutation, VectorAction};
pub use bsgs::{bsgs_build, Bsgs};
pub use classes::{class_power_map, conjugacy_classes, prime_divisors, ClassRecord, Classes};
pub use permutation::Permutation;

use core::fmt;

use crate::gf::GfError;

/// Errors from permutation construction and the group algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    /// The image array is not a bijection of the point set.
    NotBijection {
        /// Degree of the would-be permutation.
        degree: usize,
    },
    /// Two permutations of different degrees were combined.
    DegreeMismatch {
        /// Left degree.
        left: usize,
        /// Right degree.
        right: usize,
    },
    /// A point index is outside the degree.
    PointRange {
        /// The offending point.
        point: usize,
        /// The degree.
        degree: usize,
    },
    /// A cycle description repeats a point.
    RepeatedPoint {
        /// The repeated point (1-based, as written).
        point: usize,
    },
    /// An orbit enumeration exceeded its point budget.
    OrbitBudget {
        /// The configured budget.
        budget: usize,
    },
    /// A conjugacy-class orbit exceeded the configured budget; the classes
    /// found so far are reported, flagged incomplete.
    ClassBudget {
        /// Number of complete classes found before giving up.
        classes_found: usize,
        /// The configured per-orbit budget.
        budget: usize,
    },
    /// The element is not a member of the group.
    NotAMember,
    /// The class list handed to a power-map computation is incomplete.
    IncompleteClasses,
    /// An underlying matrix operation failed.
    Matrix(GfError),
    /// Generator lists may not be empty for this operation.
    NoGenerators,
}

impl From<GfError> for PermError {
    fn from(e: GfError) -> Self {
        PermError::Matrix(e)
    }
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotBijection { degree } => {
                write!(f, "image array of degree {degree} is not a bijection")
            }
            PermError::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            PermError::PointRange { point, degree } => {
                write!(f, "point {point} is outside degree {degree}")
            }
            PermError::RepeatedPoint { point } => {
                write!(f, "cycle description repeats point {point}")
            }
            PermError::OrbitBudget { budget } => {
                write!(f, "orbit exceeds the configured point budget {budget}")
            }
            PermError::ClassBudget { classes_found, budget } => write!(
                f,
                "a class orbit exceeded the budget {budget}; {classes_found} classes found \
                 (incomplete)"
            ),
            PermError::NotAMember => write!(f, "element is not a member of the group"),
            PermError::IncompleteClasses => {
                write!(f, "class list is incomplete; power maps need the full list")
            }
            PermError::Matrix(e) => write!(f, "matrix error: {e}"),
            PermError::NoGenerators => write!(f, "at least one generator is required"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PermError {}
