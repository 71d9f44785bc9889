//! Modules over GF(p) for matrix and permutation groups.
//!
//! A [`GModule`] is a right module: vectors are rows and a generator `g`
//! acts by `v ↦ v·Aᵍ`.  On top of that sit the classic Meataxe tools —
//! [`spin`] for invariant subspaces, [`meataxe_irreducible`] for Norton's
//! irreducibility criterion, [`module_isomorphism`] for Parker's
//! standard-basis isomorphism test — plus Kronecker [`tensor_product`]s and
//! [`idempotent_project`], which cuts a permutation module along a
//! primitive central idempotent of the group algebra.

pub mod idempotent;
pub mod isom;
pub mod meataxe;
pub mod module;
pub mod spin;

pub use idempotent::{idempotent_project, Projection};
pub use isom::module_isomorphism;
pub use meataxe::{meataxe_irreducible, MeataxeCertificate, MeataxeVerdict, MEATAXE_TRIALS};
pub use module::{permutation_module, tensor_product, GModule};
pub use spin::{replay_schedule, spin, spin_standard, StandardSpin};

use crate::chartab::CycloError;
use crate::gf::GfError;
use crate::perm::PermError;
use alloc::string::String;
use core::fmt;

/// Errors from module construction and Meataxe computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModError {
    /// Modules must have dimension at least 1.
    ZeroDimension,
    /// An action matrix (or vector) has the wrong dimension.
    DimMismatch {
        /// Expected dimension.
        expected: usize,
        /// Actual dimension found.
        got: usize,
    },
    /// Two modules live over different prime fields.
    FieldMismatch {
        /// Left characteristic.
        left: u64,
        /// Right characteristic.
        right: u64,
    },
    /// Two modules have different generator counts.
    GenCountMismatch {
        /// Left generator count.
        left: usize,
        /// Right generator count.
        right: usize,
    },
    /// An action matrix is singular.
    NotInvertible {
        /// Index of the offending generator.
        index: usize,
    },
    /// Spinning requires a nonzero seed vector.
    ZeroVector,
    /// A randomized procedure exhausted its trials without a verdict.
    Inconclusive {
        /// Number of trials attempted.
        trials: usize,
    },
    /// Idempotent projection requires p ∤ |G|.
    CharacteristicDividesOrder {
        /// The field characteristic.
        p: u64,
    },
    /// The group is too large to enumerate class sums.
    ClassBudget {
        /// The configured element budget.
        budget: usize,
    },
    /// Idempotent projection needs a complete set of conjugacy classes.
    IncompleteClasses,
    /// A value list does not match the class count.
    ValueCount {
        /// Expected number of values (one per class).
        expected: usize,
        /// Actual number supplied.
        got: usize,
    },
    /// A consistency check on the computed projection failed; the message
    /// names the check.  This indicates the inputs do not satisfy the
    /// stated contract (e.g. the character is not irreducible, or the
    /// module is not the permutation module of the classified group).
    ProjectionCheck(String),
    /// Cyclotomic embedding failed.
    Cyclo(CycloError),
    /// Underlying linear algebra failed.
    Gf(GfError),
    /// Underlying permutation machinery failed.
    Perm(PermError),
}

impl From<GfError> for ModError {
    fn from(e: GfError) -> Self {
        ModError::Gf(e)
    }
}

impl From<PermError> for ModError {
    fn from(e: PermError) -> Self {
        ModError::Perm(e)
    }
}

impl From<CycloError> for ModError {
    fn from(e: CycloError) -> Self {
        ModError::Cyclo(e)
    }
}

impl fmt::Display for ModError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModError::ZeroDimension => write!(f, "module dimension must be positive"),
            ModError::DimMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            ModError::FieldMismatch { left, right } => {
                write!(f, "field mismatch: GF({left}) vs GF({right})")
            }
            ModError::GenCountMismatch { left, right } => {
                write!(f, "generator count mismatch: {left} vs {right}")
            }
            ModError::NotInvertible { index } => {
                write!(f, "action matrix {index} is singular")
            }
            ModError::ZeroVector => write!(f, "seed vector is zero"),
            ModError::Inconclusive { trials } => {
                write!(f, "no verdict after {trials} randomized trials")
            }
            ModError::CharacteristicDividesOrder { p } => {
                write!(f, "characteristic {p} divides the group order")
            }
            ModError::ClassBudget { budget } => {
                write!(f, "group exceeds the {budget}-element class-sum budget")
            }
            ModError::IncompleteClasses => {
                write!(f, "conjugacy classes are incomplete")
            }
            ModError::ValueCount { expected, got } => {
                write!(f, "expected {expected} class values, got {got}")
            }
            ModError::ProjectionCheck(m) => {
                write!(f, "projection consistency check failed: {m}")
            }
            ModError::Cyclo(e) => write!(f, "{e}"),
            ModError::Gf(e) => write!(f, "{e}"),
            ModError::Perm(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ModError {}
