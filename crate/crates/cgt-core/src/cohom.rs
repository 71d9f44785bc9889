//! Second cohomology over GF(p) for small groups, and group extensions
//! assembled from relator tails.
//!
//! [`h2_bruteforce`] enumerates an explicit small group, sets up the
//! normalized 2-cocycle identity as a dense linear system over GF(p), and
//! returns a [`CocycleSpace`] holding bases of the cocycles and
//! coboundaries.  The extension side works with presentations: a
//! [`TailedPresentation`] augments a base presentation with module
//! generators v₁…v_m, an action word for each (base generator, module
//! generator) pair, and one tail word per base relator.
//! [`extension_from_tails`] flattens that data into a single presentation
//! of the extension — relators vᵢᵖ, commutators (vᵢ,vⱼ), the action
//! relators g⁻¹vᵢg·(word)⁻¹, and each base relator multiplied by its tail
//! — whose order can then be certified by coset enumeration.
//! [`regular_tailed_presentation`] bridges the two halves: it converts an
//! explicit 2-cocycle into tails on the regular (multiplication-table)
//! presentation of the group.
//!
//! Everything here targets desk scale: the group is enumerated in full and
//! capped at [`GROUP_LIMIT`] elements, and the cocycle system is solved by
//! dense elimination.

pub mod ext;
pub mod h2;

pub use ext::{extension_from_tails, regular_tailed_presentation, TailedPresentation};
pub use h2::{h2_bruteforce, CocycleSpace};

use crate::fpgrp::FpError;
use crate::gf::GfError;
use crate::modrep::ModError;
use crate::perm::PermError;
use core::fmt;

/// Hard cap on the group order for brute-force cohomology.
///
/// The cocycle system has (|G|−1)²·dim V unknowns and is solved densely,
/// so anything beyond a couple of hundred elements is out of reach for
/// this method regardless of the configured budget.
pub const GROUP_LIMIT: usize = 200;

/// Errors from cohomology and extension assembly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomError {
    /// The group closure exceeded [`GROUP_LIMIT`] elements.
    GroupTooLarge {
        /// Number of elements found before giving up (limit + 1 when the
        /// closure was still growing).
        size: usize,
        /// The hard cap.
        limit: usize,
    },
    /// The cocycle linear system exceeds the configured budget.
    Budget {
        /// Number of unknowns the system would need.
        needed: usize,
        /// The configured budget.
        budget: usize,
    },
    /// Generator count mismatch between a group and a module, or a
    /// malformed action table.
    GenCount {
        /// Expected count.
        expected: usize,
        /// Actual count found.
        got: usize,
    },
    /// Tail count does not match the base relator count.
    TailCount {
        /// Expected number of tails (one per base relator).
        expected: usize,
        /// Actual number supplied.
        got: usize,
    },
    /// A tail word references a module generator that does not exist.
    TailScope {
        /// Index of the offending tail (= base relator index).
        tail: usize,
        /// The out-of-range module generator index.
        generator: usize,
    },
    /// An action word references a module generator that does not exist.
    ActionScope {
        /// Index of the base generator whose action row is malformed.
        generator: usize,
        /// The out-of-range module generator index.
        index: usize,
    },
    /// A vector's length does not match the module dimension or the flat
    /// cocycle coordinate count.
    ModuleDim {
        /// Expected length.
        expected: usize,
        /// Actual length supplied.
        got: usize,
    },
    /// Presentation error from extension assembly.
    Fp(FpError),
    /// Module error.
    Mod(ModError),
    /// Permutation error from group enumeration.
    Perm(PermError),
    /// Field or matrix error.
    Gf(GfError),
}

impl From<FpError> for CohomError {
    fn from(e: FpError) -> Self {
        CohomError::Fp(e)
    }
}

impl From<ModError> for CohomError {
    fn from(e: ModError) -> Self {
        CohomError::Mod(e)
    }
}

impl From<PermError> for CohomError {
    fn from(e: PermError) -> Self {
        CohomError::Perm(e)
    }
}

impl From<GfError> for CohomError {
    fn from(e: GfError) -> Self {
        CohomError::Gf(e)
    }
}

impl fmt::Display for CohomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomError::GroupTooLarge { size, limit } => {
                write!(f, "group has at least {size} elements; brute-force cohomology is capped at {limit}")
            }
            CohomError::Budget { needed, budget } => {
                write!(f, "cocycle system needs {needed} unknowns, budget is {budget}")
            }
            CohomError::GenCount { expected, got } => {
                write!(f, "expected {expected} generators, got {got}")
            }
            CohomError::TailCount { expected, got } => {
                write!(f, "expected {expected} tails (one per relator), got {got}")
            }
            CohomError::TailScope { tail, generator } => {
                write!(f, "tail {tail} references module generator {generator}, which does not exist")
            }
            CohomError::ActionScope { generator, index } => {
                write!(f, "action word for generator {generator} references module generator {index}, which does not exist")
            }
            CohomError::ModuleDim { expected, got } => {
                write!(f, "expected a vector of length {expected}, got {got}")
            }
            CohomError::Fp(e) => write!(f, "{e}"),
            CohomError::Mod(e) => write!(f, "{e}"),
            CohomError::Perm(e) => write!(f, "{e}"),
            CohomError::Gf(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CohomError {}
