//! Block-diagonal matrix groups over GF(p): double-coset counting and the
//! staged scalar-unknown solver used when amalgamating block
//! representations.
//!
//! A [`BlockGroupSpec`] names a group `D = GL_{n₁}(p) × … × GL_{n_k}(p)`
//! realized as block-diagonal matrices; a [`DiagSubgroup`] is a subgroup of
//! `D` given by blockwise generators.  [`double_coset_count`] counts the
//! (H,E)-double cosets of `D` either by the Burnside class-sum formula
//! ([`CountMethod::Burnside`]) or by the first-column normal-form argument
//! ([`CountMethod::NormalForm`]).  [`amalgam_solve`] runs the staged
//! exhaustive search for scalar entries of a block conjugator `T` making
//! `T⁻¹𝔣T` commute with a given `𝔯`, stage by stage with earlier solutions
//! substituted.

pub mod blocks;
pub mod dcount;
pub mod solve;

pub use blocks::{gl_order, BlockGrid, BlockGroupSpec, BlockPattern, DiagSubgroup};
pub use dcount::{double_coset_count, CountMethod, BLOCK_ENUM_BUDGET, SUBGROUP_BUDGET};
pub use solve::{
    amalgam_solve, check_assignment, ConjugatorTemplate, SolveStage, TemplateGroup, TemplateSlot,
};

use crate::gf::GfError;
use alloc::string::String;
use core::fmt;

/// Errors from block-group construction, double-coset counting, and the
/// staged solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AmalgamError {
    /// A block shape must list at least one block.
    EmptyShape,
    /// Block sizes must be positive.
    BadBlockSize {
        /// Index of the offending size.
        index: usize,
    },
    /// Two operands live over different prime fields.
    FieldMismatch {
        /// Left characteristic.
        left: u64,
        /// Right characteristic.
        right: u64,
    },
    /// A generator has the wrong number of blocks.
    BlockCount {
        /// Index of the offending generator.
        generator: usize,
        /// Blocks required by the spec.
        expected: usize,
        /// Blocks supplied.
        got: usize,
    },
    /// A generator block does not match the spec's block size.
    BlockShape {
        /// Index of the offending generator.
        generator: usize,
        /// Index of the offending block.
        block: usize,
        /// Size required by the spec.
        expected: usize,
        /// Rows supplied.
        rows: usize,
        /// Columns supplied.
        cols: usize,
    },
    /// A generator block is singular.
    NotInvertible {
        /// Index of the offending generator.
        generator: usize,
        /// Index of the offending block.
        block: usize,
    },
    /// The two subgroups do not belong to the given block group.
    SpecMismatch,
    /// A subgroup closure exceeded the enumeration budget.
    EnumerationBudget {
        /// The configured element budget.
        budget: usize,
    },
    /// A block centralizer is not computable: the block group is too large
    /// to enumerate and the element is not diagonalizable over GF(p), so
    /// the closed form does not apply.
    CentralizerBudget {
        /// Size of the offending block.
        size: usize,
        /// Field characteristic.
        p: u64,
    },
    /// A sparsity pattern grid is not square.
    PatternShape {
        /// Index of the offending row.
        row: usize,
        /// Expected row length (the row count).
        expected: usize,
        /// Actual row length.
        got: usize,
    },
    /// A block grid is malformed; the message names the defect.
    GridShape(String),
    /// The subgroups do not match the first-column normal-form shape; the
    /// message names the failed condition.
    NormalFormShape(String),
    /// The conjugator template or stage plan is malformed; the message
    /// names the defect.
    Plan(String),
    /// No assignment of the stage's unknowns satisfies its equations.
    NoSolution {
        /// Zero-based index of the failing stage.
        stage: usize,
    },
    /// Underlying linear algebra failed.
    Gf(GfError),
}

impl From<GfError> for AmalgamError {
    fn from(e: GfError) -> Self {
        AmalgamError::Gf(e)
    }
}

impl fmt::Display for AmalgamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmalgamError::EmptyShape => write!(f, "block shape must be nonempty"),
            AmalgamError::BadBlockSize { index } => {
                write!(f, "block size at index {index} must be positive")
            }
            AmalgamError::FieldMismatch { left, right } => {
                write!(f, "field mismatch: GF({left}) vs GF({right})")
            }
            AmalgamError::BlockCount { generator, expected, got } => {
                write!(f, "generator {generator} has {got} blocks, spec needs {expected}")
            }
            AmalgamError::BlockShape { generator, block, expected, rows, cols } => {
                write!(
                    f,
                    "generator {generator} block {block} is {rows}×{cols}, \
                     spec needs {expected}×{expected}"
                )
            }
            AmalgamError::NotInvertible { generator, block } => {
                write!(f, "generator {generator} block {block} is singular")
            }
            AmalgamError::SpecMismatch => {
                write!(f, "subgroups belong to a different block group spec")
            }
            AmalgamError::EnumerationBudget { budget } => {
                write!(f, "subgroup exceeds the {budget}-element enumeration budget")
            }
            AmalgamError::CentralizerBudget { size, p } => {
                write!(
                    f,
                    "centralizer of a {size}×{size} block over GF({p}): the block group \
                     is too large to enumerate and the element is not diagonalizable"
                )
            }
            AmalgamError::PatternShape { row, expected, got } => {
                write!(f, "pattern row {row} has {got} entries, a square grid needs {expected}")
            }
            AmalgamError::GridShape(m) => write!(f, "malformed block grid: {m}"),
            AmalgamError::NormalFormShape(m) => {
                write!(f, "normal-form shape validation failed: {m}")
            }
            AmalgamError::Plan(m) => write!(f, "malformed solver plan: {m}"),
            AmalgamError::NoSolution { stage } => {
                write!(f, "no assignment survives stage {stage}")
            }
            AmalgamError::Gf(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AmalgamError {}
