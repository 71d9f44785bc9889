//! Ordinary character tables over cyclotomic numbers.
//!
//! The centerpiece is [`CharacterTable`], a verified table of irreducible
//! characters with exact [`Cyclotomic`] values, plus the class-function
//! toolkit built on top of it: inner products, permutation characters,
//! restriction along a class fusion, and the Thompson group-order formula
//! for groups generated by two conjugacy classes.

pub mod classfn;
pub mod cyclo;
pub mod table;
pub mod thompson;

pub use classfn::{
    compatible_pairs, inner_product, permutation_character, restrict_with_fusion, ClassFunction,
    FusionMap,
};
pub use cyclo::{cyclotomic_polynomial, Cyclotomic, CycloError};
pub use table::{verify_table, CharacterTable, TableClass, TableFailure, TableReport};
pub use thompson::{class_of_power, filter_real, involution_classes, thompson_order, thompson_r};

use crate::perm::PermError;
use alloc::string::String;
use core::fmt;

/// Errors from character-table construction and class-function arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharError {
    /// Cyclotomic arithmetic failed (no embedding root, bad denominator).
    Cyclo(CycloError),
    /// A table field has inconsistent length (rows, class sizes, orders).
    Shape(String),
    /// A verification check failed; the message names the first offender.
    TableCheck(String),
    /// Class function arguments live on tables of different shape.
    ClassCountMismatch {
        /// Number of classes on the left operand.
        left: usize,
        /// Number of classes on the right operand.
        right: usize,
    },
    /// A fusion map sends a class out of range or is the wrong length.
    BadFusion(String),
    /// An inner product that must be a nonnegative integer was not.
    NotIntegral(String),
    /// A power map or class index is out of range.
    ClassIndex {
        /// Offending index.
        index: usize,
        /// Number of classes in the table.
        count: usize,
    },
    /// The requested computation needs data the table does not carry.
    MissingData(String),
    /// A permutation-group computation failed.
    Perm(PermError),
    /// A coset enumeration outgrew its point budget.
    Budget {
        /// Maximum number of cosets the caller allowed.
        budget: usize,
    },
    /// The alleged subgroup has a generator outside the group.
    NotSubgroup,
}

impl From<CycloError> for CharError {
    fn from(e: CycloError) -> Self {
        CharError::Cyclo(e)
    }
}

impl From<PermError> for CharError {
    fn from(e: PermError) -> Self {
        CharError::Perm(e)
    }
}

impl fmt::Display for CharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharError::Cyclo(e) => write!(f, "{e}"),
            CharError::Shape(m) => write!(f, "malformed character table: {m}"),
            CharError::TableCheck(m) => write!(f, "character table check failed: {m}"),
            CharError::ClassCountMismatch { left, right } => {
                write!(f, "class functions disagree on class count: {left} vs {right}")
            }
            CharError::BadFusion(m) => write!(f, "invalid fusion map: {m}"),
            CharError::NotIntegral(m) => write!(f, "non-integral multiplicity: {m}"),
            CharError::ClassIndex { index, count } => {
                write!(f, "class index {index} out of range for {count} classes")
            }
            CharError::MissingData(m) => write!(f, "missing table data: {m}"),
            CharError::Perm(e) => write!(f, "{e}"),
            CharError::Budget { budget } => {
                write!(f, "coset enumeration exceeded the budget of {budget} points")
            }
            CharError::NotSubgroup => {
                write!(f, "the alleged subgroup is not contained in the group")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CharError {}
