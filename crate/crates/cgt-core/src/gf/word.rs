//! Words in abstract group generators.
//!
//! A [`GenWord`] is a sequence of `(generator index, signed exponent)`
//! pairs; the empty word is the identity. Words are evaluated left to right
//! against a list of concrete images (matrices, permutations, or anything
//! implementing [`GroupElement`]).

use alloc::vec::Vec;
use core::fmt;

use super::{FMatrix, GfError};
use crate::elem::GroupElement;

/// A word in abstract generators: `(index, exponent)` pairs with nonzero
/// exponents. Construction normalizes by merging adjacent equal indices and
/// dropping zero exponents, so equal group words in the free group have a
/// canonical reduced spelling (no free reduction across distinct indices is
/// attempted beyond adjacent merging).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GenWord {
    syllables: Vec<(usize, i64)>,
}

impl fmt::Debug for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "g{g}")?;
            } else {
                write!(f, "g{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl GenWord {
    /// The empty (identity) word.
    pub fn identity() -> Self {
        GenWord { syllables: Vec::new() }
    }

    /// Builds a word from syllables, merging adjacent equal generators and
    /// dropping zero exponents.
    pub fn new(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut syllables: Vec<(usize, i64)> = Vec::new();
        for (g, e) in pairs {
            if e == 0 {
                continue;
            }
            match syllables.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        syllables.pop();
                    }
                }
                _ => syllables.push((g, e)),
            }
        }
        GenWord { syllables }
    }

    /// A single-generator word `g^e`.
    pub fn generator(g: usize, e: i64) -> Self {
        GenWord::new([(g, e)])
    }

    /// The syllables `(generator, exponent)` of the word.
    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    /// Whether this is the empty word.
    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length counted in generator letters (sum of |exponent|).
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// The concatenation `self · other`, merging at the seam.
    pub fn concat(&self, other: &GenWord) -> GenWord {
        GenWord::new(self.syllables.iter().chain(other.syllables.iter()).copied())
    }

    /// The formal inverse (reversed syllables, negated exponents).
    pub fn inverse(&self) -> GenWord {
        GenWord::new(self.syllables.iter().rev().map(|&(g, e)| (g, -e)))
    }

    /// The commutator `self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &GenWord) -> GenWord {
        self.inverse().concat(&other.inverse()).concat(self).concat(other)
    }

    /// The word raised to a signed power.
    pub fn power(&self, e: i64) -> GenWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = GenWord::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// The largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    /// Renders the word using the given generator names (used by both
    /// `Display` of presentations and diagnostics). Inverses are rendered as
    /// `name^-1`, powers as `name^k`.
    pub fn render(&self, names: &[impl AsRef<str>]) -> alloc::string::String {
        use alloc::string::String;
        use core::fmt::Write;
        if self.is_identity() {
            return String::from("1");
        }
        let mut out = String::new();
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let name = names.get(g).map(|n| n.as_ref()).unwrap_or("?");
            if e == 1 {
                let _ = write!(out, "{name}");
            } else {
                let _ = write!(out, "{name}^{e}");
            }
        }
        out
    }
}

/// Evaluates a word against generic group-element images: the left-to-right
/// product of the image powers. The empty word gives the identity shaped
/// like the first image (hence at least one image is required even for the
/// identity word).
pub fn evaluate_word_in<E: GroupElement>(word: &GenWord, images: &[E]) -> Result<E, GfError> {
    let Some(first) = images.first() else {
        return Err(GfError::GeneratorIndex { index: 0, count: 0 });
    };
    let mut acc = first.identity_like();
    for &(g, e) in word.syllables() {
        let img = images.get(g).ok_or(GfError::GeneratorIndex { index: g, count: images.len() })?;
        acc = acc.compose(&img.power(e));
    }
    Ok(acc)
}

/// Evaluates a word in matrix images (see [`evaluate_word_in`]); all images
/// must be square over one field.
pub fn evaluate_word(word: &GenWord, images: &[FMatrix]) -> Result<FMatrix, GfError> {
    if let Some(first) = images.first() {
        for img in images {
            if img.field() != first.field() {
                return Err(GfError::FieldMismatch {
                    left: first.field().p(),
                    right: img.field().p(),
                });
            }
            if !img.is_square() || img.rows() != first.rows() {
                return Err(GfError::DimMismatch {
                    op: "evaluate_word",
                    left: (first.rows(), first.cols()),
                    right: (img.rows(), img.cols()),
                });
            }
        }
    }
    evaluate_word_in(word, images)
}
