//! The [`GModule`] type: a right GF(p)G-module given by one action matrix
//! per group generator.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{evaluate_word, mat_inverse, mat_mul, FMatrix, GenWord, PrimeField};
use crate::modrep::ModError;
use crate::perm::Permutation;

/// A module over GF(p) for a group given by generators: row vectors of a
/// fixed dimension, with generator `g` acting on the right, `v ↦ v·Aᵍ`.
///
/// The action matrices are validated to be square, of equal dimension,
/// over the stated field, and invertible.  Nothing checks that they
/// satisfy any particular group's relations; the module is a module for
/// the free group until proven otherwise (see
/// [`verify_relations`](crate::fpgrp::verify_relations)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModule {
    field: PrimeField,
    dimension: usize,
    actions: Vec<FMatrix>,
}

impl GModule {
    /// Builds a module from one action matrix per generator.
    ///
    /// `dimension` must be positive; every matrix must be
    /// `dimension × dimension` over `field` and invertible.
    pub fn new(
        field: PrimeField,
        dimension: usize,
        actions: Vec<FMatrix>,
    ) -> Result<Self, ModError> {
        if dimension == 0 {
            return Err(ModError::ZeroDimension);
        }
        for (i, a) in actions.iter().enumerate() {
            if a.field() != field {
                return Err(ModError::FieldMismatch {
                    left: field.p(),
                    right: a.field().p(),
                });
            }
            if a.rows() != dimension || a.cols() != dimension {
                return Err(ModError::DimMismatch {
                    expected: dimension,
                    got: if a.rows() != dimension { a.rows() } else { a.cols() },
                });
            }
            if mat_inverse(a).is_err() {
                return Err(ModError::NotInvertible { index: i });
            }
        }
        Ok(GModule { field, dimension, actions })
    }

    /// The prime field.
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The module dimension.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of generators.
    pub fn gen_count(&self) -> usize {
        self.actions.len()
    }

    /// The action matrix of generator `g`.
    pub fn action(&self, g: usize) -> &FMatrix {
        &self.actions[g]
    }

    /// All action matrices, in generator order.
    pub fn actions(&self) -> &[FMatrix] {
        &self.actions
    }

    /// Applies generator `g` to a row vector.
    pub fn act(&self, v: &[u64], g: usize) -> Vec<u64> {
        self.actions[g].apply_row(v)
    }

    /// Evaluates a generator word to its action matrix.
    pub fn evaluate(&self, word: &GenWord) -> Result<FMatrix, ModError> {
        Ok(evaluate_word(word, &self.actions)?)
    }

    /// The dual module: generator `g` acts by the transposed inverse
    /// matrix, so that the natural pairing satisfies
    /// `⟨v·Aᵍ, w·(Aᵍ)⁻ᵀ⟩ = ⟨v, w⟩`.
    pub fn dual(&self) -> GModule {
        let actions = crate::gf::dual_generators(&self.actions)
            .expect("validated actions are invertible");
        GModule { field: self.field, dimension: self.dimension, actions }
    }

    /// Restriction along a list of words: the module over a new generating
    /// set whose `i`-th generator acts as `words[i]` evaluated here.  This
    /// is how a module is restricted to a subgroup given by words in the
    /// original generators.
    pub fn restrict(&self, words: &[GenWord]) -> Result<GModule, ModError> {
        let actions = words
            .iter()
            .map(|w| self.evaluate(w))
            .collect::<Result<Vec<_>, _>>()?;
        GModule::new(self.field, self.dimension, actions)
    }

    /// Direct sum with another module over the same generators:
    /// block-diagonal actions.
    pub fn direct_sum(&self, other: &GModule) -> Result<GModule, ModError> {
        if self.field != other.field {
            return Err(ModError::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        if self.gen_count() != other.gen_count() {
            return Err(ModError::GenCountMismatch {
                left: self.gen_count(),
                right: other.gen_count(),
            });
        }
        let d1 = self.dimension;
        let d2 = other.dimension;
        let actions = self
            .actions
            .iter()
            .zip(other.actions.iter())
            .map(|(a, b)| {
                let mut m = FMatrix::zeros(self.field, d1 + d2, d1 + d2);
                for i in 0..d1 {
                    for j in 0..d1 {
                        m.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..d2 {
                    for j in 0..d2 {
                        m.set(d1 + i, d1 + j, b.get(i, j));
                    }
                }
                m
            })
            .collect();
        Ok(GModule { field: self.field, dimension: d1 + d2, actions })
    }

    /// Conjugates the module by an invertible matrix `t`: the new actions
    /// are `t·Aᵍ·t⁻¹`, an isomorphic module.
    pub fn conjugate(&self, t: &FMatrix) -> Result<GModule, ModError> {
        let tinv = mat_inverse(t)?;
        let actions = self
            .actions
            .iter()
            .map(|a| mat_mul(&mat_mul(t, a)?, &tinv))
            .collect::<Result<Vec<_>, _>>()?;
        GModule::new(self.field, self.dimension, actions)
    }
}

/// The permutation module of a list of permutations over GF(p): dimension
/// equals the common degree, and generator `g` sends basis vector `eᵢ` to
/// `e_{i·g}`.
pub fn permutation_module(
    field: PrimeField,
    perms: &[Permutation],
) -> Result<GModule, ModError> {
    let degree = perms.first().map(|g| g.degree()).unwrap_or(0);
    if degree == 0 {
        return Err(ModError::ZeroDimension);
    }
    let mut actions = Vec::with_capacity(perms.len());
    for g in perms {
        if g.degree() != degree {
            return Err(ModError::DimMismatch { expected: degree, got: g.degree() });
        }
        let mut m = FMatrix::zeros(field, degree, degree);
        for i in 0..degree {
            m.set(i, g.apply(i), 1);
        }
        actions.push(m);
    }
    GModule::new(field, degree, actions)
}

/// The Kronecker tensor product of two modules over the same generators:
/// dimension `d₁·d₂`, with `(v ⊗ w)·(A ⊗ B) = (v·A) ⊗ (w·B)`.
///
/// Basis convention: `e_{i₁} ⊗ e_{i₂}` is basis vector `i₁·d₂ + i₂`.
pub fn tensor_product(m1: &GModule, m2: &GModule) -> Result<GModule, ModError> {
    if m1.field != m2.field {
        return Err(ModError::FieldMismatch { left: m1.field.p(), right: m2.field.p() });
    }
    if m1.gen_count() != m2.gen_count() {
        return Err(ModError::GenCountMismatch {
            left: m1.gen_count(),
            right: m2.gen_count(),
        });
    }
    let f = m1.field;
    let (d1, d2) = (m1.dimension, m2.dimension);
    let d = d1 * d2;
    let actions = m1
        .actions
        .iter()
        .zip(m2.actions.iter())
        .map(|(a, b)| {
            let mut entries = vec![0u64; d * d];
            for i1 in 0..d1 {
                for j1 in 0..d1 {
                    let aij = a.get(i1, j1);
                    if aij == 0 {
                        continue;
                    }
                    for i2 in 0..d2 {
                        for j2 in 0..d2 {
                            let bij = b.get(i2, j2);
                            if bij != 0 {
                                entries[(i1 * d2 + i2) * d + (j1 * d2 + j2)] =
                                    f.mul(aij, bij);
                            }
                        }
                    }
                }
            }
            FMatrix::new(f, d, d, entries).expect("well-formed Kronecker block")
        })
        .collect();
    Ok(GModule { field: f, dimension: d, actions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::mat_mul;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn s3_natural(p: u64) -> GModule {
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        permutation_module(gf(p), &[a, b]).unwrap()
    }

    #[test]
    fn permutation_module_matches_action() {
        let m = s3_natural(13);
        assert_eq!(m.dimension(), 3);
        // e₀·a = e₁ for the transposition (1 2).
        assert_eq!(m.act(&[1, 0, 0], 0), vec![0, 1, 0]);
        // Homomorphism: action(a)·action(b) is the matrix of a·b
        // (left-to-right composition).
        let ab = mat_mul(m.action(0), m.action(1)).unwrap();
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let prod = permutation_module(gf(13), &[a.compose_checked(&b).unwrap()])
            .unwrap();
        assert_eq!(&ab, prod.action(0));
    }

    #[test]
    fn validation_rejects_bad_modules() {
        let f = gf(5);
        assert!(matches!(
            GModule::new(f, 0, vec![]),
            Err(ModError::ZeroDimension)
        ));
        let singular = FMatrix::zeros(f, 2, 2);
        assert!(matches!(
            GModule::new(f, 2, vec![singular]),
            Err(ModError::NotInvertible { index: 0 })
        ));
        let wrong = FMatrix::identity(f, 3);
        assert!(matches!(
            GModule::new(f, 2, vec![wrong]),
            Err(ModError::DimMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn dual_reverses_nothing_but_pairing() {
        let m = s3_natural(7);
        let d = m.dual();
        // Homomorphism property of the dual: dual(a)·dual(b) = dual(ab).
        let lhs = mat_mul(d.action(0), d.action(1)).unwrap();
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let ab = a.compose_checked(&b).unwrap();
        let pm = permutation_module(gf(7), &[ab]).unwrap();
        let rhs = pm.dual().action(0).clone();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_dimensions_and_identity_factor() {
        let m = s3_natural(13);
        let triv = GModule::new(gf(13), 1, vec![
            FMatrix::identity(gf(13), 1),
            FMatrix::identity(gf(13), 1),
        ])
        .unwrap();
        let t = tensor_product(&m, &triv).unwrap();
        assert_eq!(t.dimension(), 3);
        assert_eq!(t.actions(), m.actions());
        let tt = tensor_product(&m, &m).unwrap();
        assert_eq!(tt.dimension(), 9);
        // Trace is multiplicative on tensor squares.
        for g in 0..2 {
            let tr = |mm: &FMatrix| {
                let f = mm.field();
                (0..mm.rows()).fold(0u64, |acc, i| f.add(acc, mm.get(i, i)))
            };
            let t1 = tr(m.action(g));
            assert_eq!(tr(tt.action(g)), gf(13).mul(t1, t1));
        }
    }

    #[test]
    fn restriction_evaluates_words() {
        let m = s3_natural(13);
        // Restrict to the subgroup ⟨b⟩ generated by the 3-cycle.
        let w = GenWord::generator(1, 1);
        let r = m.restrict(&[w]).unwrap();
        assert_eq!(r.gen_count(), 1);
        assert_eq!(r.action(0), m.action(1));
    }
}
