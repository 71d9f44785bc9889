//! Primitive-idempotent projection of permutation modules.
//!
//! For a group G with p ∤ |G| and an irreducible ordinary character χ
//! whose values embed in GF(p), the central idempotent
//! `e_χ = (χ(1)/|G|) · Σ_K χ(rep_K⁻¹) · C_K` (sum over conjugacy classes
//! K, with C_K the class sum) acts on any GF(p)G-module, and its image is
//! the χ-isotypic component.  Here the module is the permutation module on
//! the points the classified group permutes, so every class element acts
//! by its permutation matrix and the class sums can be accumulated
//! directly.

use alloc::format;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::chartab::Cyclotomic;
use crate::gf::{mat_mul, FMatrix};
use crate::modrep::{GModule, ModError};
use crate::perm::Classes;

/// Element budget for class-sum enumeration.
const CLASS_SUM_BUDGET: usize = 1_000_000;

/// The image of a primitive central idempotent on a permutation module,
/// together with the modular embedding that defined it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    /// Echelonized basis of the image (one row per basis vector).
    pub basis: FMatrix,
    /// Conductor of the character values (lcm over classes).
    pub conductor: u64,
    /// The chosen root of Φₙ mod p: the declared image of ζₙ.
    pub root: u64,
}

impl Projection {
    /// Dimension of the projected subspace.
    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }
}

/// Projects a permutation module onto the isotypic component of an
/// irreducible character.
///
/// `module` must be the permutation module of the group whose classes are
/// given (dimension = permutation degree); `chi` lists the character's
/// value on each class, in class order.  Requirements checked here:
/// complete classes, p ∤ |G|, |G| within the class-sum budget, one value
/// per class, and an embedding of the values' conductor into GF(p).  The
/// computed idempotent is verified to be idempotent and to commute with
/// every module generator before its image is returned; failures report
/// [`ModError::ProjectionCheck`], which indicates an input outside the
/// contract (e.g. `chi` not an irreducible character of the classified
/// group, or a module that is not its permutation module).
pub fn idempotent_project(
    module: &GModule,
    chi: &[Cyclotomic],
    classes: &Classes,
) -> Result<Projection, ModError> {
    if !classes.is_complete() {
        return Err(ModError::IncompleteClasses);
    }
    let k = classes.len();
    if chi.len() != k {
        return Err(ModError::ValueCount { expected: k, got: chi.len() });
    }
    let f = module.field();
    let p = f.p();
    let order: &BigUint = classes.group_order();
    if (order % BigUint::from(p)) == BigUint::ZERO {
        return Err(ModError::CharacteristicDividesOrder { p });
    }
    let order_usize = order
        .to_usize()
        .filter(|&n| n <= CLASS_SUM_BUDGET)
        .ok_or(ModError::ClassBudget { budget: CLASS_SUM_BUDGET })?;
    let degree = classes.records()[0].rep.degree();
    if module.dimension() != degree {
        return Err(ModError::DimMismatch {
            expected: degree,
            got: module.dimension(),
        });
    }

    // Modular embedding of the character values.
    let conductor = chi
        .iter()
        .fold(1u64, |n, v| num_integer::lcm(n, v.conductor()));
    let root = Cyclotomic::embedding_root(conductor, f)?;
    // χ(1): the value on the identity class.  Classes are sorted with the
    // identity first (order 1, size 1).
    debug_assert_eq!(classes.records()[0].order, 1);
    let chi1 = chi[0].embed_mod_p(f)?.value;
    let order_mod_p = f.reduce((order % BigUint::from(p)).to_u64().expect("< p"));
    let order_inv = f.inv(order_mod_p).expect("p does not divide |G|");
    let scale = f.mul(chi1, order_inv);

    // Accumulate E = (χ(1)/|G|) Σ_K χ(rep_K⁻¹) Σ_{g∈K} P_g directly.
    let d = module.dimension();
    let mut entries = alloc::vec![0u64; d * d];
    let mut elements_seen = 0usize;
    for i in 0..k {
        let rep_inv = crate::elem::GroupElement::inverse(&classes.records()[i].rep);
        let j = classes
            .class_of(&rep_inv)
            .expect("complete classes contain every inverse");
        let value = chi[j].embed_mod_p(f)?.value;
        let coeff = f.mul(scale, value);
        if coeff == 0 {
            elements_seen += classes.records()[i].size;
            continue;
        }
        for g in classes.class_elements(i) {
            elements_seen += 1;
            for x in 0..d {
                let y = g.apply(x);
                entries[x * d + y] = f.add(entries[x * d + y], coeff);
            }
        }
    }
    if elements_seen != order_usize {
        return Err(ModError::ProjectionCheck(format!(
            "class sizes sum to {elements_seen}, group order is {order_usize}"
        )));
    }
    let e = FMatrix::new(f, d, d, entries)?;

    // e must be idempotent and central for the permutation action.
    let e2 = mat_mul(&e, &e)?;
    if e2 != e {
        return Err(ModError::ProjectionCheck(
            alloc::string::String::from(
                "e_chi is not idempotent (is chi an irreducible character?)",
            ),
        ));
    }
    for (g, a) in module.actions().iter().enumerate() {
        if mat_mul(&e, a)? != mat_mul(a, &e)? {
            return Err(ModError::ProjectionCheck(format!(
                "e_chi does not commute with generator {g} \
                 (is the module the permutation module of the classified group?)"
            )));
        }
    }

    let (rows, _pivots) = e.row_space();
    let basis = FMatrix::from_rows(f, &rows)?;
    Ok(Projection { basis, conductor, root })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::PrimeField;
    use crate::modrep::module::permutation_module;
    use crate::modrep::spin;
    use crate::perm::{bsgs_build, conjugacy_classes, Permutation};
    use alloc::vec;
    use alloc::vec::Vec;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// S3 on 3 points: generators, classes (sorted: 1, transpositions,
    /// 3-cycles), and its natural permutation module over GF(p).
    fn s3_setup(p: u64) -> (GModule, Classes) {
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let m = permutation_module(gf(p), &[a.clone(), b.clone()]).unwrap();
        let group = bsgs_build(&[a, b], 0).unwrap();
        let classes = conjugacy_classes(&group, 0, 10_000).unwrap();
        assert!(classes.is_complete());
        (m, classes)
    }

    fn rationals(vals: &[i64]) -> Vec<Cyclotomic> {
        vals.iter().map(|&v| Cyclotomic::integer(v)).collect()
    }

    #[test]
    fn s3_character_projections() {
        let (m, classes) = s3_setup(13);
        // Class order: identity, transpositions (order 2, size 3),
        // 3-cycles (order 3, size 2).
        let sizes: Vec<usize> =
            classes.records().iter().map(|r| r.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        // Trivial character: 1-dimensional all-ones image.
        let triv = idempotent_project(&m, &rationals(&[1, 1, 1]), &classes).unwrap();
        assert_eq!(triv.dimension(), 1);
        assert_eq!(triv.basis.row(0), &[1, 1, 1]);
        // Sign character: multiplicity 0 in the natural permutation module.
        let sign = idempotent_project(&m, &rationals(&[1, -1, 1]), &classes).unwrap();
        assert_eq!(sign.dimension(), 0);
        // Degree-2 character (2, 0, −1): the standard 2-dimensional
        // component.
        let std2 = idempotent_project(&m, &rationals(&[2, 0, -1]), &classes).unwrap();
        assert_eq!(std2.dimension(), 2);
        // Semisimplicity: dimensions over all irreducibles sum to 3.
        assert_eq!(triv.dimension() + sign.dimension() + std2.dimension(), 3);
        // Images are invariant subspaces.
        let s = spin(&m, std2.basis.row(0)).unwrap();
        assert!(s.rows() <= 2);
        // Rational values embed at conductor 1.
        assert_eq!(std2.conductor, 1);
        assert_eq!(std2.root, 1);
    }

    #[test]
    fn non_character_is_rejected() {
        let (m, classes) = s3_setup(13);
        // (1, 1, −1) is a class function but not a character; e is not
        // idempotent and the check reports it.
        let r = idempotent_project(&m, &rationals(&[1, 1, -1]), &classes);
        assert!(matches!(r, Err(ModError::ProjectionCheck(_))), "{r:?}");
    }

    #[test]
    fn characteristic_dividing_order_is_rejected() {
        let (_, classes) = s3_setup(13);
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let m3 = permutation_module(gf(3), &[a, b]).unwrap();
        assert!(matches!(
            idempotent_project(&m3, &rationals(&[1, 1, 1]), &classes),
            Err(ModError::CharacteristicDividesOrder { p: 3 })
        ));
    }

    #[test]
    fn cyclotomic_values_on_c3() {
        // C3 = ⟨(1 2 3)⟩ over GF(13): ω-character values are cube roots of
        // unity; the projection of the regular module onto each linear
        // character is 1-dimensional, and conductor 3 embeds via root 3.
        let b = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let m = permutation_module(gf(13), &[b.clone()]).unwrap();
        let group = bsgs_build(&[b], 0).unwrap();
        let classes = conjugacy_classes(&group, 0, 100).unwrap();
        assert_eq!(classes.len(), 3);
        // Identify which non-identity class holds (1 2 3) vs (1 3 2).
        let c123 = classes
            .class_of(&Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap())
            .unwrap();
        let c132 = classes
            .class_of(&Permutation::from_cycles(3, &[vec![1, 3, 2]]).unwrap())
            .unwrap();
        let w = Cyclotomic::root_of_unity(3, 1);
        let w2 = Cyclotomic::root_of_unity(3, 2);
        let mut chi = vec![Cyclotomic::one(), Cyclotomic::one(), Cyclotomic::one()];
        chi[c123] = w.clone();
        chi[c132] = w2.clone();
        let proj = idempotent_project(&m, &chi, &classes).unwrap();
        assert_eq!(proj.dimension(), 1);
        assert_eq!(proj.conductor, 3);
        assert_eq!(proj.root, 3);
        // The image vector is an eigenvector of the 3-cycle action with
        // eigenvalue the embedded conjugate root.
        let v = proj.basis.row(0);
        let image = m.act(v, 0);
        let f = gf(13);
        let lambda = w.embed_mod_p(f).unwrap().value; // χ((1 2 3)) = ζ₃ ↦ 3
        let scaled: Vec<u64> = v.iter().map(|&x| f.mul(x, lambda)).collect();
        assert_eq!(image, scaled);
    }
}
