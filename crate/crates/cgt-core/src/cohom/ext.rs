//! Extensions of finitely presented groups by elementary abelian modules,
//! described by relator tails.
//!
//! An extension `E` of `G = ⟨g₁…g_r | w₁…w_s⟩` by a GF(p)-module `V` of
//! dimension `m` is presented on the generators `g₁…g_r, v₁…v_m`: the
//! module generators commute and have order `p`, conjugation by `gᵢ` maps
//! each `vⱼ` to a supplied word in the `v`'s (the matrix action written
//! multiplicatively), and each base relator `wᵢ` — trivial in `G` — takes
//! a value in `V`, recorded as a *tail* word `tᵢ` appended to the relator.
//! A relator `w` with tail `t` therefore imposes `w = t⁻¹` in `E`.
//!
//! [`TailedPresentation`] validates that shape, and
//! [`extension_from_tails`] flattens it into an ordinary [`Presentation`]
//! whose order can be certified by coset enumeration.
//! [`regular_tailed_presentation`] produces the tails of an explicit
//! 2-cocycle `f` on the regular (multiplication-table) presentation of a
//! [`CocycleSpace`]'s group: the relator `gₓ g_y (g_{xy})⁻¹` evaluates in
//! `E` to the section product `s(x)s(y)s(xy)⁻¹ = f(x,y)·M((xy)⁻¹)`, so
//! its tail is the negative of that vector.

use crate::cohom::{CocycleSpace, CohomError};
use crate::fpgrp::{FpError, Presentation};
use crate::gf::{GenWord, PrimeField};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// A base presentation together with module generator names, the
/// conjugation action of each base generator on the module generators,
/// and one tail word per base relator.
///
/// Action and tail words are written over the module generators alone
/// (index 0 = first module generator).
#[derive(Clone, Debug)]
pub struct TailedPresentation {
    base: Presentation,
    module_names: Vec<String>,
    action: Vec<Vec<GenWord>>,
    tails: Vec<GenWord>,
}

impl TailedPresentation {
    /// Builds a tailed presentation, validating the shape: one action row
    /// per base generator with one word per module generator, one tail per
    /// base relator, and every action/tail word confined to the module
    /// generators.
    pub fn new(
        base: Presentation,
        module_names: Vec<String>,
        action: Vec<Vec<GenWord>>,
        tails: Vec<GenWord>,
    ) -> Result<Self, CohomError> {
        let dim = module_names.len();
        if dim == 0 {
            return Err(CohomError::ModuleDim { expected: 1, got: 0 });
        }
        if action.len() != base.gen_count() {
            return Err(CohomError::GenCount {
                expected: base.gen_count(),
                got: action.len(),
            });
        }
        for (g, row) in action.iter().enumerate() {
            if row.len() != dim {
                return Err(CohomError::GenCount { expected: dim, got: row.len() });
            }
            for w in row {
                if let Some(m) = w.max_generator() {
                    if m >= dim {
                        return Err(CohomError::ActionScope { generator: g, index: m });
                    }
                }
            }
        }
        if tails.len() != base.relators().len() {
            return Err(CohomError::TailCount {
                expected: base.relators().len(),
                got: tails.len(),
            });
        }
        for (r, t) in tails.iter().enumerate() {
            if let Some(m) = t.max_generator() {
                if m >= dim {
                    return Err(CohomError::TailScope { tail: r, generator: m });
                }
            }
        }
        Ok(TailedPresentation { base, module_names, action, tails })
    }

    /// The base presentation.
    pub fn base(&self) -> &Presentation {
        &self.base
    }

    /// The module generator names, in index order.
    pub fn module_names(&self) -> &[String] {
        &self.module_names
    }

    /// The module dimension.
    pub fn dim(&self) -> usize {
        self.module_names.len()
    }

    /// The action words: `action()[g][j]` is `gᵧ⁻¹ vⱼ gᵧ` as a word in the
    /// module generators.
    pub fn action(&self) -> &[Vec<GenWord>] {
        &self.action
    }

    /// The tail words, parallel to the base relators.
    pub fn tails(&self) -> &[GenWord] {
        &self.tails
    }
}

/// Re-indexes a module-generator word to live after `off` base generators.
fn shift(w: &GenWord, off: usize) -> GenWord {
    GenWord::new(w.syllables().iter().map(|&(g, e)| (g + off, e)))
}

/// Converts a nonnegative residue to a word exponent.
fn exponent(v: u64) -> Result<i64, CohomError> {
    i64::try_from(v).map_err(|_| {
        CohomError::Fp(FpError::Parse(format!("{v} is too large for a word exponent")))
    })
}

/// Flattens a tailed presentation into a single presentation of the
/// extension group on the base and module generators.
///
/// The relators are: each base relator multiplied by its tail, `vᵢᵖ`,
/// the commutators `(vᵢ, vⱼ)` for `i < j`, and the action relators
/// `g⁻¹vᵢg·(word)⁻¹`.  `module_dim` must match the tailed presentation
/// and `p` must be prime.
pub fn extension_from_tails(
    tp: &TailedPresentation,
    module_dim: usize,
    p: u64,
) -> Result<Presentation, CohomError> {
    if module_dim != tp.dim() {
        return Err(CohomError::ModuleDim { expected: tp.dim(), got: module_dim });
    }
    PrimeField::new(p)?;
    let e_p = exponent(p)?;
    let off = tp.base().gen_count();
    let dim = tp.dim();

    let mut names = tp.base().names().to_vec();
    names.extend(tp.module_names().iter().cloned());

    let mut relators = Vec::new();
    for (w, t) in tp.base().relators().iter().zip(tp.tails()) {
        relators.push(w.concat(&shift(t, off)));
    }
    for i in 0..dim {
        relators.push(GenWord::generator(off + i, e_p));
    }
    for i in 0..dim {
        for j in i + 1..dim {
            relators.push(
                GenWord::generator(off + i, 1).commutator(&GenWord::generator(off + j, 1)),
            );
        }
    }
    for g in 0..off {
        for i in 0..dim {
            let conj = GenWord::new([(g, -1), (off + i, 1), (g, 1)]);
            relators.push(conj.concat(&shift(&tp.action()[g][i], off).inverse()));
        }
    }

    Ok(Presentation::new(names, relators, Vec::new())?)
}

/// Builds the tailed regular presentation of a cocycle space's group,
/// with tails read off the flat cocycle vector `f`.
///
/// The base presentation has one generator per non-identity element and
/// the multiplication-table relators `gₓ g_y (g_{xy})⁻¹`; the relator for
/// the pair `(x,y)` receives the tail `−f(x,y)·M((xy)⁻¹)` written in the
/// module generators, and the action words transcribe each element's
/// action matrix.  Feeding the result through [`extension_from_tails`]
/// yields a presentation of the extension of the group by the module
/// along `f`, of order `|G|·p^dim`.
pub fn regular_tailed_presentation(
    space: &CocycleSpace,
    f: &[u64],
) -> Result<TailedPresentation, CohomError> {
    if f.len() != space.coordinates() {
        return Err(CohomError::ModuleDim { expected: space.coordinates(), got: f.len() });
    }
    let field = space.field();
    let n = space.order();
    let d = space.dim();

    let g_names: Vec<String> = (1..n).map(|i| format!("g{i}")).collect();
    let v_names: Vec<String> = (1..=d).map(|i| format!("v{i}")).collect();

    let mut relators = Vec::with_capacity((n - 1) * (n - 1));
    let mut tails = Vec::with_capacity((n - 1) * (n - 1));
    for x in 1..n {
        for y in 1..n {
            let prod = space.product(x, y);
            let mut w = GenWord::new([(x - 1, 1), (y - 1, 1)]);
            if prod != 0 {
                w = w.concat(&GenWord::generator(prod - 1, -1));
            }
            relators.push(w);

            let value = space.value(f, x, y);
            let image = space.matrices()[space.inverse(prod)].apply_row(&value);
            let mut tail = Vec::with_capacity(d);
            for (c, &t) in image.iter().enumerate() {
                tail.push((c, exponent(field.neg(t))?));
            }
            tails.push(GenWord::new(tail));
        }
    }

    let mut action = Vec::with_capacity(n - 1);
    for x in 1..n {
        let mx = &space.matrices()[x];
        let mut row = Vec::with_capacity(d);
        for k in 0..d {
            let mut w = Vec::with_capacity(d);
            for l in 0..d {
                w.push((l, exponent(mx.get(k, l))?));
            }
            row.push(GenWord::new(w));
        }
        action.push(row);
    }

    let base = Presentation::new(g_names, relators, Vec::new())?;
    TailedPresentation::new(base, v_names, action, tails)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::h2_bruteforce;
    use crate::fpgrp::{coset_action, todd_coxeter, TcOptions};
    use crate::gf::FMatrix;
    use crate::modrep::GModule;
    use crate::perm::{bsgs_build, Permutation};
    use num_bigint::BigUint;

    fn c2_base() -> Presentation {
        Presentation::new(
            vec!["a".into()],
            vec![GenWord::generator(0, 2)],
            Vec::new(),
        )
        .unwrap()
    }

    fn trivial_tp(tail: GenWord) -> TailedPresentation {
        TailedPresentation::new(
            c2_base(),
            vec!["v".into()],
            vec![vec![GenWord::generator(0, 1)]],
            vec![tail],
        )
        .unwrap()
    }

    fn regular_perms(pres: &Presentation) -> Vec<Permutation> {
        let tc = todd_coxeter(pres, &[], &TcOptions::default()).unwrap();
        assert!(tc.is_closed());
        coset_action(&tc).unwrap()
    }

    #[test]
    fn tail_on_the_square_relator_gives_c4() {
        let tp = trivial_tp(GenWord::generator(0, 1));
        let pres = extension_from_tails(&tp, 1, 2).unwrap();
        assert_eq!(pres.gen_count(), 2);
        let perms = regular_perms(&pres);
        assert_eq!(perms[0].degree(), 4);
        // a² = v⁻¹ = v ≠ 1, so a has order 4: the extension is cyclic.
        assert_eq!(perms[0].order(), 4);
    }

    #[test]
    fn zero_tail_gives_the_klein_four_group() {
        let tp = trivial_tp(GenWord::identity());
        let pres = extension_from_tails(&tp, 1, 2).unwrap();
        let perms = regular_perms(&pres);
        assert_eq!(perms[0].degree(), 4);
        assert_eq!(perms[0].order(), 2);
        assert_eq!(perms[1].order(), 2);
        assert_eq!(perms[0].compose_checked(&perms[1]).unwrap().order(), 2);
    }

    #[test]
    fn coboundary_tail_on_a4_splits() {
        // Tails of the coboundary c(a) = v, c(b) = 1 on ⟨a,b | a², b³, (ab)³⟩:
        // substituting a ↦ av leaves a² and b³ alone and turns (ab)³ into
        // (ab)³v, so the extension is A4 × C2 presented with tails (1, 1, v).
        let ab = GenWord::new([(0, 1), (1, 1)]);
        let base = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![GenWord::generator(0, 2), GenWord::generator(1, 3), ab.power(3)],
            Vec::new(),
        )
        .unwrap();
        let v = GenWord::generator(0, 1);
        let tp = TailedPresentation::new(
            base,
            vec!["v".into()],
            vec![vec![v.clone()], vec![v.clone()]],
            vec![GenWord::identity(), GenWord::identity(), v],
        )
        .unwrap();
        let pres = extension_from_tails(&tp, 1, 2).unwrap();
        let perms = regular_perms(&pres);
        assert_eq!(perms[0].degree(), 24);

        // Brute-force complement search over the lifts a·vᵅ, b·vᵝ: exactly
        // the lift (α,β) = (1,0) generates an order-12 complement.
        let (pa, pb, pv) = (&perms[0], &perms[1], &perms[2]);
        let mut found = Vec::new();
        for alpha in 0..2u32 {
            for beta in 0..2u32 {
                let la = if alpha == 1 { pa.compose_checked(pv).unwrap() } else { pa.clone() };
                let lb = if beta == 1 { pb.compose_checked(pv).unwrap() } else { pb.clone() };
                let h = bsgs_build(&[la, lb], 1).unwrap();
                if *h.order() == BigUint::from(12u32) {
                    found.push((alpha, beta));
                }
            }
        }
        assert_eq!(found, [(1, 0)]);
    }

    #[test]
    fn regular_presentation_of_c2_realizes_both_classes() {
        let g = Permutation::from_images(vec![1, 0]).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let m = GModule::new(f2, 1, vec![FMatrix::identity(f2, 1)]).unwrap();
        let space = h2_bruteforce(&[g], &m, 1000).unwrap();
        assert_eq!(space.h2_dim(), 1);

        // The nonzero cocycle extends C2 to C4 …
        let tp = regular_tailed_presentation(&space, &space.cocycles()[0]).unwrap();
        let pres = extension_from_tails(&tp, 1, 2).unwrap();
        let perms = regular_perms(&pres);
        assert_eq!(perms[0].degree(), 4);
        assert_eq!(perms[0].order(), 4);

        // … and the zero cocycle to C2 × C2.
        let tp0 = regular_tailed_presentation(&space, &[0]).unwrap();
        let pres0 = extension_from_tails(&tp0, 1, 2).unwrap();
        let perms0 = regular_perms(&pres0);
        assert_eq!(perms0[0].degree(), 4);
        assert!(perms0.iter().all(|q| q.order() <= 2));
    }

    #[test]
    fn regular_presentation_of_klein_four_with_zero_cocycle() {
        let a = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        let b = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let m = GModule::new(
            f2,
            1,
            vec![FMatrix::identity(f2, 1), FMatrix::identity(f2, 1)],
        )
        .unwrap();
        let space = h2_bruteforce(&[a, b], &m, 1000).unwrap();
        let tp = regular_tailed_presentation(&space, &vec![0; 9]).unwrap();
        assert_eq!(tp.base().gen_count(), 3);
        assert_eq!(tp.base().relators().len(), 9);
        let pres = extension_from_tails(&tp, 1, 2).unwrap();
        let perms = regular_perms(&pres);
        assert_eq!(perms[0].degree(), 8);
        assert!(perms.iter().all(|q| q.order() <= 2));
    }

    #[test]
    fn shape_validation() {
        let v = GenWord::generator(0, 1);
        // Tail referencing a second, nonexistent module generator.
        let err = TailedPresentation::new(
            c2_base(),
            vec!["v".into()],
            vec![vec![v.clone()]],
            vec![GenWord::generator(1, 1)],
        )
        .unwrap_err();
        assert_eq!(err, CohomError::TailScope { tail: 0, generator: 1 });

        // Wrong tail count.
        let err =
            TailedPresentation::new(c2_base(), vec!["v".into()], vec![vec![v.clone()]], vec![])
                .unwrap_err();
        assert_eq!(err, CohomError::TailCount { expected: 1, got: 0 });

        // Missing action row.
        let err = TailedPresentation::new(c2_base(), vec!["v".into()], vec![], vec![v.clone()])
            .unwrap_err();
        assert_eq!(err, CohomError::GenCount { expected: 1, got: 0 });

        // Action word out of scope.
        let err = TailedPresentation::new(
            c2_base(),
            vec!["v".into()],
            vec![vec![GenWord::generator(3, 1)]],
            vec![v.clone()],
        )
        .unwrap_err();
        assert_eq!(err, CohomError::ActionScope { generator: 0, index: 3 });

        // Empty module.
        let err = TailedPresentation::new(c2_base(), vec![], vec![], vec![]).unwrap_err();
        assert_eq!(err, CohomError::ModuleDim { expected: 1, got: 0 });

        // Dimension disagreement at assembly time.
        let tp = trivial_tp(GenWord::identity());
        let err = extension_from_tails(&tp, 2, 2).unwrap_err();
        assert_eq!(err, CohomError::ModuleDim { expected: 1, got: 2 });
    }

    #[test]
    fn regular_assembly_checks_the_cocycle_length() {
        let g = Permutation::from_images(vec![1, 0]).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let m = GModule::new(f2, 1, vec![FMatrix::identity(f2, 1)]).unwrap();
        let space = h2_bruteforce(&[g], &m, 1000).unwrap();
        let err = regular_tailed_presentation(&space, &[0, 1]).unwrap_err();
        assert_eq!(err, CohomError::ModuleDim { expected: 1, got: 2 });
    }
}
