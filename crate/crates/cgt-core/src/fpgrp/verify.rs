//! Relator verification against concrete generator images.

use alloc::vec::Vec;

use super::{FpError, Presentation};
use crate::elem::GroupElement;
use crate::gf::evaluate_word_in;

/// Per-relator outcome of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    results: Vec<bool>,
}

impl VerifyReport {
    /// Pass/fail per relator, in presentation order.
    pub fn results(&self) -> &[bool] {
        &self.results
    }

    /// Indices of the relators that failed.
    pub fn failing(&self) -> Vec<usize> {
        self.results.iter().enumerate().filter(|&(_, &ok)| !ok).map(|(i, _)| i).collect()
    }

    /// Whether every relator evaluated to the identity.
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|&ok| ok)
    }
}

/// Evaluates every relator of the presentation at the given generator
/// images (one per generator) and reports which hold.
pub fn verify_relations<E: GroupElement>(
    pres: &Presentation,
    images: &[E],
) -> Result<VerifyReport, FpError> {
    if images.len() != pres.gen_count() {
        return Err(FpError::ImageCount { expected: pres.gen_count(), got: images.len() });
    }
    if pres.gen_count() == 0 {
        // Only empty relators can exist; they hold vacuously.
        return Ok(VerifyReport { results: alloc::vec![true; pres.relators().len()] });
    }
    let mut results = Vec::with_capacity(pres.relators().len());
    for rel in pres.relators() {
        let value = evaluate_word_in(rel, images)
            .expect("presentation validation bounds generator indices");
        results.push(value == value.identity_like());
    }
    Ok(VerifyReport { results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgrp::parse_relator;
    use crate::gf::{FMatrix, PrimeField};
    use crate::perm::Permutation;
    use alloc::string::ToString;
    use alloc::vec;

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        let names: Vec<_> = gens.iter().map(|s| s.to_string()).collect();
        let relators: Vec<_> = rels.iter().map(|r| parse_relator(&names, r).unwrap()).collect();
        Presentation::new(names, relators, Vec::new()).unwrap()
    }

    #[test]
    fn involution_matrix_passes_square() {
        let p = pres(&["a"], &["a^2"]);
        let f = PrimeField::new(13).unwrap();
        let refl = FMatrix::new(f, 2, 2, vec![0, 1, 1, 0]).unwrap();
        let report = verify_relations(&p, &[refl]).unwrap();
        assert!(report.all_hold());
    }

    #[test]
    fn failing_relator_is_reported() {
        let p = pres(&["a"], &["a^2", "a^3"]);
        let transposition = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let report = verify_relations(&p, &[transposition]).unwrap();
        assert_eq!(report.results(), &[true, false]);
        assert_eq!(report.failing(), vec![1]);
        assert!(!report.all_hold());
    }

    #[test]
    fn image_count_mismatch() {
        let p = pres(&["a", "b"], &["a^2"]);
        let t = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert_eq!(
            verify_relations(&p, &[t]),
            Err(FpError::ImageCount { expected: 2, got: 1 })
        );
    }

    #[test]
    fn s3_presentation_on_its_standard_generators() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a b)^2"]);
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert!(verify_relations(&p, &[a.clone(), b.clone()]).unwrap().all_hold());
        // Swapping the images breaks the relators.
        assert!(!verify_relations(&p, &[b, a]).unwrap().all_hold());
    }
}
