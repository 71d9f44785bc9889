//! Brute-force involution pair counting, the permutation-level ground
//! truth behind Thompson's group order formula: for involutions x and y,
//! the product d = xy has even order 2k exactly when the pair contributes,
//! and its power involution is d^k.

use cgt_core::elem::GroupElement;
use cgt_core::perm::Permutation;

/// The involution in the cyclic group ⟨d⟩, i.e. d^(o/2) when the order o
/// of d is even; `None` when o is odd (including d = 1).
pub fn power_involution(d: &Permutation) -> Option<Permutation> {
    let o = d.order();
    if o % 2 != 0 {
        return None;
    }
    Some(d.power((o / 2) as i64))
}

/// The number of pairs (x, y) ∈ xs × ys whose product has even order with
/// power involution exactly `t`.  Counting against a full conjugacy class
/// `xs` and the class `ys` with t fixed is the quantity the character-
/// theoretic Thompson count must reproduce.
pub fn thompson_pair_count(xs: &[Permutation], ys: &[Permutation], t: &Permutation) -> u64 {
    let mut count = 0;
    for x in xs {
        for y in ys {
            let d = x.compose_checked(y).expect("one ambient degree");
            if power_involution(&d).as_ref() == Some(t) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumgrp::{conjugacy_class_of, elements};

    #[test]
    fn power_involution_basics() {
        let id = Permutation::identity(4);
        assert_eq!(power_involution(&id), None);
        let three = Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(power_involution(&three), None);
        let four = Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(
            power_involution(&four),
            Some(Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap())
        );
        let two = Permutation::from_cycles(4, &[vec![1, 2]]).unwrap();
        assert_eq!(power_involution(&two), Some(two.clone()));
    }

    #[test]
    fn s3_pair_count() {
        // In S3 the three transpositions multiply pairwise to 3-cycles
        // (odd order), so only the nine pairs with x = y contribute —
        // three pairs per choice of t? No: x·x = 1 has odd order 1.
        // Distinct transpositions give 3-cycles.  So every count is 0.
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let group = elements(&[
            a.clone(),
            Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
        ]);
        let invs = conjugacy_class_of(&group, &a);
        assert_eq!(invs.len(), 3);
        for t in &invs {
            assert_eq!(thompson_pair_count(&invs, &invs, t), 0);
        }
    }

    #[test]
    fn d8_pair_count() {
        // In D8 = ⟨r, s⟩ with r = (1 3 2 4), s = (1 2): the class of s is
        // {s, sr²} and the class of sr is {sr, sr³}.  A product of one
        // from each class is an odd power of r, of order 4, with power
        // involution r² — all four pairs land on z = r².
        let r = Permutation::from_cycles(4, &[vec![1, 3, 2, 4]]).unwrap();
        let s = Permutation::from_cycles(4, &[vec![1, 2]]).unwrap();
        let group = elements(&[r.clone(), s.clone()]);
        assert_eq!(group.len(), 8);
        let s_class = conjugacy_class_of(&group, &s);
        let sr_class = conjugacy_class_of(&group, &s.compose_checked(&r).unwrap());
        let z = r.power(2);
        assert_eq!(thompson_pair_count(&s_class, &sr_class, &z), 4);
        // No pair from these classes lands on a reflection.
        assert_eq!(thompson_pair_count(&s_class, &sr_class, &s), 0);
    }
}
