//! Brute-force permutation group enumeration: full element lists, orbit
//! partitions into conjugacy classes, centralizers, conjugacy tests, and
//! class fusion by direct search.

use cgt_core::perm::Permutation;
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};

/// Hard sanity cap on closures; the oracles target groups of order ≤ 10⁵.
const CLOSURE_CAP: usize = 2_000_000;

/// All elements of ⟨generators⟩ by breadth-first closure, identity first,
/// in a deterministic order.
pub fn elements(generators: &[Permutation]) -> Vec<Permutation> {
    let degree = generators.first().map_or(1, Permutation::degree);
    let mut out = vec![Permutation::identity(degree)];
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(out[0].images().to_vec());
    let mut head = 0;
    while head < out.len() {
        for g in generators {
            let prod = out[head].compose_checked(g).expect("generators must share one degree");
            if seen.insert(prod.images().to_vec()) {
                out.push(prod);
                assert!(
                    out.len() <= CLOSURE_CAP,
                    "group closure exceeded {CLOSURE_CAP} elements"
                );
            }
        }
        head += 1;
    }
    out
}

/// |⟨generators⟩| by full enumeration.
pub fn brute_order(generators: &[Permutation]) -> u64 {
    elements(generators) .len() as u64
}

/// The conjugacy class of `x` in the group with the given element list,
/// sorted by image tables.
pub fn conjugacy_class_of(group: &[Permutation], x: &Permutation) -> Vec<Permutation> {
    let mut set: BTreeMap<Vec<u32>, Permutation> = BTreeMap::new();
    for g in group {
        let c = x.conjugate(g);
        set.entry(c.images().to_vec()).or_insert(c);
    }
    set.into_values().collect()
}

/// Partition of a full element list into conjugacy classes.  The identity
/// class comes first; the rest follow the element list's order of first
/// appearance.
pub fn brute_classes(group: &[Permutation]) -> Vec<Vec<Permutation>> {
    let mut assigned: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut classes = Vec::new();
    for x in group {
        if assigned.contains(x.images()) {
            continue;
        }
        let class = conjugacy_class_of(group, x);
        for c in &class {
            assigned.insert(c.images().to_vec());
        }
        classes.push(class);
    }
    classes
}

/// Elements of the group commuting with `x`.
pub fn centralizer_elements(group: &[Permutation], x: &Permutation) -> Vec<Permutation> {
    group
        .iter()
        .filter(|g| {
            g.compose_checked(x).expect("one degree") == x.compose_checked(g).expect("one degree")
        })
        .cloned()
        .collect()
}

/// |C(x)| inside the group with the given element list.
pub fn centralizer_order(group: &[Permutation], x: &Permutation) -> u64 {
    centralizer_elements(group, x).len() as u64
}

/// Whether some element of the list conjugates `a` to `b`.
pub fn is_conjugate(group: &[Permutation], a: &Permutation, b: &Permutation) -> bool {
    group.iter().any(|g| &a.conjugate(g) == b)
}

/// For each subgroup class representative, the index of the unique class
/// of the big group (given by a full element list and class
/// representatives) that contains it.  Panics unless exactly one target
/// class matches.
pub fn brute_fusion(
    sub_reps: &[Permutation],
    big_elements: &[Permutation],
    big_reps: &[Permutation],
) -> Vec<usize> {
    sub_reps
        .iter()
        .map(|r| {
            let matches: Vec<usize> = big_reps
                .iter()
                .enumerate()
                .filter(|(_, t)| is_conjugate(big_elements, r, t))
                .map(|(j, _)| j)
                .collect();
            assert_eq!(matches.len(), 1, "class representative fuses into {} classes", matches.len());
            matches[0]
        })
        .collect()
}

/// A uniformly random permutation of the given degree (Fisher–Yates).
pub fn random_permutation<R: Rng>(degree: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in (1..images.len()).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_images(images).expect("a shuffle is a valid permutation")
}
