//! Short-word lookup: expressing a group element as a word in the
//! generators by breadth-first search in length-then-lexicographic order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::FpError;
use crate::elem::GroupElement;
use crate::gf::GenWord;
use crate::perm::{Bsgs, Permutation};

/// Finds a word in the group's generators evaluating to `target`, of length
/// at most `max_len` letters (a letter is a generator or an inverse).
///
/// Membership is checked first through the stabilizer chain, so "not a
/// member" is distinguished from "no short word found".  The search is a
/// breadth-first walk visiting words in order of length, and within a
/// length lexicographically (alphabet `g₀ < g₀⁻¹ < g₁ < g₁⁻¹ < …`), so the
/// returned word is the lexicographically least among the shortest — a
/// deterministic tie-break.
pub fn lookup_word(
    group: &Bsgs,
    target: &Permutation,
    max_len: usize,
) -> Result<GenWord, FpError> {
    if !group.contains(target) {
        return Err(FpError::NotAMember);
    }
    let identity = Permutation::identity(group.degree());
    if *target == identity {
        return Ok(GenWord::identity());
    }

    // Letters in lexicographic order: generator, then its inverse.
    let mut letters: Vec<(Permutation, GenWord)> = Vec::new();
    for (i, g) in group.generators().iter().enumerate() {
        letters.push((g.clone(), GenWord::generator(i, 1)));
        letters.push((g.inverse(), GenWord::generator(i, 1).inverse()));
    }

    // Breadth-first over the Cayley graph; the parent structure keeps words
    // implicit.  `visited` maps an element to (parent index, letter index).
    let mut elements: Vec<Permutation> = alloc::vec![identity.clone()];
    let mut parent: Vec<(usize, usize)> = alloc::vec![(usize::MAX, usize::MAX)];
    let mut visited: BTreeMap<Permutation, usize> = BTreeMap::new();
    visited.insert(identity, 0);

    let mut level_start = 0;
    for _depth in 0..max_len {
        let level_end = elements.len();
        if level_start == level_end {
            break; // the whole group was enumerated
        }
        for idx in level_start..level_end {
            let base = elements[idx].clone();
            for (li, (lp, _)) in letters.iter().enumerate() {
                let next = base.compose(lp);
                if visited.contains_key(&next) {
                    continue;
                }
                let at = elements.len();
                visited.insert(next.clone(), at);
                elements.push(next.clone());
                parent.push((idx, li));
                if next == *target {
                    // Reconstruct the word root-to-leaf.
                    let mut rev: Vec<usize> = Vec::new();
                    let mut cur = at;
                    while cur != 0 {
                        rev.push(parent[cur].1);
                        cur = parent[cur].0;
                    }
                    let mut word = GenWord::identity();
                    for &li in rev.iter().rev() {
                        word = word.concat(&letters[li].1);
                    }
                    return Ok(word);
                }
            }
        }
        level_start = level_end;
    }
    Err(FpError::NotFoundWithinBound { max_len })
}
