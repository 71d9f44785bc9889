//! Conjugacy-class enumeration for permutation groups: seeded random
//! search with power closure, class orbits stored for identification, and
//! power maps between classes.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Bsgs, PermError, Permutation};
use crate::elem::GroupElement;

/// One conjugacy class: canonical representative (the least element of the
/// class), element order, class size, and centralizer order.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    /// The least element of the class in the fixed total order on
    /// permutations — independent of how the class was found.
    pub rep: Permutation,
    /// Order of the class elements.
    pub order: u64,
    /// Number of elements in the class.
    pub size: usize,
    /// Order of the centralizer of a class element: `|G| / size`.
    pub centralizer: BigUint,
}

/// A set of conjugacy classes of a permutation group, with the full class
/// orbits retained for membership queries and power maps.
pub struct Classes {
    records: Vec<ClassRecord>,
    orbits: Vec<BTreeSet<Permutation>>,
    group_order: BigUint,
    complete: bool,
}

impl Classes {
    /// The class records, sorted by (element order, class size, least
    /// representative) — a canonical order independent of the search seed.
    pub fn records(&self) -> &[ClassRecord] {
        &self.records
    }

    /// Number of classes found.
    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// Whether no classes were found (never the case for a finished run —
    /// the identity class always exists).
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Order of the group the classes partition.
    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    /// Whether every class was found (the sizes sum to the group order).
    /// A run that hit its orbit budget reports the classes found so far
    /// with this flag cleared.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Index of the class containing `g`, by membership in the stored
    /// orbits.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.orbits.iter().position(|orbit| orbit.contains(g))
    }

    /// All elements of class `i`.
    pub fn class_elements(&self, i: usize) -> impl Iterator<Item = &Permutation> {
        self.orbits[i].iter()
    }

    /// For each class, the index of the class containing the `q`-th powers
    /// of its elements.  Requires a complete class list; `q` need not divide
    /// the group order.
    pub fn power_map(&self, q: u64) -> Result<Vec<usize>, PermError> {
        if !self.complete {
            return Err(PermError::IncompleteClasses);
        }
        self.records
            .iter()
            .map(|r| {
                let powered = r.rep.power(q as i64);
                self.class_of(&powered).ok_or(PermError::IncompleteClasses)
            })
            .collect()
    }
}

/// For each class, the class of the `q`-th powers; see
/// [`Classes::power_map`].
pub fn class_power_map(classes: &Classes, q: u64) -> Result<Vec<usize>, PermError> {
    classes.power_map(q)
}

/// Enumerates the conjugacy classes of the group by seeded random search:
/// random elements from a product-replacement stream, closed under taking
/// powers, each new class materialized as a full conjugation orbit under
/// the group generators.  The search stops when the class sizes sum to the
/// group order.
///
/// `budget` caps the size of any single class orbit; when it is exceeded,
/// the classes found so far are returned with the incomplete flag set (see
/// [`Classes::is_complete`]).  The output order and content are canonical:
/// the seed affects only the search path, never the result of a complete
/// run.
pub fn conjugacy_classes(
    group: &Bsgs,
    seed: u64,
    budget: usize,
) -> Result<Classes, PermError> {
    let degree = group.degree();
    let identity = Permutation::identity(degree);
    let gens = group.generators();

    let mut orbits: Vec<BTreeSet<Permutation>> = Vec::new();
    let mut found: BigUint = BigUint::from(0u32);
    let mut complete = true;

    let mut id_orbit = BTreeSet::new();
    id_orbit.insert(identity.clone());
    orbits.push(id_orbit);
    found += 1u32;

    let mut candidates: VecDeque<Permutation> = gens.iter().cloned().collect();

    // Product-replacement state for the random stream.
    let mut prng = ChaCha8Rng::seed_from_u64(seed ^ 0x4b4c_4153);
    let mut state: Vec<Permutation> = Vec::new();
    if !gens.is_empty() {
        while state.len() < gens.len().max(4) {
            state.push(gens[state.len() % gens.len()].clone());
        }
    }
    // Forgetting a class is only possible if the random stream never visits
    // it; the valve below turns that vanishing-probability stall into an
    // honest incomplete report instead of a hang.
    let mut draws_since_progress: u64 = 0;
    const STALL_LIMIT: u64 = 200_000;

    'search: while &found < group.order() {
        let candidate = match candidates.pop_front() {
            Some(c) => c,
            None => {
                if gens.is_empty() || draws_since_progress > STALL_LIMIT {
                    complete = false;
                    break 'search;
                }
                draws_since_progress += 1;
                let i = prng.gen_range(0..state.len());
                let mut j = prng.gen_range(0..state.len() - 1);
                if j >= i {
                    j += 1;
                }
                let factor =
                    if prng.gen::<bool>() { state[j].clone() } else { state[j].inverse() };
                state[i] = state[i].compose(&factor);
                state[i].clone()
            }
        };
        if orbits.iter().any(|o| o.contains(&candidate)) {
            continue;
        }
        draws_since_progress = 0;

        // Materialize the conjugation orbit of the new element.
        let mut orbit = BTreeSet::new();
        let mut queue = VecDeque::new();
        orbit.insert(candidate.clone());
        queue.push_back(candidate.clone());
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.conjugate(g);
                if !orbit.contains(&y) {
                    if orbit.len() >= budget {
                        complete = false;
                        break 'search;
                    }
                    orbit.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        found += BigUint::from(orbit.len());

        // Powers of the representative seed further classes.
        let order = candidate.order();
        for k in 2..order {
            candidates.push_back(candidate.power(k as i64));
        }
        orbits.push(orbit);
    }

    // Canonical presentation: least element as representative, classes
    // sorted by (element order, size, representative).
    let mut records: Vec<(ClassRecord, BTreeSet<Permutation>)> = orbits
        .into_iter()
        .map(|orbit| {
            let rep = orbit.iter().next().expect("orbits are nonempty").clone();
            let order = rep.order();
            let size = orbit.len();
            let centralizer = group.order() / BigUint::from(size);
            (ClassRecord { rep, order, size, centralizer }, orbit)
        })
        .collect();
    records.sort_by(|a, b| {
        (a.0.order, a.0.size, &a.0.rep).cmp(&(b.0.order, b.0.size, &b.0.rep))
    });
    let (records, orbits): (Vec<_>, Vec<_>) = records.into_iter().unzip();

    Ok(Classes { records, orbits, group_order: group.order().clone(), complete })
}

/// The primes dividing `n` in increasing order, for driving power maps.
/// Returns `None` when `n` does not fit in a machine word.
pub fn prime_divisors(n: &BigUint) -> Option<Vec<u64>> {
    let mut n = n.to_u64()?;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    Some(out)
}
