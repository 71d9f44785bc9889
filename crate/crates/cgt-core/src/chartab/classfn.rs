//! Class functions: inner products, permutation characters, restriction
//! along a class fusion, and the compatible-pair search.
//!
//! A [`ClassFunction`] is a bare vector of cyclotomic values, one per class
//! of whatever table it is evaluated against; operations that need class
//! sizes or the group order take the [`CharacterTable`] explicitly and
//! reject length mismatches. This keeps the type free of lifetimes — a
//! permutation character, for instance, is computed from a group and a list
//! of class representatives before any character table exists.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::cyclo::Cyclotomic;
use super::table::{inner_product_rows, CharacterTable};
use super::CharError;
use crate::elem::GroupElement;
use crate::perm::{Bsgs, ClassRecord, Permutation};

/// A function on the conjugacy classes of a group, stored as one
/// [`Cyclotomic`] value per class.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    /// Wrap a value vector, one entry per class.
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    /// Number of classes this function is defined on.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True for the empty function (no classes).
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The values, in class order.
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// The value at class `k`.
    pub fn value(&self, k: usize) -> &Cyclotomic {
        &self.values[k]
    }

    /// Pointwise sum.
    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, CharError> {
        if self.len() != other.len() {
            return Err(CharError::ClassCountMismatch { left: self.len(), right: other.len() });
        }
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect();
        Ok(ClassFunction { values })
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction, CharError> {
        if self.len() != other.len() {
            return Err(CharError::ClassCountMismatch { left: self.len(), right: other.len() });
        }
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b)).collect();
        Ok(ClassFunction { values })
    }

    /// Pointwise scaling by a rational.
    #[must_use]
    pub fn scale(&self, r: &BigRational) -> ClassFunction {
        ClassFunction { values: self.values.iter().map(|v| v.scale(r)).collect() }
    }
}

impl CharacterTable {
    /// Character row `i` as a standalone class function.
    pub fn row(&self, i: usize) -> Result<ClassFunction, CharError> {
        if i >= self.char_count() {
            return Err(CharError::ClassIndex { index: i, count: self.char_count() });
        }
        Ok(ClassFunction::new(self.character(i).to_vec()))
    }
}

/// `⟨f, g⟩ = (1/|G|) Σ_K |K| · f(K) · conj(g(K))` over the classes of
/// `table`.
///
/// Both functions must have exactly one value per class of the table.
pub fn inner_product(
    table: &CharacterTable,
    f: &ClassFunction,
    g: &ClassFunction,
) -> Result<Cyclotomic, CharError> {
    let n = table.class_count();
    if f.len() != n {
        return Err(CharError::ClassCountMismatch { left: f.len(), right: n });
    }
    if g.len() != n {
        return Err(CharError::ClassCountMismatch { left: g.len(), right: n });
    }
    Ok(inner_product_rows(table, f.values(), g.values()))
}

/// A map from the classes of a subgroup H to the classes of an ambient
/// group G, sending the class of h∈H to the class of h in G.
///
/// The map may be built up entry by entry and is *partial* until every
/// source class has an image; operations that consume a fusion insist on
/// totality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionMap {
    map: Vec<Option<usize>>,
    target_count: usize,
}

impl FusionMap {
    /// An empty (fully partial) fusion between tables of the given sizes.
    pub fn new(source_count: usize, target_count: usize) -> Self {
        FusionMap { map: vec![None; source_count], target_count }
    }

    /// The identity fusion of a table onto itself.
    pub fn identity(count: usize) -> Self {
        FusionMap { map: (0..count).map(Some).collect(), target_count: count }
    }

    /// A total fusion from an explicit image list.
    pub fn from_images(images: &[usize], target_count: usize) -> Result<Self, CharError> {
        let mut fusion = FusionMap::new(images.len(), target_count);
        for (h, &g) in images.iter().enumerate() {
            fusion.set(h, g)?;
        }
        Ok(fusion)
    }

    /// Record that source class `h` fuses into target class `g`.
    ///
    /// Setting the same source class twice to different targets is an
    /// error; re-recording the same image is allowed.
    pub fn set(&mut self, h: usize, g: usize) -> Result<(), CharError> {
        if h >= self.map.len() {
            return Err(CharError::BadFusion(format!(
                "source class {h} out of range for {} classes",
                self.map.len()
            )));
        }
        if g >= self.target_count {
            return Err(CharError::BadFusion(format!(
                "target class {g} out of range for {} classes",
                self.target_count
            )));
        }
        match self.map[h] {
            Some(old) if old != g => Err(CharError::BadFusion(format!(
                "source class {h} fused to both {old} and {g}"
            ))),
            _ => {
                self.map[h] = Some(g);
                Ok(())
            }
        }
    }

    /// Number of source classes.
    pub fn source_count(&self) -> usize {
        self.map.len()
    }

    /// Number of target classes.
    pub fn target_count(&self) -> usize {
        self.target_count
    }

    /// The image of source class `h`, if recorded.
    pub fn image(&self, h: usize) -> Option<usize> {
        self.map.get(h).copied().flatten()
    }

    /// True when every source class has an image.
    pub fn is_total(&self) -> bool {
        self.map.iter().all(Option::is_some)
    }

    /// Check this fusion against the two tables it is meant to connect:
    /// the class counts must match, the map must be total, fused classes
    /// must have equal element orders, and each source centralizer order
    /// must divide the target centralizer order.
    pub fn validate(
        &self,
        source: &CharacterTable,
        target: &CharacterTable,
    ) -> Result<(), CharError> {
        if self.source_count() != source.class_count() {
            return Err(CharError::BadFusion(format!(
                "fusion has {} source classes, table has {}",
                self.source_count(),
                source.class_count()
            )));
        }
        if self.target_count != target.class_count() {
            return Err(CharError::BadFusion(format!(
                "fusion has {} target classes, table has {}",
                self.target_count,
                target.class_count()
            )));
        }
        for (h, image) in self.map.iter().enumerate() {
            let g = image.ok_or_else(|| {
                CharError::BadFusion(format!("source class {h} has no image"))
            })?;
            let sc = &source.classes()[h];
            let tc = &target.classes()[g];
            if sc.order != tc.order {
                return Err(CharError::BadFusion(format!(
                    "class {h} (order {}) fuses into class {g} (order {})",
                    sc.order, tc.order
                )));
            }
            if !(&tc.centralizer % &sc.centralizer).is_zero() {
                return Err(CharError::BadFusion(format!(
                    "centralizer order of class {h} does not divide its image's"
                )));
            }
        }
        Ok(())
    }
}

/// Pull a class function on the big group back to the subgroup along a
/// fusion: `(chi|_H)(K) = chi(fusion(K))`.
///
/// `chi` must be defined on the fusion's target classes, and the fusion
/// must be total.
pub fn restrict_with_fusion(
    chi: &ClassFunction,
    fusion: &FusionMap,
) -> Result<ClassFunction, CharError> {
    if chi.len() != fusion.target_count() {
        return Err(CharError::ClassCountMismatch {
            left: chi.len(),
            right: fusion.target_count(),
        });
    }
    let mut values = Vec::with_capacity(fusion.source_count());
    for h in 0..fusion.source_count() {
        let g = fusion
            .image(h)
            .ok_or_else(|| CharError::BadFusion(format!("source class {h} has no image")))?;
        values.push(chi.value(g).clone());
    }
    Ok(ClassFunction::new(values))
}

/// The permutation character of `group` acting on the right cosets of
/// `subgroup`: its value at each class is the number of cosets fixed by the
/// class representative.
///
/// The subgroup is membership-checked generator by generator. The coset
/// space is enumerated explicitly and may hold at most `budget` points.
/// Values are indexed by the given class list, so they line up with any
/// character table whose columns follow the same order.
pub fn permutation_character(
    group: &Bsgs,
    subgroup: &Bsgs,
    classes: &[ClassRecord],
    budget: usize,
) -> Result<ClassFunction, CharError> {
    if subgroup.degree() != group.degree() {
        return Err(CharError::Perm(crate::perm::PermError::DegreeMismatch {
            left: subgroup.degree(),
            right: group.degree(),
        }));
    }
    for gen in subgroup.generators() {
        if !group.contains(gen) {
            return Err(CharError::NotSubgroup);
        }
    }

    // Breadth-first closure of the coset H·1 under the group generators.
    // Two cosets Ha, Hb coincide exactly when a·b⁻¹ ∈ H.
    let mut reps: Vec<Permutation> = vec![Permutation::identity(group.degree())];
    let mut frontier = 0;
    while frontier < reps.len() {
        let rep = reps[frontier].clone();
        frontier += 1;
        for gen in group.generators() {
            let cand = rep.compose(gen);
            let known = reps.iter().any(|r| subgroup.contains(&cand.compose(&r.inverse())));
            if !known {
                if reps.len() >= budget {
                    return Err(CharError::Budget { budget });
                }
                reps.push(cand);
            }
        }
    }
    debug_assert_eq!(
        BigUint::from(reps.len()) * subgroup.order(),
        group.order().clone(),
        "coset enumeration disagrees with the order quotient"
    );

    let mut values = Vec::with_capacity(classes.len());
    for record in classes {
        if record.rep.degree() != group.degree() {
            return Err(CharError::Perm(crate::perm::PermError::DegreeMismatch {
                left: record.rep.degree(),
                right: group.degree(),
            }));
        }
        // H r x = H r  ⟺  r x r⁻¹ ∈ H.
        let fixed = reps
            .iter()
            .filter(|r| subgroup.contains(&r.compose(&record.rep).compose(&r.inverse())))
            .count();
        values.push(Cyclotomic::integer(fixed as i64));
    }
    Ok(ClassFunction::new(values))
}

/// All multisets of character indices with the given total degree,
/// enumerated in lexicographic index order. `distinct` restricts the
/// search to multiplicity-free sums (each character at most once).
fn degree_sums(degrees: &[u64], target: u64, distinct: bool) -> Vec<Vec<usize>> {
    let n = degrees.len();
    let t = target as usize;
    // reach[i][r]: some selection from indices ≥ i sums to r. Selecting
    // index i leaves the remainder at index i (repeats allowed) or i+1
    // (multiplicity-free).
    let mut reach = vec![vec![false; t + 1]; n + 1];
    reach[n][0] = true;
    for i in (0..n).rev() {
        for r in 0..=t {
            let take = r as u64 >= degrees[i] && {
                let rest = r - degrees[i] as usize;
                if distinct {
                    reach[i + 1][rest]
                } else {
                    reach[i][rest]
                }
            };
            reach[i][r] = take || reach[i + 1][r];
        }
    }

    let mut out = Vec::new();
    let mut current = Vec::new();
    // Depth-first walk that only descends into branches the table proves
    // completable, so the cost is linear in the output.
    fn walk(
        degrees: &[u64],
        reach: &[Vec<bool>],
        distinct: bool,
        start: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for i in start..degrees.len() {
            let d = degrees[i] as usize;
            if d > remaining {
                continue;
            }
            let next = if distinct { i + 1 } else { i };
            if !reach[next][remaining - d] {
                continue;
            }
            current.push(i);
            walk(degrees, reach, distinct, next, remaining - d, current, out);
            current.pop();
        }
    }
    walk(degrees, &reach, distinct, 0, t, &mut current, &mut out);
    out
}

/// The degree of every character of `table`, as plain integers.
fn all_degrees(table: &CharacterTable) -> Result<Vec<u64>, CharError> {
    (0..table.char_count())
        .map(|i| {
            table.degree(i)?.to_u64().ok_or_else(|| {
                CharError::NotIntegral(format!("degree of character {i} exceeds u64"))
            })
        })
        .collect()
}

/// Canonical comparison key for a vector of cyclotomic values: the full
/// coefficient vectors at a common conductor.
fn restriction_key(values: &[Cyclotomic], conductor: u64) -> Vec<Vec<BigRational>> {
    values.iter().map(|v| v.embed_coeffs(conductor)).collect()
}

/// Sum of the named characters of `table`, restricted along `fusion`.
fn restricted_sum(table: &CharacterTable, indices: &[usize], fusion: &FusionMap) -> Vec<Cyclotomic> {
    let mut values = vec![Cyclotomic::zero(); fusion.source_count()];
    for &i in indices {
        for (h, value) in values.iter_mut().enumerate() {
            let g = fusion.image(h).expect("fusion checked total");
            *value = value.add(table.value(i, g));
        }
    }
    values
}

/// Find all pairs of character sums of total degree `degree` — one sum from
/// `table_a`, one from `table_g` — whose restrictions to the common
/// subgroup table `table_h` agree as class functions.
///
/// Each side of a pair is a multiset of character indices, sorted
/// ascending; `multiplicity_free` restricts both sides to genuine subsets.
/// The result is sorted lexicographically by the index sequences, so the
/// enumeration order is deterministic. An empty result is a valid answer.
pub fn compatible_pairs(
    table_a: &CharacterTable,
    table_g: &CharacterTable,
    table_h: &CharacterTable,
    fusion_a: &FusionMap,
    fusion_g: &FusionMap,
    degree: u64,
    multiplicity_free: bool,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>, CharError> {
    if degree == 0 {
        return Err(CharError::Shape(String::from("the target degree must be positive")));
    }
    for (fusion, target, label) in
        [(fusion_a, table_a, "first"), (fusion_g, table_g, "second")]
    {
        if fusion.source_count() != table_h.class_count() {
            return Err(CharError::BadFusion(format!(
                "{label} fusion has {} source classes, subgroup table has {}",
                fusion.source_count(),
                table_h.class_count()
            )));
        }
        if fusion.target_count() != target.class_count() {
            return Err(CharError::BadFusion(format!(
                "{label} fusion has {} target classes, table has {}",
                fusion.target_count(),
                target.class_count()
            )));
        }
        if !fusion.is_total() {
            return Err(CharError::BadFusion(format!("{label} fusion is partial")));
        }
    }

    let degrees_a = all_degrees(table_a)?;
    let degrees_g = all_degrees(table_g)?;
    let sums_a = degree_sums(&degrees_a, degree, multiplicity_free);
    let sums_g = degree_sums(&degrees_g, degree, multiplicity_free);

    let conductor = table_a.conductor().lcm(&table_g.conductor());
    let mut by_restriction: BTreeMap<Vec<Vec<BigRational>>, Vec<Vec<usize>>> = BTreeMap::new();
    for indices in sums_a {
        let key = restriction_key(&restricted_sum(table_a, &indices, fusion_a), conductor);
        by_restriction.entry(key).or_default().push(indices);
    }

    let mut pairs = Vec::new();
    for indices_g in sums_g {
        let key = restriction_key(&restricted_sum(table_g, &indices_g, fusion_g), conductor);
        if let Some(matches) = by_restriction.get(&key) {
            for indices_a in matches {
                pairs.push((indices_a.clone(), indices_g.clone()));
            }
        }
    }
    pairs.sort();
    Ok(pairs)
}
