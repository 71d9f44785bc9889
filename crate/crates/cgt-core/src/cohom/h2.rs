//! Brute-force second cohomology for explicitly enumerated small groups.
//!
//! The group is given by permutation generators and enumerated in full
//! (capped at [`GROUP_LIMIT`](crate::cohom::GROUP_LIMIT) elements); the
//! module is a [`GModule`] whose generators match the permutation
//! generators one for one.  A normalized 2-cocycle is a function
//! `f : G × G → V` with `f(1,·) = f(·,1) = 0` satisfying
//!
//! ```text
//! f(x,y)·M(z) − f(x,yz) + f(xy,z) − f(y,z) = 0      for all x, y, z,
//! ```
//!
//! the associativity condition of the extension `(v,x)(w,y) =
//! (v·M(y) + w + f(x,y), xy)` on `V × G`.  Z² is computed as the kernel
//! of the dense equation matrix over GF(p); B² is spanned by the
//! coboundaries `δc(x,y) = c(x)·M(y) + c(y) − c(xy)` of the elementary
//! functions `c` supported on a single element, which are automatically
//! normalized.

use crate::cohom::{CohomError, GROUP_LIMIT};
use crate::gf::{kernel, mat_mul, Echelon, FMatrix, PrimeField};
use crate::modrep::GModule;
use crate::perm::Permutation;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// The space of normalized 2-cocycles of a small group on a module,
/// together with its coboundary subspace.
///
/// Cocycles are stored as flat coordinate vectors: the value `f(x,y)` of
/// the cocycle on the pair of non-identity elements with indices `x, y`
/// occupies the `dim` coordinates starting at
/// `((x−1)·(n−1) + (y−1))·dim`, where `n` is the group order.  Values on
/// pairs involving the identity are zero by normalization and are not
/// stored.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    field: PrimeField,
    dim: usize,
    elements: Vec<Permutation>,
    matrices: Vec<FMatrix>,
    table: Vec<usize>,
    cocycles: Vec<Vec<u64>>,
    coboundaries: Vec<Vec<u64>>,
}

impl CocycleSpace {
    /// The coefficient field.
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The module dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The enumerated group elements; index 0 is the identity.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// The module action matrix of each element, parallel to
    /// [`elements`](Self::elements).
    pub fn matrices(&self) -> &[FMatrix] {
        &self.matrices
    }

    /// Index of the product `elements[i] · elements[j]`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i * self.elements.len() + j]
    }

    /// Index of the inverse of `elements[i]`.
    pub fn inverse(&self, i: usize) -> usize {
        let n = self.elements.len();
        (0..n)
            .find(|&j| self.table[i * n + j] == 0)
            .expect("every row of a group's multiplication table contains the identity")
    }

    /// Echelonized basis of the normalized 2-cocycles Z².
    pub fn cocycles(&self) -> &[Vec<u64>] {
        &self.cocycles
    }

    /// Echelonized basis of the coboundaries B² ⊆ Z².
    pub fn coboundaries(&self) -> &[Vec<u64>] {
        &self.coboundaries
    }

    /// dim Z².
    pub fn z2_dim(&self) -> usize {
        self.cocycles.len()
    }

    /// dim B².
    pub fn b2_dim(&self) -> usize {
        self.coboundaries.len()
    }

    /// dim H² = dim Z² − dim B².
    pub fn h2_dim(&self) -> usize {
        self.cocycles.len() - self.coboundaries.len()
    }

    /// Number of flat coordinates, `(order − 1)² · dim`.
    pub fn coordinates(&self) -> usize {
        let n = self.elements.len();
        (n - 1) * (n - 1) * self.dim
    }

    /// The value `f(x,y)` of the flat cocycle vector `f` on the elements
    /// with indices `x` and `y` — the zero vector when either is the
    /// identity.
    ///
    /// Panics if `f` does not have [`coordinates`](Self::coordinates)
    /// entries or an index is out of range.
    pub fn value(&self, f: &[u64], x: usize, y: usize) -> Vec<u64> {
        let n = self.elements.len();
        assert_eq!(f.len(), self.coordinates(), "flat cocycle vector has the wrong length");
        assert!(x < n && y < n, "element index out of range");
        if x == 0 || y == 0 {
            return vec![0; self.dim];
        }
        let start = ((x - 1) * (n - 1) + (y - 1)) * self.dim;
        f[start..start + self.dim].to_vec()
    }
}

/// Enumerates the group generated by `generators`, sets up the normalized
/// 2-cocycle system for the module, and solves it.
///
/// `module` must have one action matrix per permutation generator.  The
/// group closure is capped at [`GROUP_LIMIT`] elements, and the system is
/// refused when it would need more than `budget` unknowns (the unknown
/// count is `(|G|−1)²·dim V`).
pub fn h2_bruteforce(
    generators: &[Permutation],
    module: &GModule,
    budget: usize,
) -> Result<CocycleSpace, CohomError> {
    if module.gen_count() != generators.len() {
        return Err(CohomError::GenCount {
            expected: generators.len(),
            got: module.gen_count(),
        });
    }
    let field = module.field();
    let d = module.dimension();
    let degree = generators.first().map_or(1, Permutation::degree);

    // Breadth-first closure, identity first; the element's action matrix is
    // carried along (right action: M(e·g) = M(e)·M(g)).
    let mut elements = vec![Permutation::identity(degree)];
    let mut matrices = vec![FMatrix::identity(field, d)];
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    index.insert(elements[0].images().to_vec(), 0);
    let mut head = 0;
    while head < elements.len() {
        for (g, gen) in generators.iter().enumerate() {
            let prod = elements[head].compose_checked(gen)?;
            if !index.contains_key(prod.images()) {
                let mat = mat_mul(&matrices[head], module.action(g))?;
                index.insert(prod.images().to_vec(), elements.len());
                elements.push(prod);
                matrices.push(mat);
                if elements.len() > GROUP_LIMIT {
                    return Err(CohomError::GroupTooLarge {
                        size: elements.len(),
                        limit: GROUP_LIMIT,
                    });
                }
            }
        }
        head += 1;
    }

    let n = elements.len();
    let width = (n - 1) * (n - 1) * d;
    if width > budget {
        return Err(CohomError::Budget { needed: width, budget });
    }

    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let prod = elements[i].compose_checked(&elements[j])?;
            table[i * n + j] = index[prod.images()];
        }
    }

    let col = |x: usize, y: usize, k: usize| ((x - 1) * (n - 1) + (y - 1)) * d + k;

    // Cocycle identity rows.  Triples with an identity component reduce to
    // 0 = 0 under normalization, so only x, y, z ≥ 1 contribute.
    let mut eqs = Echelon::new(field, width);
    let mut row = vec![0u64; width];
    for x in 1..n {
        if eqs.rank() == width {
            break;
        }
        for y in 1..n {
            let xy = table[x * n + y];
            for z in 1..n {
                let yz = table[y * n + z];
                let mz = &matrices[z];
                for c in 0..d {
                    row.iter_mut().for_each(|v| *v = 0);
                    for k in 0..d {
                        let m = mz.get(k, c);
                        if m != 0 {
                            let i = col(x, y, k);
                            row[i] = field.add(row[i], m);
                        }
                    }
                    if yz != 0 {
                        let i = col(x, yz, c);
                        row[i] = field.sub(row[i], 1);
                    }
                    if xy != 0 {
                        let i = col(xy, z, c);
                        row[i] = field.add(row[i], 1);
                    }
                    let i = col(y, z, c);
                    row[i] = field.sub(row[i], 1);
                    if row.iter().any(|&v| v != 0) {
                        eqs.insert(&row);
                    }
                }
            }
        }
    }

    let cocycles: Vec<Vec<u64>> = if width == 0 {
        Vec::new()
    } else if eqs.rank() == 0 {
        (0..width)
            .map(|i| {
                let mut e = vec![0u64; width];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        let rows = eqs.rank();
        let flat: Vec<u64> = eqs.basis().iter().flat_map(|r| r.iter().copied()).collect();
        kernel(&FMatrix::new(field, rows, width, flat)?)
    };

    // Coboundaries of the elementary functions c = e_k·[· = g], g ≠ 1:
    // δc(x,y) = c(x)·M(y) + c(y) − c(xy), automatically normalized.
    let mut cob = Echelon::new(field, width);
    for g in 1..n {
        for k in 0..d {
            row.iter_mut().for_each(|v| *v = 0);
            for y in 1..n {
                let my = &matrices[y];
                for c in 0..d {
                    let m = my.get(k, c);
                    if m != 0 {
                        let i = col(g, y, c);
                        row[i] = field.add(row[i], m);
                    }
                }
            }
            for x in 1..n {
                let i = col(x, g, k);
                row[i] = field.add(row[i], 1);
            }
            for x in 1..n {
                for y in 1..n {
                    if table[x * n + y] == g {
                        let i = col(x, y, k);
                        row[i] = field.sub(row[i], 1);
                    }
                }
            }
            cob.insert(&row);
        }
    }
    let coboundaries = cob.into_basis();

    // Soundness: B² ⊆ Z².
    let mut span = Echelon::new(field, width);
    for f in &cocycles {
        span.insert(f);
    }
    for b in &coboundaries {
        assert!(span.contains(b), "coboundary escapes the cocycle space");
    }

    Ok(CocycleSpace { field, dim: d, elements, matrices, table, cocycles, coboundaries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::GROUP_LIMIT;
    use alloc::vec;

    fn trivial_module(p: u64, dim: usize, gens: usize) -> GModule {
        let f = PrimeField::new(p).unwrap();
        let actions = (0..gens).map(|_| FMatrix::identity(f, dim)).collect();
        GModule::new(f, dim, actions).unwrap()
    }

    #[test]
    fn c2_on_trivial_gf2_module_has_one_dimensional_h2() {
        let g = Permutation::from_images(vec![1, 0]).unwrap();
        let space = h2_bruteforce(&[g], &trivial_module(2, 1, 1), 1000).unwrap();
        assert_eq!(space.order(), 2);
        assert_eq!((space.z2_dim(), space.b2_dim(), space.h2_dim()), (1, 0, 1));
        // One free value f(g,g); the nonzero class is realized by C4.
        assert_eq!(space.cocycles().to_vec(), vec![vec![1]]);
        assert_eq!(space.value(&space.cocycles()[0], 1, 1), [1]);
        assert_eq!(space.value(&space.cocycles()[0], 0, 1), [0]);
    }

    #[test]
    fn c3_on_trivial_gf2_module_has_trivial_h2() {
        let g = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let space = h2_bruteforce(&[g], &trivial_module(2, 1, 1), 1000).unwrap();
        assert_eq!((space.z2_dim(), space.b2_dim(), space.h2_dim()), (2, 2, 0));
    }

    #[test]
    fn klein_four_on_trivial_gf2_module_dims() {
        let a = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        let b = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        let space = h2_bruteforce(&[a, b], &trivial_module(2, 1, 2), 1000).unwrap();
        assert_eq!(space.order(), 4);
        assert_eq!((space.z2_dim(), space.b2_dim(), space.h2_dim()), (4, 1, 3));
    }

    #[test]
    fn sign_action_of_c2_on_gf3_kills_everything() {
        let g = Permutation::from_images(vec![1, 0]).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let m = GModule::new(f3, 1, vec![FMatrix::new(f3, 1, 1, vec![2]).unwrap()]).unwrap();
        let space = h2_bruteforce(&[g], &m, 1000).unwrap();
        assert_eq!((space.z2_dim(), space.b2_dim(), space.h2_dim()), (0, 0, 0));
    }

    #[test]
    fn multiplication_table_accessors() {
        let a = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        let b = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        let space = h2_bruteforce(&[a, b], &trivial_module(2, 1, 2), 1000).unwrap();
        for i in 0..4 {
            assert_eq!(space.product(i, i), 0, "every Klein four element is an involution");
            assert_eq!(space.inverse(i), i);
            assert_eq!(space.product(0, i), i);
        }
    }

    #[test]
    fn oversized_group_is_rejected() {
        let images: Vec<u32> = (0..201).map(|i| (i + 1) % 201).collect();
        let g = Permutation::from_images(images).unwrap();
        let err = h2_bruteforce(&[g], &trivial_module(2, 1, 1), usize::MAX).unwrap_err();
        assert_eq!(err, CohomError::GroupTooLarge { size: 201, limit: GROUP_LIMIT });
    }

    #[test]
    fn unknown_budget_is_enforced() {
        let a = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        let b = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        let err = h2_bruteforce(&[a, b], &trivial_module(2, 1, 2), 8).unwrap_err();
        assert_eq!(err, CohomError::Budget { needed: 9, budget: 8 });
    }

    #[test]
    fn generator_count_must_match_module() {
        let g = Permutation::from_images(vec![1, 0]).unwrap();
        let err = h2_bruteforce(&[g], &trivial_module(2, 1, 2), 1000).unwrap_err();
        assert_eq!(err, CohomError::GenCount { expected: 1, got: 2 });
    }
}
