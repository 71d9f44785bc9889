//! Conversion of matrix groups to permutation groups via their action on
//! row vectors.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{PermError, Permutation};
use crate::gf::FMatrix;

/// A permutation representation of a matrix group on a finite set of row
/// vectors, together with the point-to-vector dictionary.
pub struct VectorAction {
    perms: Vec<Permutation>,
    points: Vec<Vec<u64>>,
}

impl VectorAction {
    /// The permutation images of the generators, in input order.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.points.len()
    }

    /// The vector labelling the 0-based point `i`.
    pub fn point_vector(&self, i: usize) -> &[u64] {
        &self.points[i]
    }

    /// The 0-based point labelled by `v`, if it is in the domain.
    pub fn point_of_vector(&self, v: &[u64]) -> Option<usize> {
        self.points.iter().position(|p| p == v)
    }
}

/// Converts matrix generators to permutation generators via the right action
/// `v ↦ v·M` on row vectors.
///
/// With `seeds` empty the domain is all nonzero vectors of the natural
/// module, numbered lexicographically (point `k`, 1-based, is the base-`p`
/// digit string of `k`); the domain size `pⁿ − 1` must fit in `budget`.
/// With seed vectors given, the domain is the closure of the seeds under the
/// generators, numbered in breadth-first discovery order starting from the
/// seeds in input order, and must close within `budget` points.
///
/// The map is a group homomorphism because both compositions read
/// left-to-right: `(v·M)·N = v·(MN)` matches `(p*q)(x) = q(p(x))`.
pub fn matrix_to_permutation(
    gens: &[FMatrix],
    seeds: &[Vec<u64>],
    budget: usize,
) -> Result<VectorAction, PermError> {
    let first = gens.first().ok_or(PermError::NoGenerators)?;
    let field = first.field();
    let n = first.rows();
    for g in gens {
        if g.field() != field || g.rows() != n || g.cols() != n {
            return Err(PermError::Matrix(crate::gf::GfError::DimMismatch {
                op: "matrix_to_permutation",
                left: (n, n),
                right: (g.rows(), g.cols()),
            }));
        }
        // Invertibility guarantees the action permutes the domain.
        crate::gf::mat_inverse(g)?;
    }
    let p = field.p();

    let points: Vec<Vec<u64>> = if seeds.is_empty() {
        let mut size: u128 = 1;
        for _ in 0..n {
            size = size.saturating_mul(p as u128);
        }
        let count = size - 1;
        if count > budget as u128 {
            return Err(PermError::OrbitBudget { budget });
        }
        // Lexicographic: the first coordinate is the most significant digit.
        let mut pts = Vec::with_capacity(count as usize);
        let mut v = vec![0u64; n];
        'outer: loop {
            // Increment the digit string (least significant digit last).
            for i in (0..n).rev() {
                v[i] += 1;
                if v[i] < p {
                    pts.push(v.clone());
                    continue 'outer;
                }
                v[i] = 0;
            }
            break;
        }
        pts
    } else {
        let mut index: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        let mut pts: Vec<Vec<u64>> = Vec::new();
        for s in seeds {
            if s.len() != n {
                return Err(PermError::Matrix(crate::gf::GfError::EntryCount {
                    expected: n,
                    got: s.len(),
                }));
            }
            if let Some(&e) = s.iter().find(|&&e| e >= p) {
                return Err(PermError::Matrix(crate::gf::GfError::EntryRange { value: e, p }));
            }
            if !index.contains_key(s) {
                index.insert(s.clone(), pts.len());
                pts.push(s.clone());
            }
        }
        let mut head = 0;
        while head < pts.len() {
            let v = pts[head].clone();
            head += 1;
            for g in gens {
                let img = g.apply_row(&v);
                if !index.contains_key(&img) {
                    if pts.len() >= budget {
                        return Err(PermError::OrbitBudget { budget });
                    }
                    index.insert(img.clone(), pts.len());
                    pts.push(img);
                }
            }
        }
        pts
    };

    let index: BTreeMap<&[u64], usize> =
        points.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let mut perms = Vec::with_capacity(gens.len());
    for g in gens {
        let mut images = Vec::with_capacity(points.len());
        for v in &points {
            let img = g.apply_row(v);
            let &to = index
                .get(img.as_slice())
                .expect("invertible action maps the closed domain into itself");
            images.push(to as u32);
        }
        perms.push(Permutation::from_images(images).expect("invertible action is a bijection"));
    }
    Ok(VectorAction { perms, points })
}
