//! Permutations on `{1, …, n}`, stored 0-based internally.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::PermError;
use crate::elem::GroupElement;

/// A permutation of `n` points.
///
/// Points are numbered `1..=n` in every public textual interface; internally
/// the image array is 0-based.  Composition is left-to-right: `(p * q)` means
/// "apply `p`, then `q`", matching the right action of matrices on row
/// vectors so that matrix-to-permutation conversion is a homomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images (`images[x]` is the image of
    /// `x`).  Fails unless the array is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &y in &images {
            let y = y as usize;
            if y >= degree || seen[y] {
                return Err(PermError::NotBijection { degree });
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images, the convention of the
    /// permutation file format.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self, PermError> {
        let degree = images.len();
        let mut zero = Vec::with_capacity(degree);
        for &y in images {
            if y == 0 || y > degree {
                return Err(PermError::PointRange { point: y, degree });
            }
            zero.push((y - 1) as u32);
        }
        Self::from_images(zero)
    }

    /// Builds a permutation of `degree` points from disjoint cycles written
    /// with 1-based points.  Points may appear at most once across all
    /// cycles; omitted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointRange { point: p, degree });
                }
                if seen[p - 1] {
                    return Err(PermError::RepeatedPoint { point: p });
                }
                seen[p - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i] - 1;
                let to = cycle[(i + 1) % cycle.len()] - 1;
                images[from] = to as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Number of points the permutation acts on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// The 0-based image array.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Whether every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// The smallest moved 0-based point, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(x, &y)| x as u32 != y).map(|(x, _)| x)
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn compose_checked(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.compose(other))
    }

    /// Decomposes into nontrivial cycles of 1-based points, each cycle
    /// starting at its smallest point, cycles sorted by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths including fixed points, sorted descending —
    /// the cycle type as a partition of the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Order of the permutation: the least common multiple of its cycle
    /// lengths.
    pub fn order(&self) -> u64 {
        let mut ord: u64 = 1;
        let n = self.degree();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    /// Conjugate `self` by `by`: the permutation `by⁻¹ · self · by` (apply
    /// `by⁻¹`, then `self`, then `by`).
    pub fn conjugate(&self, by: &Self) -> Self {
        debug_assert_eq!(self.degree(), by.degree());
        let n = self.degree();
        let mut images = vec![0u32; n];
        for x in 0..n {
            // (by⁻¹·self·by)(by(x)) = by(self(x))
            images[by.apply(x)] = by.images[self.apply(x)];
        }
        Permutation { images }
    }
}

impl GroupElement for Permutation {
    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self.images.iter().map(|&y| other.images[y as usize]).collect();
        Permutation { images }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // p = (1 2), q = (2 3); p*q sends 1 → 2 → 3.
        let p = cyc(3, &[&[1, 2]]);
        let q = cyc(3, &[&[2, 3]]);
        let pq = p.compose(&q);
        assert_eq!(pq.apply(0), 2);
        assert_eq!(pq.to_string(), "(1 3 2)");
    }

    #[test]
    fn inverse_and_order() {
        let c11 = cyc(11, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]);
        assert_eq!(c11.order(), 11);
        assert!(c11.compose(&c11.inverse()).is_identity());
        let mixed = cyc(5, &[&[1, 2], &[3, 4, 5]]);
        assert_eq!(mixed.order(), 6);
        assert_eq!(mixed.cycle_type(), vec![3, 2]);
    }

    #[test]
    fn conjugate_matches_composition() {
        let g = cyc(4, &[&[1, 2, 3]]);
        let h = cyc(4, &[&[3, 4]]);
        let direct = h.inverse().compose(&g).compose(&h);
        assert_eq!(g.conjugate(&h), direct);
        assert_eq!(g.conjugate(&h).to_string(), "(1 2 4)");
    }

    #[test]
    fn validation_rejects_bad_input() {
        assert!(matches!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(PermError::NotBijection { degree: 3 })
        ));
        assert!(matches!(
            Permutation::from_cycles(3, &[vec![1, 4]]),
            Err(PermError::PointRange { point: 4, degree: 3 })
        ));
        assert!(matches!(
            Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]),
            Err(PermError::RepeatedPoint { point: 2 })
        ));
    }

    #[test]
    fn display_identity() {
        assert_eq!(Permutation::identity(5).to_string(), "()");
    }

    #[test]
    fn power_via_group_element() {
        let c = cyc(6, &[&[1, 2, 3, 4, 5, 6]]);
        assert_eq!(c.power(3).cycle_type(), vec![2, 2, 2]);
        assert_eq!(c.power(-1), c.inverse());
        assert_eq!(c.order_with_cap(10), Some(6));
    }
}
