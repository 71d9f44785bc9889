//! Incremental row echelonization over GF(p).
//!
//! A small workhorse shared by kernels, spinning, minimal polynomials and
//! cocycle linear algebra: rows are inserted one at a time and the structure
//! maintains a reduced row echelon basis of their span. Pivots are the first
//! nonzero column of each row — deterministic, no pivoting heuristics.

use alloc::vec::Vec;

use super::PrimeField;

/// An incrementally maintained reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    /// Rows in increasing pivot order, each normalized to leading 1 and fully
    /// reduced against one another (RREF).
    rows: Vec<Vec<u64>>,
    /// `pivots[i]` is the pivot column of `rows[i]`.
    pivots: Vec<usize>,
}

impl Echelon {
    /// An empty echelon basis for rows of length `width`.
    pub fn new(field: PrimeField, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new(), pivots: Vec::new() }
    }

    /// The number of independent rows inserted so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Row length.
    pub fn width(&self) -> usize {
        self.width
    }

    /// The current RREF basis rows, in increasing pivot order.
    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// The pivot column of each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Consumes the structure and returns the RREF basis rows.
    pub fn into_basis(self) -> Vec<Vec<u64>> {
        self.rows
    }

    /// Reduces `v` in place against the current basis.
    pub fn reduce(&self, v: &mut [u64]) {
        debug_assert_eq!(v.len(), self.width);
        let f = self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row.iter()) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Inserts `v`; returns the new row's pivot column if it was independent,
    /// `None` if it reduced to zero.
    pub fn insert(&mut self, v: &[u64]) -> Option<usize> {
        let f = self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let piv = w.iter().position(|&x| x != 0)?;
        // Normalize to a leading 1.
        let inv = f.inv(w[piv]).expect("nonzero residue");
        if inv != 1 {
            for x in w.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        // Back-substitute into existing rows to keep the basis fully reduced.
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(w.iter()) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        // Keep rows ordered by pivot column.
        let at = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, w);
        Some(piv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rref_invariants() {
        let f = PrimeField::new(13).unwrap();
        let mut e = Echelon::new(f, 3);
        assert_eq!(e.insert(&[0, 2, 4]), Some(1));
        assert_eq!(e.insert(&[3, 1, 2]), Some(0));
        assert_eq!(e.insert(&[3, 3, 6]), None); // dependent on the first two
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), &[0, 1]);
        // Leading ones, and each pivot column cleared elsewhere.
        assert_eq!(e.basis()[0][0], 1);
        assert_eq!(e.basis()[0][1], 0);
        assert_eq!(e.basis()[1][1], 1);
        assert!(e.contains(&[6, 2, 4]));
        assert!(!e.contains(&[0, 0, 1]));
    }

    #[test]
    fn gf2_fill() {
        let f = PrimeField::new(2).unwrap();
        let mut e = Echelon::new(f, 4);
        let rows = vec![
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![1, 0, 1, 0], // sum of the first two
            vec![0, 0, 0, 1],
        ];
        let mut rank = 0;
        for r in &rows {
            if e.insert(r).is_some() {
                rank += 1;
            }
        }
        assert_eq!(rank, 3);
        assert_eq!(e.rank(), 3);
    }
}
