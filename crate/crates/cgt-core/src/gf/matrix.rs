//! Dense matrices over GF(p) with exact, deterministic linear algebra.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Echelon, GfError, PrimeField};
use crate::elem::GroupElement;

/// A dense matrix over a prime field, entries stored row-major as least
/// nonnegative residues.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix GF({}) {}x{}", self.field.p(), self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FMatrix {
    /// Builds a matrix from row-major entries, validating the residue range
    /// and the entry count.
    pub fn new(
        field: PrimeField,
        rows: usize,
        cols: usize,
        entries: Vec<u64>,
    ) -> Result<Self, GfError> {
        if entries.len() != rows * cols {
            return Err(GfError::EntryCount { expected: rows * cols, got: entries.len() });
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= field.p()) {
            return Err(GfError::EntryRange { value: bad, p: field.p() });
        }
        Ok(FMatrix { field, rows, cols, entries })
    }

    /// Builds a matrix from rows, reducing arbitrary unsigned entries mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Result<Self, GfError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(GfError::DimMismatch {
                    op: "from_rows",
                    left: (r, c),
                    right: (1, row.len()),
                });
            }
            entries.extend(row.iter().map(|&e| field.reduce(e)));
        }
        FMatrix::new(field, r, c, entries)
    }

    /// The n×n identity matrix.
    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FMatrix { field, rows: n, cols: n, entries }
    }

    /// The all-zero matrix of the given shape.
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FMatrix { field, rows, cols, entries: vec![0u64; rows * cols] }
    }

    /// A diagonal square matrix with the given diagonal residues.
    pub fn diagonal(field: PrimeField, diag: &[u64]) -> Result<Self, GfError> {
        let n = diag.len();
        let mut m = FMatrix::zeros(field, n, n);
        for (i, &d) in diag.iter().enumerate() {
            if d >= field.p() {
                return Err(GfError::EntryRange { value: d, p: field.p() });
            }
            m.set(i, i, d);
        }
        Ok(m)
    }

    /// The field this matrix lives over.
    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of rows.
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether the matrix is square.
    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at row `i`, column `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    /// Sets the entry at row `i`, column `j` (must already be a residue).
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.field.p());
        self.entries[i * self.cols + j] = v;
    }

    /// Row `i` as a slice.
    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// The transpose.
    pub fn transpose(&self) -> FMatrix {
        let mut t = FMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Entrywise sum.
    pub fn add(&self, other: &FMatrix) -> Result<FMatrix, GfError> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(GfError::DimMismatch {
                op: "add",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = self.field;
        let entries =
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(FMatrix { field: f, rows: self.rows, cols: self.cols, entries })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &FMatrix) -> Result<FMatrix, GfError> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(GfError::DimMismatch {
                op: "sub",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = self.field;
        let entries =
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(FMatrix { field: f, rows: self.rows, cols: self.cols, entries })
    }

    /// Multiplies every entry by the residue `c`.
    pub fn scale(&self, c: u64) -> FMatrix {
        let f = self.field;
        let entries = self.entries.iter().map(|&a| f.mul(a, c)).collect();
        FMatrix { field: f, rows: self.rows, cols: self.cols, entries }
    }

    /// The row vector `v · self` (the natural right action on row vectors).
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        debug_assert_eq!(v.len(), self.rows);
        let f = self.field;
        let p = f.p() as u128;
        let mut out = vec![0u64; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            let row = self.row(i);
            for (o, &m) in out.iter_mut().zip(row) {
                *o = ((*o as u128 + vi as u128 * m as u128) % p) as u64;
            }
        }
        out
    }

    /// `self^e` for a signed exponent (inverting first when `e < 0`).
    pub fn pow(&self, e: i64) -> Result<FMatrix, GfError> {
        if !self.is_square() {
            return Err(GfError::DimMismatch {
                op: "pow",
                left: (self.rows, self.cols),
                right: (self.cols, self.rows),
            });
        }
        let base = if e < 0 { mat_inverse(self)? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = FMatrix::identity(self.field, self.rows);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = mat_mul(&acc, &sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = mat_mul(&sq, &sq)?;
            }
        }
        Ok(acc)
    }

    /// The rank, by deterministic Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i));
        }
        ech.rank()
    }

    /// The reduced row echelon form of the row space (dropping zero rows),
    /// together with the pivot columns.
    pub fn row_space(&self) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut ech = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i));
        }
        let pivots = ech.pivots().to_vec();
        (ech.into_basis(), pivots)
    }

    fn check_field(&self, other: &FMatrix) -> Result<(), GfError> {
        if self.field != other.field {
            Err(GfError::FieldMismatch { left: self.field.p(), right: other.field.p() })
        } else {
            Ok(())
        }
    }
}

/// Exact matrix product over GF(p).
pub fn mat_mul(a: &FMatrix, b: &FMatrix) -> Result<FMatrix, GfError> {
    if a.field != b.field {
        return Err(GfError::FieldMismatch { left: a.field.p(), right: b.field.p() });
    }
    if a.cols != b.rows {
        return Err(GfError::DimMismatch {
            op: "mat_mul",
            left: (a.rows, a.cols),
            right: (b.rows, b.cols),
        });
    }
    let f = a.field;
    let p = f.p() as u128;
    let mut out = FMatrix::zeros(f, a.rows, b.cols);
    for i in 0..a.rows {
        let arow = a.row(i);
        let orow = &mut out.entries[i * b.cols..(i + 1) * b.cols];
        for (k, &aik) in arow.iter().enumerate() {
            if aik == 0 {
                continue;
            }
            let brow = b.row(k);
            for (o, &bkj) in orow.iter_mut().zip(brow) {
                *o = ((*o as u128 + aik as u128 * bkj as u128) % p) as u64;
            }
        }
    }
    Ok(out)
}

/// Exact inverse of a square matrix; a singular input is reported together
/// with the rank elimination reached.
pub fn mat_inverse(a: &FMatrix) -> Result<FMatrix, GfError> {
    if !a.is_square() {
        return Err(GfError::DimMismatch {
            op: "mat_inverse",
            left: (a.rows, a.cols),
            right: (a.cols, a.cols),
        });
    }
    let f = a.field;
    let n = a.rows;
    // Gauss–Jordan on [A | I] with first-nonzero pivoting.
    let mut work: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.resize(2 * n, 0);
            row[n + i] = 1;
            row
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(pivot_row) = (rank..n).find(|&r| work[r][col] != 0) else {
            continue;
        };
        work.swap(rank, pivot_row);
        let inv = f.inv(work[rank][col]).expect("nonzero pivot");
        if inv != 1 {
            for x in work[rank].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let pivot = work[rank].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let c = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(c, pv));
                }
            }
        }
        rank += 1;
    }
    if rank < n {
        return Err(GfError::Singular { rank });
    }
    let mut entries = Vec::with_capacity(n * n);
    // After full elimination the left block is a permuted identity only if
    // pivoting never skipped a column; with rank == n every column was used
    // in order, so rows are already in pivot order.
    for row in &work {
        entries.extend_from_slice(&row[n..]);
    }
    Ok(FMatrix { field: f, rows: n, cols: n, entries })
}

/// An echelonized basis of the right null space `{x : a·x = 0}`.
///
/// The basis vectors are returned as length-`cols` vectors; the dimension is
/// exactly `cols − rank(a)`.
pub fn kernel(a: &FMatrix) -> Vec<Vec<u64>> {
    let f = a.field;
    let n = a.cols;
    let (rref, pivots) = a.row_space();
    let is_pivot = {
        let mut mask = vec![false; n];
        for &p in &pivots {
            mask[p] = true;
        }
        mask
    };
    let mut basis = Echelon::new(f, n);
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pcol) in rref.iter().zip(&pivots) {
            // x[pcol] = -row[free]
            v[pcol] = f.neg(row[free]);
        }
        basis.insert(&v);
    }
    basis.into_basis()
}

/// Maps each generator g to `(g⁻¹)ᵀ` — the dual representation. The map is a
/// homomorphism of the generated matrix groups.
pub fn dual_generators(gens: &[FMatrix]) -> Result<Vec<FMatrix>, GfError> {
    gens.iter().map(|g| Ok(mat_inverse(g)?.transpose())).collect()
}

impl GroupElement for FMatrix {
    fn identity_like(&self) -> Self {
        FMatrix::identity(self.field, self.rows)
    }

    fn compose(&self, other: &Self) -> Self {
        mat_mul(self, other).expect("composing group elements of one matrix group")
    }

    fn inverse(&self) -> Self {
        mat_inverse(self).expect("group elements are invertible")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn scalar_product_mod_13() {
        let f = gf(13);
        let a = FMatrix::from_rows(f, &[vec![2]]).unwrap();
        let b = FMatrix::from_rows(f, &[vec![7]]).unwrap();
        let ab = mat_mul(&a, &b).unwrap();
        assert_eq!(ab.get(0, 0), 1); // 14 mod 13
    }

    #[test]
    fn identity_neutral() {
        let f = gf(2);
        let m = FMatrix::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 0]]).unwrap();
        let id = FMatrix::identity(f, 3);
        assert_eq!(mat_mul(&id, &m).unwrap(), m);
        assert_eq!(mat_mul(&m, &id).unwrap(), m);
    }

    #[test]
    fn inverse_roundtrip_and_scalar() {
        let f = gf(13);
        let two = FMatrix::from_rows(f, &[vec![2]]).unwrap();
        assert_eq!(mat_inverse(&two).unwrap().get(0, 0), 7);

        let m = FMatrix::from_rows(f, &[vec![1, 2, 3], vec![0, 1, 4], vec![5, 6, 0]]).unwrap();
        let mi = mat_inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &mi).unwrap(), FMatrix::identity(f, 3));
        assert_eq!(mat_mul(&mi, &m).unwrap(), FMatrix::identity(f, 3));
    }

    #[test]
    fn singular_reports_rank() {
        let f = gf(2);
        let m = FMatrix::from_rows(f, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(mat_inverse(&m), Err(GfError::Singular { rank: 1 }));
    }

    #[test]
    fn kernel_dimensions() {
        let f = gf(2);
        let zero = FMatrix::zeros(f, 3, 3);
        assert_eq!(kernel(&zero).len(), 3);
        let id = FMatrix::identity(f, 11);
        assert!(kernel(&id).is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f = gf(13);
        let m = FMatrix::from_rows(
            f,
            &[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 0, 1]],
        )
        .unwrap();
        let basis = kernel(&m);
        assert_eq!(basis.len(), 4 - m.rank());
        for v in &basis {
            // m · v = 0 (v as a column)
            for i in 0..m.rows() {
                let mut acc = 0u64;
                for j in 0..m.cols() {
                    acc = f.add(acc, f.mul(m.get(i, j), v[j]));
                }
                assert_eq!(acc, 0);
            }
        }
    }

    #[test]
    fn dual_is_involutive() {
        let f = gf(13);
        let m = FMatrix::from_rows(f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let d = dual_generators(&[m.clone()]).unwrap();
        let dd = dual_generators(&d).unwrap();
        assert_eq!(dd[0], m);
        let id = FMatrix::identity(f, 4);
        assert_eq!(dual_generators(&[id.clone()]).unwrap()[0], id);
    }

    #[test]
    fn row_action_matches_product() {
        let f = gf(5);
        let m = FMatrix::from_rows(f, &[vec![1, 2, 0], vec![0, 1, 1], vec![3, 0, 2]]).unwrap();
        let v = vec![1u64, 4, 2];
        let vm = m.apply_row(&v);
        let as_mat = FMatrix::from_rows(f, &[v]).unwrap();
        assert_eq!(mat_mul(&as_mat, &m).unwrap().row(0), &vm[..]);
    }
}
