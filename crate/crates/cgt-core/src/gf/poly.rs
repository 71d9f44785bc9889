//! Dense univariate polynomials over GF(p): arithmetic, gcd, Berlekamp
//! factorization, and minimal polynomials of matrices.
//!
//! Degrees here are tiny (bounded by module dimensions), so everything is
//! plain dense arithmetic with deterministic ordering.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{mat_mul, Echelon, FMatrix, PrimeField};

/// A polynomial over GF(p), little-endian coefficients with no trailing
/// zeros (the zero polynomial has an empty coefficient list).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct GfPoly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl fmt::Display for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl GfPoly {
    /// Builds a polynomial, reducing coefficients mod p and trimming.
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        GfPoly { field, coeffs }
    }

    /// The zero polynomial.
    pub fn zero(field: PrimeField) -> Self {
        GfPoly { field, coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one(field: PrimeField) -> Self {
        GfPoly { field, coeffs: vec![1] }
    }

    /// The monomial `x`.
    pub fn x(field: PrimeField) -> Self {
        GfPoly { field, coeffs: vec![0, 1] }
    }

    /// The field of coefficients.
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Little-endian coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The leading coefficient (0 for the zero polynomial).
    pub fn leading(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    /// Scales so the leading coefficient is 1 (no-op on zero).
    pub fn monic(&self) -> GfPoly {
        let lead = self.leading();
        if lead == 0 || lead == 1 {
            return self.clone();
        }
        let inv = self.field.inv(lead).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Multiplies all coefficients by the residue `c`.
    pub fn scale(&self, c: u64) -> GfPoly {
        let f = self.field;
        GfPoly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Polynomial sum.
    pub fn add(&self, other: &GfPoly) -> GfPoly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = f.add(a, b);
        }
        GfPoly::new(f, out)
    }

    /// Polynomial difference.
    pub fn sub(&self, other: &GfPoly) -> GfPoly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = f.sub(a, b);
        }
        GfPoly::new(f, out)
    }

    /// Polynomial product.
    pub fn mul(&self, other: &GfPoly) -> GfPoly {
        if self.is_zero() || other.is_zero() {
            return GfPoly::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        GfPoly::new(f, out)
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn divrem(&self, div: &GfPoly) -> (GfPoly, GfPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let f = self.field;
        let dd = div.coeffs.len() - 1;
        if self.coeffs.len() < div.coeffs.len() {
            return (GfPoly::zero(f), self.clone());
        }
        let lead_inv = f.inv(div.leading()).expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        let mut top = rem.len();
        while top > dd {
            let c = rem[top - 1];
            if c != 0 {
                let q = f.mul(c, lead_inv);
                quo[top - 1 - dd] = q;
                for (k, &dc) in div.coeffs.iter().enumerate() {
                    let idx = top - 1 - dd + k;
                    rem[idx] = f.sub(rem[idx], f.mul(q, dc));
                }
            }
            top -= 1;
        }
        (GfPoly::new(f, quo), GfPoly::new(f, rem))
    }

    /// Remainder of division.
    pub fn rem(&self, div: &GfPoly) -> GfPoly {
        self.divrem(div).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &GfPoly) -> GfPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The formal derivative.
    pub fn derivative(&self) -> GfPoly {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| f.mul(f.reduce(k as u64), c))
            .collect();
        GfPoly::new(f, coeffs)
    }

    /// `x^e mod m` by repeated squaring.
    pub fn x_powmod(field: PrimeField, mut e: u64, m: &GfPoly) -> GfPoly {
        let mut acc = GfPoly::one(field).rem(m);
        let mut base = GfPoly::x(field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &FMatrix) -> FMatrix {
        let n = m.rows();
        let f = m.field();
        let mut acc = FMatrix::zeros(f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = mat_mul(&acc, m).expect("square");
            if c != 0 {
                let scaled_id = FMatrix::identity(f, n).scale(c);
                acc = acc.add(&scaled_id).expect("same shape");
            }
        }
        acc
    }

    /// The irreducible factors with multiplicities, sorted by (degree,
    /// coefficients) for a deterministic order. The input must be nonzero.
    pub fn factor(&self) -> Vec<(GfPoly, usize)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut out: Vec<(GfPoly, usize)> = Vec::new();
        let mut stack = vec![(self.monic(), 1usize)];
        while let Some((f, outer_mult)) = stack.pop() {
            if f.degree() == Some(0) {
                continue;
            }
            let der = f.derivative();
            if der.is_zero() {
                // f = g(x^p) = (g~)^p over GF(p) since Frobenius fixes the
                // prime field; recurse on the p-th root.
                let p = f.field.p() as usize;
                let root_coeffs: Vec<u64> =
                    f.coeffs.iter().step_by(p).copied().collect();
                stack.push((GfPoly::new(f.field, root_coeffs), outer_mult * p));
                continue;
            }
            let sq = f.gcd(&der);
            let sqfree = f.divrem(&sq).0.monic();
            // Every irreducible factor of f whose multiplicity is not
            // divisible by p divides the squarefree part exactly once;
            // take its full multiplicity out of f directly.
            let mut rest = f.clone();
            for irr in berlekamp_squarefree(&sqfree) {
                let mut mult = 0usize;
                loop {
                    let (q, r) = rest.divrem(&irr);
                    if !r.is_zero() {
                        break;
                    }
                    mult += 1;
                    rest = q;
                }
                merge_factor(&mut out, irr, mult * outer_mult);
            }
            // What remains carries only factors with multiplicity divisible
            // by p, hence is a p-th power with zero derivative; the next
            // pass takes its p-th root.
            if rest.degree().unwrap_or(0) > 0 {
                stack.push((rest.monic(), outer_mult));
            }
        }
        out.sort_by(|a, b| {
            (a.0.coeffs.len(), &a.0.coeffs).cmp(&(b.0.coeffs.len(), &b.0.coeffs))
        });
        out
    }

    /// Whether the polynomial is irreducible over GF(p).
    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            _ => {
                let fs = self.factor();
                fs.len() == 1 && fs[0].1 == 1
            }
        }
    }
}

fn merge_factor(out: &mut Vec<(GfPoly, usize)>, f: GfPoly, mult: usize) {
    if mult == 0 {
        return;
    }
    for (g, m) in out.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    out.push((f, mult));
}

/// Berlekamp factorization of a squarefree monic polynomial into monic
/// irreducibles (deterministic: splits try residues in increasing order).
fn berlekamp_squarefree(f: &GfPoly) -> Vec<GfPoly> {
    let field = f.field;
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.monic()],
        Some(n) => n,
    };
    // Berlekamp Q matrix: row i = coefficients of x^(i·p) mod f.
    let xp = GfPoly::x_powmod(field, field.p(), f);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = GfPoly::one(field);
    for _ in 0..n {
        let mut row = cur.coeffs.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = cur.mul(&xp).rem(f);
    }
    // Solve v (Q - I) = 0, i.e. kernel of (Q - I)^T.
    let mut qmi = FMatrix::zeros(field, n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            let v = if i == j { field.sub(c, 1) } else { c };
            qmi.set(j, i, v); // transposed
        }
    }
    let null = super::kernel(&qmi);
    if null.len() <= 1 {
        return vec![f.monic()];
    }
    // Split using the first non-constant basis vector; recurse.
    let split_v = null
        .iter()
        .map(|v| GfPoly::new(field, v.clone()))
        .find(|p| p.degree().unwrap_or(0) >= 1)
        .expect("kernel of dimension > 1 contains a non-constant polynomial");
    let mut pieces = Vec::new();
    for c in 0..field.p() {
        let shifted = split_v.sub(&GfPoly::new(field, vec![c]));
        let g = f.gcd(&shifted);
        if g.degree().unwrap_or(0) >= 1 {
            pieces.push(g);
        }
    }
    let mut out = Vec::new();
    for piece in pieces {
        if piece.degree() == f.degree() {
            // No progress with this vector value set; should not happen for
            // kernel dimension > 1, but guard against infinite recursion.
            out.push(piece.monic());
        } else {
            out.extend(berlekamp_squarefree(&piece));
        }
    }
    out.sort_by(|a, b| (a.coeffs.len(), &a.coeffs).cmp(&(b.coeffs.len(), &b.coeffs)));
    out.dedup();
    out
}

/// The minimal polynomial of a square matrix, via the first linear
/// dependence among `I, M, M², …`.
pub fn minimal_polynomial(m: &FMatrix) -> GfPoly {
    assert!(m.is_square(), "minimal polynomial requires a square matrix");
    let f = m.field();
    let n = m.rows();
    let width = n * n;
    // Augment each flattened power with tracking coefficients so the first
    // dependency yields the polynomial directly.
    let mut ech = Echelon::new(f, width + n + 2);
    let mut power = FMatrix::identity(f, n);
    for k in 0..=n {
        let mut row = Vec::with_capacity(width + n + 2);
        row.extend_from_slice(power.entries());
        let mut track = vec![0u64; n + 2];
        track[k] = 1;
        row.extend_from_slice(&track);
        if ech.insert(&row).is_none() {
            unreachable!("tracked rows are always independent");
        }
        // Check whether the flattened powers alone became dependent: reduce
        // the new power against prior ones by solving on the tracked basis.
        // Dependency shows up when some combination has zero matrix part.
        for basis_row in ech.basis() {
            if basis_row[..width].iter().all(|&x| x == 0) {
                let coeffs = basis_row[width..].to_vec();
                return GfPoly::new(f, coeffs).monic();
            }
        }
        power = mat_mul(&power, m).expect("square");
    }
    unreachable!("a dependence must occur by degree n (Cayley–Hamilton)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn divrem_roundtrip() {
        let f = gf(13);
        let a = GfPoly::new(f, vec![1, 0, 2, 5, 1]);
        let b = GfPoly::new(f, vec![3, 1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_products() {
        let f = gf(5);
        let a = GfPoly::new(f, vec![1, 1]); // x + 1
        let b = GfPoly::new(f, vec![2, 1]); // x + 2
        let c = GfPoly::new(f, vec![3, 1]); // x + 3
        let ab = a.mul(&b);
        let ac = a.mul(&c);
        assert_eq!(ab.gcd(&ac), a.monic());
    }

    #[test]
    fn factor_gf2() {
        let f = gf(2);
        // x^4 + x = x (x+1) (x^2+x+1)
        let p = GfPoly::new(f, vec![0, 1, 0, 0, 1]);
        let factors = p.factor();
        let expect = vec![
            (GfPoly::new(f, vec![0, 1]), 1),
            (GfPoly::new(f, vec![1, 1]), 1),
            (GfPoly::new(f, vec![1, 1, 1]), 1),
        ];
        assert_eq!(factors, expect);
    }

    #[test]
    fn factor_with_multiplicity() {
        let f = gf(3);
        // (x+1)^3 (x^2+1): note (x^2+1) is irreducible mod 3
        let a = GfPoly::new(f, vec![1, 1]);
        let b = GfPoly::new(f, vec![1, 0, 1]);
        let p = a.mul(&a).mul(&a).mul(&b);
        let factors = p.factor();
        assert_eq!(factors, vec![(a.monic(), 3), (b.monic(), 1)]);
    }

    #[test]
    fn factor_pth_power() {
        let f = gf(2);
        // (x^2 + x + 1)^2 = x^4 + x^2 + 1 has zero derivative over GF(2)
        let a = GfPoly::new(f, vec![1, 1, 1]);
        let p = a.mul(&a);
        assert_eq!(p.factor(), vec![(a.clone(), 2)]);
    }

    #[test]
    fn irreducibility() {
        let f = gf(2);
        assert!(GfPoly::new(f, vec![1, 1, 1]).is_irreducible()); // x²+x+1
        assert!(!GfPoly::new(f, vec![1, 0, 1]).is_irreducible()); // (x+1)²
        assert!(GfPoly::new(f, vec![1, 1, 0, 1]).is_irreducible()); // x³+x+1
    }

    #[test]
    fn minimal_polynomial_examples() {
        let f = gf(2);
        let id = FMatrix::identity(f, 4);
        // minpoly(I) = x + 1
        assert_eq!(minimal_polynomial(&id), GfPoly::new(f, vec![1, 1]));

        // Companion matrix of x^2 + x + 1 over GF(2)
        let c = FMatrix::from_rows(f, &[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(minimal_polynomial(&c), GfPoly::new(f, vec![1, 1, 1]));

        // A diagonal matrix over GF(13) has squarefree minpoly with the
        // distinct eigenvalues as roots.
        let g = gf(13);
        let d = FMatrix::diagonal(g, &[2, 2, 5]).unwrap();
        let mp = minimal_polynomial(&d);
        // (x - 2)(x - 5) = x² - 7x + 10 = x² + 6x + 10 mod 13
        assert_eq!(mp, GfPoly::new(g, vec![10, 6, 1]));
        // And it annihilates the matrix.
        let z = mp.eval_matrix(&d);
        assert_eq!(z, FMatrix::zeros(g, 3, 3));
    }
}
