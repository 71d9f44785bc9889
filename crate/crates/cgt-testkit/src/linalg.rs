//! Minimal mod-p linear algebra, local to the oracle crate.
//!
//! The module and double-coset oracles must not lean on the library's own
//! matrix code, so the few primitives they need — modular inverse, an
//! incremental row span, a square-matrix invertibility test — are
//! reimplemented here in the plainest possible way.

/// x^(p−2) mod p, the inverse of a nonzero residue modulo a prime.
pub fn inv_mod(x: u64, p: u64) -> u64 {
    assert!(x % p != 0, "zero has no inverse");
    let mut result: u64 = 1;
    let mut base = x % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    result
}

/// (a·b) mod p without overflow.
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// A growable row-echelon span over GF(p).
pub struct Span {
    p: u64,
    width: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(p: u64, width: usize) -> Self {
        Span { p, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span and inserts the remainder if nonzero.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.width);
        let p = self.p;
        let mut w: Vec<u64> = v.iter().map(|&x| x % p).collect();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w[piv];
            if c != 0 {
                for (x, &r) in w.iter_mut().zip(row.iter()) {
                    *x = (*x + p - mulmod(c, r, p)) % p;
                }
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => false,
            Some(piv) => {
                let inv = inv_mod(w[piv], p);
                for x in w.iter_mut() {
                    *x = mulmod(*x, inv, p);
                }
                self.rows.push(w);
                self.pivots.push(piv);
                true
            }
        }
    }
}

/// Whether a flat n×n matrix over GF(p) is invertible.
pub fn is_invertible(p: u64, n: usize, flat: &[u64]) -> bool {
    assert_eq!(flat.len(), n * n);
    let mut span = Span::new(p, n);
    for row in flat.chunks(n) {
        if !span.insert(row) {
            return false;
        }
    }
    true
}
