//! The prime field GF(p) for a machine-word prime p.

use super::GfError;

/// A prime field GF(p), p a machine-word prime.
///
/// Primality is checked at construction with a deterministic Miller–Rabin
/// test (exact for all 64-bit inputs), so a `PrimeField` value is always a
/// genuine field. Elements are least nonnegative residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Constructs GF(p), verifying that `p` is prime.
    pub fn new(p: u64) -> Result<Self, GfError> {
        if is_prime_u64(p) {
            Ok(PrimeField { p })
        } else {
            Err(GfError::NotPrime(p))
        }
    }

    /// The field characteristic (and size) p.
    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer to its least nonnegative residue.
    #[inline]
    pub fn reduce_i128(&self, x: i128) -> u64 {
        let p = self.p as i128;
        (((x % p) + p) % p) as u64
    }

    /// Reduces an arbitrary unsigned integer to its least nonnegative residue.
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    /// `a + b mod p` for residues `a, b < p`.
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    /// `a - b mod p` for residues `a, b < p`.
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    /// `-a mod p` for a residue `a < p`.
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// `a · b mod p` for residues `a, b < p`.
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// `a^e mod p` by square-and-multiply.
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1u64 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The multiplicative inverse of a nonzero residue, or `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            // Fermat: a^(p-2) — fine for word-size p.
            Some(self.pow(a, self.p - 2))
        }
    }
}

/// Deterministic Miller–Rabin primality test, exact for all `u64` inputs.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    // n - 1 = d · 2^s with d odd
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        a %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        acc
    };
    // This witness set is exact for every n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
