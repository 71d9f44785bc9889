//! Exact cyclotomic numbers: elements of Q(ζₙ) with rational coefficients.
//!
//! A value is stored as a polynomial in a primitive `n`-th root of unity,
//! reduced modulo the `n`-th cyclotomic polynomial Φₙ, so every element has
//! a unique coefficient vector of length φ(n).  Arithmetic between
//! different conductors embeds both operands into Q(ζ_lcm).  Values that
//! reduce to rationals are demoted to conductor 1 eagerly, which keeps
//! conductors honest for the modular embedding used by idempotent
//! projection.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gf::PrimeField;

/// Errors from cyclotomic arithmetic and its modular embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    /// Φₙ has no root mod p (the conductor does not divide p − 1).
    NoRoot {
        /// Conductor of the value being embedded.
        conductor: u64,
        /// Field characteristic.
        p: u64,
    },
    /// A coefficient denominator is divisible by p, so the value has no
    /// reduction mod p.
    BadDenominator {
        /// Field characteristic.
        p: u64,
    },
    /// The value is not rational but a rational was required.
    NotRational,
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::NoRoot { conductor, p } => {
                write!(f, "no primitive {conductor}-th root of unity in GF({p})")
            }
            CycloError::BadDenominator { p } => {
                write!(f, "coefficient denominator divisible by {p}")
            }
            CycloError::NotRational => write!(f, "cyclotomic value is not rational"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CycloError {}

/// Euler's totient by trial factorization.
fn phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Exact division of integer polynomials (ascending coefficients); the
/// divisor must be monic-up-to-sign with an invertible leading coefficient
/// (±1) and must divide exactly.
fn intpoly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    debug_assert!(lead.clone().abs().is_one());
    let mut rem: Vec<BigInt> = num.to_vec();
    let qd = num.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = &rem[k + dd] / &lead;
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            let t = d * &c;
            rem[k + i] -= t;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Coefficients of the `n`-th cyclotomic polynomial Φₙ, ascending, monic,
/// of degree φ(n).
///
/// Computed as (xⁿ − 1) / Π_{d | n, d < n} Φ_d by exact integer division.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "conductor must be positive");
    if n == 1 {
        return vec![-BigInt::one(), BigInt::one()];
    }
    // xⁿ − 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut quot = num;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            quot = intpoly_div_exact(&quot, &phi_d);
        }
    }
    quot
}

/// Reduces a rational polynomial modulo the integer polynomial `m` (monic),
/// returning exactly `m.len() − 1` coefficients.
fn ratpoly_rem(mut poly: Vec<BigRational>, m: &[BigInt]) -> Vec<BigRational> {
    let deg = m.len() - 1;
    while poly.len() > deg {
        let k = poly.len() - 1;
        let c = poly[k].clone();
        if !c.is_zero() {
            for (i, mi) in m.iter().enumerate() {
                let t = BigRational::from(mi.clone()) * &c;
                poly[k - deg + i] -= t;
            }
        }
        poly.pop();
    }
    poly.resize(deg, BigRational::zero());
    poly
}

/// An element of the cyclotomic field Q(ζₙ), reduced mod Φₙ.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    /// Conductor: ζ is a primitive `n`-th root of unity.  Rational values
    /// always carry conductor 1.
    n: u64,
    /// Coefficients of 1, ζ, …, ζ^{φ(n)−1}.
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    fn make(n: u64, coeffs: Vec<BigRational>) -> Self {
        let mut c = Cyclotomic { n, coeffs };
        c.demote();
        c
    }

    /// Demote to conductor 1 when all non-constant coefficients vanish.
    fn demote(&mut self) {
        if self.n > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.coeffs.truncate(1);
            self.n = 1;
        }
    }

    /// The zero value.
    pub fn zero() -> Self {
        Cyclotomic { n: 1, coeffs: vec![BigRational::zero()] }
    }

    /// The unit value.
    pub fn one() -> Self {
        Cyclotomic { n: 1, coeffs: vec![BigRational::one()] }
    }

    /// A rational value.
    pub fn rational(r: BigRational) -> Self {
        Cyclotomic { n: 1, coeffs: vec![r] }
    }

    /// An integer value.
    pub fn integer(i: i64) -> Self {
        Cyclotomic::rational(BigRational::from_integer(BigInt::from(i)))
    }

    /// ζₙᵏ for a primitive `n`-th root of unity ζₙ.
    pub fn root_of_unity(n: u64, k: u64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let deg = phi(n) as usize;
        let k = (k % n) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        let m = cyclotomic_polynomial(n);
        let _ = deg;
        Cyclotomic::make(n, ratpoly_rem(poly, &m))
    }

    /// Conductor of the stored representation (1 for rationals).
    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Coefficients of 1, ζ, …, ζ^{φ(n)−1} at the stored conductor.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Whether the value is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The value as a rational if it is one.
    pub fn try_rational(&self) -> Option<BigRational> {
        if self.n == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as a rational, or [`CycloError::NotRational`].
    pub fn expect_rational(&self) -> Result<BigRational, CycloError> {
        self.try_rational().ok_or(CycloError::NotRational)
    }

    /// Rewrites the value as a polynomial in ζₘ where `n | m`, without
    /// changing it.
    pub fn embed(&self, m: u64) -> Cyclotomic {
        let mut c = Cyclotomic { n: m, coeffs: self.embed_coeffs(m) };
        c.demote();
        c
    }

    /// The full length-φ(m) coefficient vector of the value viewed in
    /// Q(ζₘ), with no demotion — safe to combine entrywise.
    pub(crate) fn embed_coeffs(&self, m: u64) -> Vec<BigRational> {
        assert!(m % self.n == 0, "embedding requires conductor {} | {}", self.n, m);
        if m == self.n {
            let mut c = self.coeffs.clone();
            c.resize(phi(m) as usize, BigRational::zero());
            return c;
        }
        self.map_root_coeffs(m, m / self.n)
    }

    /// Σ cᵢ ζₘ^{i·k}: the image under ζ ↦ ζₘᵏ.  Used for embeddings
    /// (k = m/n) and Galois conjugation (m = n, gcd(k, n) = 1).
    fn map_root(&self, m: u64, k: u64) -> Cyclotomic {
        Cyclotomic::make(m, self.map_root_coeffs(m, k))
    }

    fn map_root_coeffs(&self, m: u64, k: u64) -> Vec<BigRational> {
        let modulus = cyclotomic_polynomial(m);
        let deg = modulus.len() - 1;
        let mut out = vec![BigRational::zero(); deg];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as u64) * k) % m;
            let mut mono = vec![BigRational::zero(); e as usize + 1];
            mono[e as usize] = c.clone();
            let red = ratpoly_rem(mono, &modulus);
            for (o, r) in out.iter_mut().zip(red) {
                *o += r;
            }
        }
        out
    }

    /// Complex conjugate: ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Cyclotomic {
        if self.n == 1 {
            return self.clone();
        }
        self.map_root(self.n, self.n - 1)
    }

    /// Sum of the two values.
    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let m = self.n.lcm(&other.n);
        let a = self.embed_coeffs(m);
        let b = other.embed_coeffs(m);
        let coeffs = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
        Cyclotomic::make(m, coeffs)
    }

    /// Difference of the two values.
    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic::make(self.n, self.coeffs.iter().map(|c| -c).collect())
    }

    /// Product of the two values.
    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let m = self.n.lcm(&other.n);
        let a = self.embed_coeffs(m);
        let b = other.embed_coeffs(m);
        let mut prod = vec![BigRational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                prod[i + j] += t;
            }
        }
        let modulus = cyclotomic_polynomial(m);
        Cyclotomic::make(m, ratpoly_rem(prod, &modulus))
    }

    /// Product with a rational scalar.
    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        Cyclotomic::make(self.n, self.coeffs.iter().map(|c| c * r).collect())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let m = self.n.lcm(&other.n);
        self.embed_coeffs(m) == other.embed_coeffs(m)
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z({})", self.n)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A cyclotomic value reduced into GF(p), together with the embedding that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModEmbedding {
    /// The reduced value.
    pub value: u64,
    /// Conductor of the embedded value.
    pub conductor: u64,
    /// The root of Φₙ mod p chosen as the image of ζₙ (1 when n = 1).
    pub root: u64,
}

impl Cyclotomic {
    /// The smallest root of Φₙ in GF(p), if any.  This is the declared
    /// image of ζₙ for modular reductions; it exists exactly when
    /// n | p − 1 (p prime, p ∤ n), plus the degenerate n = 1 case.
    pub fn embedding_root(n: u64, field: PrimeField) -> Result<u64, CycloError> {
        let p = field.p();
        if n == 1 {
            return Ok(1);
        }
        let modulus = cyclotomic_polynomial(n);
        let coeffs: Vec<u64> = modulus
            .iter()
            .map(|c| {
                let r = c.mod_floor(&BigInt::from(p));
                u64::try_from(r).expect("mod_floor is nonnegative")
            })
            .collect();
        for r in 1..p {
            // Horner evaluation of Φₙ at r.
            let mut acc = 0u64;
            for c in coeffs.iter().rev() {
                acc = field.add(field.mul(acc, r), *c);
            }
            if acc == 0 {
                return Ok(r);
            }
        }
        Err(CycloError::NoRoot { conductor: n, p })
    }

    /// Reduces the value into GF(p) by sending ζₙ to the smallest root of
    /// Φₙ mod p, recording the choice.
    pub fn embed_mod_p(&self, field: PrimeField) -> Result<ModEmbedding, CycloError> {
        let p = field.p();
        let root = Cyclotomic::embedding_root(self.n, field)?;
        let mut value = 0u64;
        let mut power = 1u64; // root^i
        for c in &self.coeffs {
            if !c.is_zero() {
                let num = c.numer().mod_floor(&BigInt::from(p));
                let den = c.denom().mod_floor(&BigInt::from(p));
                let num = u64::try_from(num).expect("mod_floor is nonnegative");
                let den = u64::try_from(den).expect("mod_floor is nonnegative");
                let den_inv =
                    field.inv(den).ok_or(CycloError::BadDenominator { p })?;
                let coeff = field.mul(num, den_inv);
                value = field.add(value, field.mul(coeff, power));
            }
            power = field.mul(power, root);
        }
        Ok(ModEmbedding { value, conductor: self.n, root })
    }
}

/// Renders a vector of cyclotomic values, for diagnostics.
pub fn render_values(values: &[Cyclotomic]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            let _ = write!(s, ", ");
        }
        let _ = write!(s, "{v}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn int(i: i64) -> BigInt {
        BigInt::from(i)
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), vec![int(-1), int(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![int(1), int(1)]);
        assert_eq!(cyclotomic_polynomial(3), vec![int(1), int(1), int(1)]);
        assert_eq!(cyclotomic_polynomial(4), vec![int(1), int(0), int(1)]);
        assert_eq!(cyclotomic_polynomial(6), vec![int(1), int(-1), int(1)]);
        assert_eq!(cyclotomic_polynomial(8), vec![int(1), int(0), int(0), int(0), int(1)]);
        assert_eq!(
            cyclotomic_polynomial(12),
            vec![int(1), int(0), int(-1), int(0), int(1)]
        );
        // Φ₁₀₅ is the first with a coefficient outside {−1, 0, 1}.
        let c105 = cyclotomic_polynomial(105);
        assert_eq!(c105.len(), 49);
        assert_eq!(c105[7], int(-2));
        assert_eq!(c105[41], int(-2));
    }

    #[test]
    fn root_of_unity_relations() {
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let z3sq = Cyclotomic::root_of_unity(3, 2);
        // 1 + ζ₃ + ζ₃² = 0
        let sum = Cyclotomic::one().add(&z3).add(&z3sq);
        assert!(sum.is_zero());
        // ζ₃ + ζ₃² = −1, demoted to a rational.
        let s = z3.add(&z3sq);
        assert_eq!(s, Cyclotomic::integer(-1));
        assert_eq!(s.conductor(), 1);
        // ζ₄² = −1
        let z4 = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(z4.mul(&z4), Cyclotomic::integer(-1));
        // ζ₅⁵ = 1 via repeated multiplication.
        let z5 = Cyclotomic::root_of_unity(5, 1);
        let mut acc = Cyclotomic::one();
        for _ in 0..5 {
            acc = acc.mul(&z5);
        }
        assert_eq!(acc, Cyclotomic::one());
        // ζ₆ = −ζ₃² across conductors.
        let z6 = Cyclotomic::root_of_unity(6, 1);
        assert_eq!(z6, z3sq.neg());
    }

    #[test]
    fn conjugation_and_golden_ratio() {
        let z5 = Cyclotomic::root_of_unity(5, 1);
        assert_eq!(z5.conj().mul(&z5), Cyclotomic::one());
        // α = ζ₅ + ζ₅⁻¹ satisfies α² + α − 1 = 0.
        let alpha = z5.add(&z5.conj());
        let val = alpha.mul(&alpha).add(&alpha).sub(&Cyclotomic::one());
        assert!(val.is_zero(), "got {val}");
        assert_eq!(alpha.conductor(), 5);
        assert!(alpha.try_rational().is_none());
    }

    #[test]
    fn modular_embedding_gf13() {
        let f = PrimeField::new(13).unwrap();
        // Roots of Φ₃ = x² + x + 1 mod 13 are 3 and 9; the smaller wins.
        assert_eq!(Cyclotomic::embedding_root(3, f), Ok(3));
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let e = z3.embed_mod_p(f).unwrap();
        assert_eq!(e, ModEmbedding { value: 3, conductor: 3, root: 3 });
        // ζ₃ + ζ₃² ↦ 3 + 9 = 12 ≡ −1, and the value demotes to rational
        // −1 whose reduction agrees.
        let s = z3.add(&z3.mul(&z3));
        assert_eq!(s.embed_mod_p(f).unwrap().value, 12);
        // Conductor 5 does not divide 13 − 1 = 12.
        let z5 = Cyclotomic::root_of_unity(5, 1);
        assert_eq!(
            z5.embed_mod_p(f),
            Err(CycloError::NoRoot { conductor: 5, p: 13 })
        );
        // Denominator divisible by p is refused.
        let bad = Cyclotomic::rational(BigRational::new(int(1), int(13)));
        assert_eq!(bad.embed_mod_p(f), Err(CycloError::BadDenominator { p: 13 }));
    }

    #[test]
    fn display_forms() {
        let z4 = Cyclotomic::root_of_unity(4, 1);
        let v = Cyclotomic::integer(2).add(&z4.scale(&BigRational::from_integer(int(-3))));
        assert_eq!(v.to_string(), "2 - 3*z(4)");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::integer(-1).to_string(), "-1");
    }
}
