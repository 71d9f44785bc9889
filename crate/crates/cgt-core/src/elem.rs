//! A minimal group-element abstraction shared by matrices and permutations.
//!
//! Several operations (word evaluation, relator verification) are generic
//! over the kind of concrete element a generator maps to. The trait is
//! deliberately tiny: identity, composition, and inversion.

/// A group element with explicit composition and inversion.
///
/// `identity_like` produces the identity of the ambient group *of the same
/// shape* as `self` (same degree for permutations, same dimension and field
/// for matrices); this keeps the trait usable for families of groups indexed
/// by a runtime parameter.
pub trait GroupElement: Clone + Eq {
    /// The identity element of the same shape as `self`.
    fn identity_like(&self) -> Self;
    /// Group composition `self · other`.
    fn compose(&self, other: &Self) -> Self;
    /// The group inverse.
    fn inverse(&self) -> Self;

    /// `self` raised to a signed integer power by repeated squaring.
    fn power(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.identity_like();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.compose(&sq);
            }
        }
        acc
    }

    /// The multiplicative order of `self`, if it is at most `cap`.
    fn order_with_cap(&self, cap: u64) -> Option<u64> {
        let id = self.identity_like();
        let mut x = self.clone();
        let mut n = 1u64;
        while x != id {
            if n >= cap {
                return None;
            }
            x = x.compose(self);
            n += 1;
        }
        Some(n)
    }
}
