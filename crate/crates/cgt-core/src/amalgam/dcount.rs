//! Double-coset counting for subgroups of block-diagonal matrix groups.
//!
//! [`double_coset_count`] computes `|H\D/E|` for a block group `D` and two
//! subgroups `H`, `E` given by generators, by either of two methods:
//!
//! * **Burnside** — the class-sum form of Burnside's lemma for the action
//!   `d ↦ h·d·e` of `H × E` on `D`:
//!   `|H\D/E| = (1/|H||E|) · Σ_{h∈H, e∈E} [h ∼_D e⁻¹] · |C_D(h)|`,
//!   where `∼_D` is blockwise `GL`-conjugacy.  Elements are bucketed by a
//!   complete blockwise similarity invariant so the sum runs over class
//!   pairs, not element pairs, and centralizer orders are computed lazily
//!   and memoized—only for classes of `H` that actually meet a class of
//!   inverses from `E`.
//! * **NormalForm** — the first-column normal-form argument used for
//!   products of `GL₂(p)` and scalar factors: each `GL₂` block is counted
//!   up to an independent scaling of its first column
//!   (`|GL₂(p)|/(p−1) = p(p²−1)` classes), and the scalar slots contribute
//!   `(p−1)^k / |S|` where `S` is the image of `H × E` acting on the slots.
//!   The hypotheses that make this count valid are checked explicitly and
//!   violations are reported as [`AmalgamError::NormalFormShape`].

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::blocks::{gl_order, is_diagonal, BlockGroupSpec, DiagSubgroup};
use super::AmalgamError;
use crate::gf::{mat_inverse, mat_mul, minimal_polynomial, FMatrix, PrimeField};

/// Element budget for enumerating the subgroups `H` and `E`.
pub const SUBGROUP_BUDGET: usize = 1_000_000;

/// Largest `|GL_n(p)|` for which a block centralizer is found by direct
/// enumeration of the block group.
pub const BLOCK_ENUM_BUDGET: u64 = 10_000_000;

/// Which counting method [`double_coset_count`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// Class-sum form of Burnside's lemma.
    Burnside,
    /// First-column normal form for products of `GL₂` and scalar blocks.
    NormalForm,
}

/// Counts the `(H, E)`-double cosets of the block group described by
/// `spec`.  Both subgroups must have been built on the same spec.
pub fn double_coset_count(
    spec: &BlockGroupSpec,
    h: &DiagSubgroup,
    e: &DiagSubgroup,
    method: CountMethod,
) -> Result<BigUint, AmalgamError> {
    if h.spec() != spec || e.spec() != spec {
        return Err(AmalgamError::SpecMismatch);
    }
    match method {
        CountMethod::Burnside => burnside_count(spec, h, e),
        CountMethod::NormalForm => normal_form_count(spec, h, e),
    }
}

/// Complete similarity invariant of one block: for every irreducible
/// factor `f` of the minimal polynomial, the pair of `f`'s coefficients
/// and the kernel-dimension sequence `dim ker f(M)^j` for `j = 1..e`
/// (`e` the multiplicity of `f` in the minimal polynomial), sorted.  The
/// sequence determines the multiset of elementary divisors of the
/// `f`-primary part, so two blocks are `GL`-conjugate iff keys agree.
type BlockKey = Vec<(Vec<u64>, Vec<usize>)>;

/// Blockwise similarity key: one [`BlockKey`] per block, in block order.
type ElemKey = Vec<BlockKey>;

fn block_class_key(m: &FMatrix) -> Result<BlockKey, AmalgamError> {
    let p = m.field().p();
    let n = m.rows();
    if is_diagonal(m) {
        return Ok(diag_block_key(p, (0..n).map(|i| m.get(i, i))));
    }
    let minpoly = minimal_polynomial(m);
    let mut key: BlockKey = Vec::new();
    for (fac, e) in minpoly.factor() {
        let fm = fac.eval_matrix(m);
        let mut dims = Vec::with_capacity(e);
        let mut pw = fm.clone();
        for j in 1..=e {
            if j > 1 {
                pw = mat_mul(&pw, &fm)?;
            }
            dims.push(n - pw.rank());
        }
        key.push((fac.coeffs().to_vec(), dims));
    }
    key.sort();
    Ok(key)
}

/// Key of a diagonal block given its diagonal entries: one linear factor
/// `x − λ` (coefficients `[p−λ, 1]`) per distinct eigenvalue, with the
/// eigenvalue multiplicity as the single kernel dimension.  Matches what
/// [`block_class_key`] computes on any conjugate of the block.
fn diag_block_key(p: u64, diag: impl Iterator<Item = u64>) -> BlockKey {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for lam in diag {
        *counts.entry(lam).or_insert(0) += 1;
    }
    let mut key: BlockKey = counts
        .into_iter()
        .map(|(lam, mult)| (vec![(p - lam) % p, 1], vec![mult]))
        .collect();
    key.sort();
    key
}

fn element_key(blocks: &[FMatrix]) -> Result<ElemKey, AmalgamError> {
    blocks.iter().map(block_class_key).collect()
}

fn diag_element_key(p: u64, sizes: &[usize], diag: &[u64]) -> ElemKey {
    let mut key = Vec::with_capacity(sizes.len());
    let mut off = 0;
    for &n in sizes {
        key.push(diag_block_key(p, diag[off..off + n].iter().copied()));
        off += n;
    }
    key
}

/// Breadth-first closure of `gens` under componentwise multiplication
/// mod p, identity (all ones) first.  Errors past `budget` elements.
pub(crate) fn closure_mul(
    field: PrimeField,
    len: usize,
    gens: &[Vec<u64>],
    budget: usize,
) -> Result<Vec<Vec<u64>>, AmalgamError> {
    let id = vec![1u64; len];
    let mut seen = BTreeSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        for g in gens {
            let next: Vec<u64> =
                out[head].iter().zip(g).map(|(&a, &b)| field.mul(a, b)).collect();
            if seen.insert(next.clone()) {
                if out.len() == budget {
                    return Err(AmalgamError::EnumerationBudget { budget });
                }
                out.push(next);
            }
        }
        head += 1;
    }
    Ok(out)
}

/// Flat diagonal of a blockwise element whose blocks are all diagonal.
fn flat_diag(blocks: &[FMatrix]) -> Vec<u64> {
    let mut d = Vec::new();
    for m in blocks {
        for i in 0..m.rows() {
            d.push(m.get(i, i));
        }
    }
    d
}

/// Enumerates an all-diagonal subgroup in compact form: each element is
/// its flat diagonal, length `spec.dimension()`.
pub(crate) fn enumerate_diag(
    sub: &DiagSubgroup,
    budget: usize,
) -> Result<Vec<Vec<u64>>, AmalgamError> {
    let gens: Vec<Vec<u64>> = sub.generators().iter().map(|b| flat_diag(b)).collect();
    closure_mul(sub.spec().field(), sub.spec().dimension(), &gens, budget)
}

/// One side of the Burnside sum: subgroup order and class buckets.  Keys
/// are element keys (of inverses when `invert` is set, which realizes the
/// `[h ∼_D e⁻¹]` pairing on the `E` side); values are the element count
/// and, for non-diagonal subgroups, one representative for centralizer
/// enumeration.  Diagonal subgroups are enumerated compactly and need no
/// representative: their keys are always diagonalizable.
#[allow(clippy::type_complexity)]
fn side_buckets(
    spec: &BlockGroupSpec,
    sub: &DiagSubgroup,
    invert: bool,
) -> Result<(usize, BTreeMap<ElemKey, (u64, Option<Vec<FMatrix>>)>), AmalgamError> {
    let mut buckets: BTreeMap<ElemKey, (u64, Option<Vec<FMatrix>>)> = BTreeMap::new();
    let order;
    if sub.is_diagonal() {
        let elems = enumerate_diag(sub, SUBGROUP_BUDGET)?;
        order = elems.len();
        let f = spec.field();
        for d in &elems {
            let v: Vec<u64> = if invert {
                d.iter()
                    .map(|&x| f.inv(x).expect("diagonal entries of a unit are nonzero"))
                    .collect()
            } else {
                d.clone()
            };
            let key = diag_element_key(f.p(), spec.block_sizes(), &v);
            match buckets.entry(key) {
                Entry::Vacant(slot) => {
                    slot.insert((1, None));
                }
                Entry::Occupied(mut slot) => slot.get_mut().0 += 1,
            }
        }
    } else {
        let elems = sub.enumerate(SUBGROUP_BUDGET)?;
        order = elems.len();
        for el in &elems {
            let blocks: Vec<FMatrix> = if invert {
                el.iter().map(mat_inverse).collect::<Result<_, _>>()?
            } else {
                el.clone()
            };
            let key = element_key(&blocks)?;
            match buckets.entry(key) {
                Entry::Vacant(slot) => {
                    slot.insert((1, Some(blocks)));
                }
                Entry::Occupied(mut slot) => slot.get_mut().0 += 1,
            }
        }
    }
    Ok((order, buckets))
}

/// Centralizer order of one block in its `GL_n(p)`, from the block's
/// similarity key.  Diagonalizable keys (squarefree minimal polynomial
/// splitting into linear factors) use the closed form
/// `∏_λ |GL_{m_λ}(p)|`; other keys fall back to enumerating the block
/// group when `|GL_n(p)| ≤` [`BLOCK_ENUM_BUDGET`], and error out
/// otherwise.  Results are memoized per key.
fn block_centralizer_order(
    p: u64,
    key: &BlockKey,
    rep: Option<&FMatrix>,
    memo: &mut BTreeMap<BlockKey, BigUint>,
) -> Result<BigUint, AmalgamError> {
    if let Some(c) = memo.get(key) {
        return Ok(c.clone());
    }
    let diagonalizable = key.iter().all(|(f, dims)| f.len() == 2 && dims.len() == 1);
    let order = if diagonalizable {
        let mut o = BigUint::from(1u32);
        for (_, dims) in key {
            o *= gl_order(p, dims[0]);
        }
        o
    } else {
        let n: usize = key.iter().map(|(_, dims)| *dims.last().expect("nonempty dims")).sum();
        if gl_order(p, n) > BigUint::from(BLOCK_ENUM_BUDGET) {
            return Err(AmalgamError::CentralizerBudget { size: n, p });
        }
        let m = rep.expect("non-diagonalizable keys arise only with dense representatives");
        enumerate_centralizer(m)?
    };
    memo.insert(key.clone(), order.clone());
    Ok(order)
}

/// Counts invertible matrices commuting with `m` by running an odometer
/// over all `p^(n²)` candidates; the cheap commutation check is the hot
/// path, the rank test runs only on commuting candidates.
fn enumerate_centralizer(m: &FMatrix) -> Result<BigUint, AmalgamError> {
    let f = m.field();
    let p = f.p();
    let n = m.rows();
    let a = m.entries();
    let commutes = |x: &[u64]| {
        for i in 0..n {
            for j in 0..n {
                let mut ax = 0;
                let mut xa = 0;
                for k in 0..n {
                    ax = f.add(ax, f.mul(a[i * n + k], x[k * n + j]));
                    xa = f.add(xa, f.mul(x[i * n + k], a[k * n + j]));
                }
                if ax != xa {
                    return false;
                }
            }
        }
        true
    };
    let mut x = vec![0u64; n * n];
    let mut count: u64 = 0;
    loop {
        if commutes(&x) {
            let xm = FMatrix::new(f, n, n, x.clone())?;
            if xm.rank() == n {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n * n {
                return Ok(BigUint::from(count));
            }
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

fn burnside_count(
    spec: &BlockGroupSpec,
    h: &DiagSubgroup,
    e: &DiagSubgroup,
) -> Result<BigUint, AmalgamError> {
    let (h_order, h_buckets) = side_buckets(spec, h, false)?;
    let (e_order, e_buckets) = side_buckets(spec, e, true)?;
    let p = spec.field().p();
    let mut memo: BTreeMap<BlockKey, BigUint> = BTreeMap::new();
    let mut total = BigUint::ZERO;
    for (key, (nh, rep)) in &h_buckets {
        if let Some((ne, _)) = e_buckets.get(key) {
            let mut cent = BigUint::from(1u32);
            for (b, bk) in key.iter().enumerate() {
                let block_rep = rep.as_ref().map(|blocks| &blocks[b]);
                cent *= block_centralizer_order(p, bk, block_rep, &mut memo)?;
            }
            total += BigUint::from(*nh) * BigUint::from(*ne) * cent;
        }
    }
    let divisor = BigUint::from(h_order) * BigUint::from(e_order);
    assert!(
        (&total % &divisor) == BigUint::ZERO,
        "Burnside sum must be divisible by |H||E|"
    );
    Ok(total / divisor)
}

/// The first-column normal-form count.  Writing `B` for the number of
/// size-2 blocks, `k` for the number of scalar slots, and `S ≤ (F*)^k`
/// for the image of `H × E` acting on the slots, the count is
/// `(p(p²−1))^B · (p−1)^k / |S|`.  Valid when (i) both subgroups are
/// diagonal, (ii) every block has size 1 or 2, (iii) `E` contains every
/// `diag(α, 1)` on each size-2 block with all other entries 1, so first
/// columns are normalized independently per block, and (iv) every element
/// of `H × E` fixing all scalar slots acts on each size-2 block as a pure
/// first-column scaling — equivalently `h` is scalar on the block and
/// that scalar times `e`'s second entry is 1.  Condition (iv) is checked
/// on the closure `Γ` of the generator images under `(φ, ψ)`, where `φ`
/// records the slot action and `ψ` per block records
/// `(h₁h₂⁻¹, h₁e₂)`; it also makes the projection `Γ → S` injective, so
/// `|S| = |Γ|`.
fn normal_form_count(
    spec: &BlockGroupSpec,
    h: &DiagSubgroup,
    e: &DiagSubgroup,
) -> Result<BigUint, AmalgamError> {
    let f = spec.field();
    let p = f.p();
    if spec.block_sizes().iter().any(|&n| n > 2) {
        return Err(AmalgamError::NormalFormShape(format!(
            "every block must have size 1 or 2, got a block of size {}",
            spec.block_sizes().iter().max().unwrap()
        )));
    }
    if !h.is_diagonal() || !e.is_diagonal() {
        return Err(AmalgamError::NormalFormShape(
            "both subgroups must be generated by diagonal matrices".into(),
        ));
    }
    let mut big: Vec<(usize, usize)> = Vec::new();
    let mut slots: Vec<usize> = Vec::new();
    let mut off = 0;
    for (b, &n) in spec.block_sizes().iter().enumerate() {
        if n == 2 {
            big.push((b, off));
        } else {
            slots.push(off);
        }
        off += n;
    }
    let k = slots.len();

    // (iii): private first-column scalers of E cover F* on every block.
    let e_elems = enumerate_diag(e, SUBGROUP_BUDGET)?;
    for &(b, o) in &big {
        let mut alphas = BTreeSet::new();
        'element: for v in &e_elems {
            for (i, &x) in v.iter().enumerate() {
                if i != o && x != 1 {
                    continue 'element;
                }
            }
            alphas.insert(v[o]);
        }
        if alphas.len() as u64 != p - 1 {
            return Err(AmalgamError::NormalFormShape(format!(
                "E must privately realize every first-column scaling diag(α, 1) \
                 on block {b}, found {} of {}",
                alphas.len(),
                p - 1
            )));
        }
    }

    // (iv) via the closure Γ of generator (φ, ψ)-images.
    let gamma_vector = |diag: &[u64], from_h: bool| -> Vec<u64> {
        let mut v = Vec::with_capacity(k + 2 * big.len());
        for &o in &slots {
            v.push(diag[o]);
        }
        for &(_, o) in &big {
            if from_h {
                let c = diag[o];
                let d = diag[o + 1];
                v.push(f.mul(c, f.inv(d).expect("unit diagonal")));
                v.push(c);
            } else {
                v.push(1);
                v.push(diag[o + 1]);
            }
        }
        v
    };
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for hg in h.generators() {
        gens.push(gamma_vector(&flat_diag(hg), true));
    }
    for eg in e.generators() {
        gens.push(gamma_vector(&flat_diag(eg), false));
    }
    let gamma = closure_mul(f, k + 2 * big.len(), &gens, SUBGROUP_BUDGET)?;
    for v in &gamma {
        let phi_trivial = v[..k].iter().all(|&x| x == 1);
        if phi_trivial && v[k..].iter().any(|&x| x != 1) {
            return Err(AmalgamError::NormalFormShape(
                "elements of H×E fixing all scalar slots must act on each size-2 \
                 block by pure first-column scalings"
                    .into(),
            ));
        }
    }

    let pb = BigUint::from(p);
    let per_block = &pb * (&pb * &pb - 1u32);
    let num = per_block.pow(big.len() as u32) * BigUint::from(p - 1).pow(k as u32);
    let s = BigUint::from(gamma.len());
    // S is a subgroup of (F*)^k, so |S| divides (p−1)^k by Lagrange.
    assert!((&num % &s) == BigUint::ZERO, "|S| must divide (p−1)^k");
    Ok(num / s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(
        spec: &BlockGroupSpec,
        h: &DiagSubgroup,
        e: &DiagSubgroup,
        method: CountMethod,
    ) -> Result<BigUint, AmalgamError> {
        double_coset_count(spec, h, e, method)
    }

    #[test]
    fn trivial_subgroups_of_a_scalar_factor_give_all_elements() {
        // D = F*₁₃ with H = E = 1: every element is its own double coset.
        let spec = BlockGroupSpec::new(13, &[1]).unwrap();
        let h = DiagSubgroup::trivial(spec.clone());
        let e = DiagSubgroup::trivial(spec.clone());
        for m in [CountMethod::Burnside, CountMethod::NormalForm] {
            assert_eq!(count(&spec, &h, &e, m).unwrap(), BigUint::from(12u32));
        }
    }

    #[test]
    fn spec_mismatch_is_rejected() {
        let spec = BlockGroupSpec::new(13, &[1]).unwrap();
        let other = BlockGroupSpec::new(13, &[1, 1]).unwrap();
        let h = DiagSubgroup::trivial(other.clone());
        let e = DiagSubgroup::trivial(spec.clone());
        assert_eq!(
            count(&spec, &h, &e, CountMethod::Burnside),
            Err(AmalgamError::SpecMismatch)
        );
    }

    /// GL₂(p) × (F*)² analogue of the Fischer-group torus counts, small
    /// enough to run both methods: H = ⟨diag(g,1,g,1), diag(1,g,1,g)⟩ and
    /// E = ⟨diag(g,1,1,1), diag(1,g,g,g)⟩ for a primitive root g.
    fn gl2_analogue(p: u64, g: u64) -> (BlockGroupSpec, DiagSubgroup, DiagSubgroup) {
        let spec = BlockGroupSpec::new(p, &[2, 1, 1]).unwrap();
        let h = DiagSubgroup::from_diagonals(
            spec.clone(),
            &[vec![g, 1, g, 1], vec![1, g, 1, g]],
        )
        .unwrap();
        let e = DiagSubgroup::from_diagonals(
            spec.clone(),
            &[vec![g, 1, 1, 1], vec![1, g, g, g]],
        )
        .unwrap();
        (spec, h, e)
    }

    #[test]
    fn burnside_and_normal_form_agree_on_small_analogues() {
        // p = 5: count = 5·24 · 4² / |S| with S = (F*)² → 120.
        let (spec, h, e) = gl2_analogue(5, 2);
        let b = count(&spec, &h, &e, CountMethod::Burnside).unwrap();
        let n = count(&spec, &h, &e, CountMethod::NormalForm).unwrap();
        assert_eq!(b, BigUint::from(120u32));
        assert_eq!(b, n);
        // p = 7: 7·48 · 6² / 36 = 336.
        let (spec, h, e) = gl2_analogue(7, 3);
        let b = count(&spec, &h, &e, CountMethod::Burnside).unwrap();
        let n = count(&spec, &h, &e, CountMethod::NormalForm).unwrap();
        assert_eq!(b, BigUint::from(336u32));
        assert_eq!(b, n);
    }

    /// The subgroups of GL₂(13) × GL₂(13) × (F*)⁵ ≤ GL₉(13) from
    /// Proposition 4.1 of Kim & Michler, "Construction of Fischer's
    /// sporadic group Fi′₂₄ inside GL₈₆₇₁(13)".
    fn prop_4_1() -> (BlockGroupSpec, DiagSubgroup, DiagSubgroup) {
        let spec = BlockGroupSpec::new(13, &[2, 2, 1, 1, 1, 1, 1]).unwrap();
        let h = DiagSubgroup::from_diagonals(
            spec.clone(),
            &[
                vec![2, 1, 2, 1, 2, 1, 2, 1, 1],
                vec![1, 2, 1, 2, 1, 2, 1, 2, 2],
            ],
        )
        .unwrap();
        let e = DiagSubgroup::from_diagonals(
            spec.clone(),
            &[
                vec![2, 1, 1, 1, 1, 1, 1, 1, 1],
                vec![1, 1, 2, 1, 1, 1, 1, 1, 1],
                vec![1, 2, 1, 1, 1, 2, 1, 1, 1],
                vec![1, 1, 1, 1, 2, 1, 1, 2, 1],
                vec![1, 1, 1, 2, 1, 1, 2, 1, 2],
            ],
        )
        .unwrap();
        (spec, h, e)
    }

    /// The subgroups of GL₂(13) × (F*)⁸ ≤ GL₁₀(13) from Proposition 4.2
    /// of the same article.
    fn prop_4_2() -> (BlockGroupSpec, DiagSubgroup, DiagSubgroup) {
        let spec = BlockGroupSpec::new(13, &[2, 1, 1, 1, 1, 1, 1, 1, 1]).unwrap();
        let h = DiagSubgroup::from_diagonals(
            spec.clone(),
            &[
                vec![2, 1, 1, 2, 1, 2, 2, 1, 2, 1],
                vec![1, 2, 2, 1, 2, 1, 1, 2, 1, 2],
            ],
        )
        .unwrap();
        let e = DiagSubgroup::from_diagonals(
            spec.clone(),
            &[
                vec![2, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                vec![1, 2, 2, 1, 1, 1, 1, 1, 1, 1],
                vec![1, 1, 1, 2, 1, 2, 2, 2, 1, 1],
                vec![1, 1, 1, 1, 2, 1, 1, 1, 2, 2],
            ],
        )
        .unwrap();
        (spec, h, e)
    }

    #[test]
    fn torus_double_cosets_in_two_gl2_factors() {
        // 2184² · 12 = 57238272 double cosets: one 2184 = 13·168 per GL₂
        // block and 12⁵/12⁴ = 12 for the five scalar slots (Kim &
        // Michler, Proposition 4.1(d)).
        let (spec, h, e) = prop_4_1();
        let n = count(&spec, &h, &e, CountMethod::NormalForm).unwrap();
        assert_eq!(n, BigUint::from(57238272u64));
    }

    #[test]
    fn torus_double_cosets_in_one_gl2_factor() {
        // 2184 · 12⁴ = 45287424.  Kim & Michler print "4587424" in
        // Proposition 4.2(d) — a dropped digit: the stated factors
        // 2184 · 12⁴ multiply out to 45287424.
        let (spec, h, e) = prop_4_2();
        let expected = BigUint::from(45287424u64);
        let n = count(&spec, &h, &e, CountMethod::NormalForm).unwrap();
        assert_eq!(n, expected);
        let b = count(&spec, &h, &e, CountMethod::Burnside).unwrap();
        assert_eq!(b, expected);
    }

    #[test]
    fn normal_form_rejects_unsupported_shapes() {
        // Size-3 block.
        let spec = BlockGroupSpec::new(13, &[3]).unwrap();
        let h = DiagSubgroup::trivial(spec.clone());
        let e = DiagSubgroup::trivial(spec.clone());
        assert!(matches!(
            count(&spec, &h, &e, CountMethod::NormalForm),
            Err(AmalgamError::NormalFormShape(_))
        ));
        // Non-diagonal generator.
        let spec = BlockGroupSpec::new(13, &[2]).unwrap();
        let f = spec.field();
        let swap = FMatrix::from_rows(f, &[vec![0, 1], vec![1, 0]]).unwrap();
        let h = DiagSubgroup::new(spec.clone(), vec![vec![swap]]).unwrap();
        let e = DiagSubgroup::trivial(spec.clone());
        assert!(matches!(
            count(&spec, &h, &e, CountMethod::NormalForm),
            Err(AmalgamError::NormalFormShape(_))
        ));
        // Missing first-column scalers: ⟨diag(4,1)⟩ only reaches the
        // six powers of 4.
        let h = DiagSubgroup::trivial(spec.clone());
        let e = DiagSubgroup::from_diagonals(spec.clone(), &[vec![4, 1]]).unwrap();
        assert!(matches!(
            count(&spec, &h, &e, CountMethod::NormalForm),
            Err(AmalgamError::NormalFormShape(_))
        ));
        // Scalar-slot kernel condition: with no slots at all, H = E =
        // ⟨diag(2,1)⟩ has H acting non-scalarly on the block, so the
        // normal form does not apply even though the scalers are there.
        let h = DiagSubgroup::from_diagonals(spec.clone(), &[vec![2, 1]]).unwrap();
        let e = h.clone();
        assert!(matches!(
            count(&spec, &h, &e, CountMethod::NormalForm),
            Err(AmalgamError::NormalFormShape(_))
        ));
    }

    #[test]
    fn burnside_handles_non_diagonal_subgroups() {
        // H = ⟨[[1,1],[0,1]]⟩ of order 13 in GL₂(13), E = 1: double
        // cosets are the right cosets, |GL₂(13)|/13 = 26208/13 = 2016.
        let spec = BlockGroupSpec::new(13, &[2]).unwrap();
        let f = spec.field();
        let u = FMatrix::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let h = DiagSubgroup::new(spec.clone(), vec![vec![u]]).unwrap();
        let e = DiagSubgroup::trivial(spec.clone());
        assert_eq!(
            count(&spec, &h, &e, CountMethod::Burnside).unwrap(),
            BigUint::from(2016u32)
        );
        // H = E = the same unipotent line: the identity pair contributes
        // |GL₂(13)| = 26208 and the 12×12 matching unipotent pairs each
        // contribute the enumerated centralizer order 13·12 = 156:
        // (26208 + 144·156) / 13² = 48672/169 = 288.
        assert_eq!(
            count(&spec, &h, &h, CountMethod::Burnside).unwrap(),
            BigUint::from(288u32)
        );
    }

    #[test]
    fn burnside_uses_the_closed_form_for_large_diagonalizable_blocks() {
        // GL₂(101) is too large to enumerate, but H = E = ⟨diag(−1, 1)⟩
        // only needs centralizers of diagonalizable elements:
        // (|GL₂(101)| + |C(diag(−1,1))|) / 4 = (103020000 + 100²) / 4.
        let spec = BlockGroupSpec::new(101, &[2]).unwrap();
        let h = DiagSubgroup::from_diagonals(spec.clone(), &[vec![100, 1]]).unwrap();
        assert_eq!(
            count(&spec, &h, &h, CountMethod::Burnside).unwrap(),
            BigUint::from(25757500u64)
        );
    }

    #[test]
    fn burnside_reports_uncomputable_centralizers() {
        // A unipotent block over GF(101) is not diagonalizable and
        // GL₂(101) exceeds the enumeration budget.
        let spec = BlockGroupSpec::new(101, &[2]).unwrap();
        let f = spec.field();
        let u = FMatrix::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let h = DiagSubgroup::new(spec.clone(), vec![vec![u]]).unwrap();
        assert_eq!(
            count(&spec, &h, &h, CountMethod::Burnside),
            Err(AmalgamError::CentralizerBudget { size: 2, p: 101 })
        );
    }

    #[test]
    fn centralizer_enumeration_matches_known_orders() {
        let f = PrimeField::new(13).unwrap();
        // Unipotent: {[[a,b],[0,a]] : a ≠ 0} has order 13·12 = 156.
        let u = FMatrix::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(enumerate_centralizer(&u).unwrap(), BigUint::from(156u32));
        // Companion of the irreducible x² − x − 1: centralizer is the
        // nonsplit torus F*₁₆₉ of order 168.
        let c = FMatrix::from_rows(f, &[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(enumerate_centralizer(&c).unwrap(), BigUint::from(168u32));
    }

    #[test]
    fn similarity_keys_are_conjugation_invariant() {
        let f = PrimeField::new(13).unwrap();
        let m = FMatrix::from_rows(f, &[vec![3, 0], vec![0, 5]]).unwrap();
        let t = FMatrix::from_rows(f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let tm = mat_mul(&mat_mul(&t, &m).unwrap(), &mat_inverse(&t).unwrap()).unwrap();
        assert!(!is_diagonal(&tm));
        // The dense path on the conjugate agrees with the diagonal fast
        // path on the original.
        assert_eq!(block_class_key(&m).unwrap(), block_class_key(&tm).unwrap());
        // Distinct classes separate: a unipotent and the identity share
        // the characteristic polynomial but not the key.
        let id = FMatrix::identity(f, 2);
        let u = FMatrix::from_rows(f, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_ne!(block_class_key(&id).unwrap(), block_class_key(&u).unwrap());
    }
}
