//! Brute-force block-diagonal matrix groups: full enumeration of
//! ∏ GL(nᵢ, p) as flat entry vectors and direct orbit counting of
//! (H, E)-double cosets, independent of the production Burnside and
//! normal-form counters.

use crate::linalg::{is_invertible, mulmod};
use cgt_core::amalgam::BlockGroupSpec;
use num_bigint::BigUint;
use std::collections::BTreeMap;

const ENUM_CAP: u32 = 200_000;

/// Multiplies two block-diagonal matrices stored as flat vectors: the
/// concatenation, block by block, of each block's row-major entries.
pub fn block_mul(p: u64, sizes: &[usize], a: &[u64], b: &[u64]) -> Vec<u64> {
    let total: usize = sizes.iter().map(|n| n * n).sum();
    assert_eq!(a.len(), total, "left operand length");
    assert_eq!(b.len(), total, "right operand length");
    let mut out = vec![0u64; total];
    let mut off = 0;
    for &n in sizes {
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc = (acc + mulmod(a[off + i * n + k], b[off + k * n + j], p)) % p;
                }
                out[off + i * n + j] = acc;
            }
        }
        off += n * n;
    }
    out
}

/// Every invertible block, one flat `n×n` entry vector each.
fn invertible_blocks(p: u64, n: usize) -> Vec<Vec<u64>> {
    let cells = n * n;
    let total = p.checked_pow(cells as u32).expect("p^(n^2) fits in u64");
    let mut out = Vec::new();
    for idx in 0..total {
        let mut flat = vec![0u64; cells];
        let mut rem = idx;
        for slot in flat.iter_mut() {
            *slot = rem % p;
            rem /= p;
        }
        if is_invertible(p, n, &flat) {
            out.push(flat);
        }
    }
    out
}

/// Enumerates the full block-diagonal group ∏ GL(nᵢ, p) described by the
/// spec, as flat vectors compatible with [`block_mul`].  Capped at group
/// order 200 000.
pub fn enumerate_block_group(spec: &BlockGroupSpec) -> Vec<Vec<u64>> {
    assert!(
        spec.order() <= BigUint::from(ENUM_CAP),
        "enumeration capped at order {ENUM_CAP}"
    );
    let p = spec.field().p();
    let mut elements: Vec<Vec<u64>> = vec![Vec::new()];
    for &n in spec.block_sizes() {
        let blocks = invertible_blocks(p, n);
        let mut next = Vec::with_capacity(elements.len() * blocks.len());
        for head in &elements {
            for block in &blocks {
                let mut e = head.clone();
                e.extend_from_slice(block);
                next.push(e);
            }
        }
        elements = next;
    }
    elements
}

/// Counts the (H, E)-double cosets in the listed group directly: the
/// orbits of x ↦ h·x and x ↦ x·e over the given generator lists.  Empty
/// generator lists are allowed (each orbit is then a one-sided coset or a
/// single element).
pub fn double_coset_orbit_count(
    p: u64,
    sizes: &[usize],
    elements: &[Vec<u64>],
    h_gens: &[Vec<u64>],
    e_gens: &[Vec<u64>],
) -> u64 {
    let index: BTreeMap<&[u64], usize> =
        elements.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    assert_eq!(index.len(), elements.len(), "elements must be distinct");
    let mut seen = vec![false; elements.len()];
    let mut orbits = 0u64;
    for start in 0..elements.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            let x = &elements[i];
            let mut push = |y: Vec<u64>| {
                let j = *index.get(y.as_slice()).expect("products stay in the group");
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            };
            for h in h_gens {
                push(block_mul(p, sizes, h, x));
            }
            for e in e_gens {
                push(block_mul(p, sizes, x, e));
            }
        }
    }
    orbits
}
