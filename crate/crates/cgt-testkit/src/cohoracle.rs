//! Exhaustive second-cohomology dimensions for tiny groups and trivial
//! GF(p) coefficients: enumerate every normalized 2-cochain, test the
//! cocycle identity directly, and enumerate every coboundary.  Usable only
//! when p^((n−1)²) is small — the point is independence, not speed.

use crate::enumgrp::elements;
use cgt_core::perm::Permutation;
use std::collections::BTreeSet;

const FUNCTION_CAP: u64 = 2_000_000;

fn log_exact(count: u64, p: u64) -> usize {
    let mut rem = count;
    let mut dim = 0;
    while rem > 1 {
        assert_eq!(rem % p, 0, "count {count} is not a power of {p}");
        rem /= p;
        dim += 1;
    }
    assert_eq!(rem, 1, "count {count} is not a power of {p}");
    dim
}

/// The dimensions (dim Z², dim B², dim H²) of the group generated by the
/// given permutations with trivial action on a one-dimensional GF(p)
/// module, computed by brute force over all p^((n−1)²) normalized
/// 2-cochains f (slots with an identity argument are pinned to 0) and all
/// p^(n−1) normalized 1-cochains c with δc(x,y) = c(x) + c(y) − c(xy).
pub fn trivial_module_h2_dims(generators: &[Permutation], p: u64) -> (usize, usize, usize) {
    let group = elements(generators);
    let n = group.len();
    let index = |g: &Permutation| group.iter().position(|h| h == g).expect("closed");
    let mut table = vec![0usize; n * n];
    for (i, a) in group.iter().enumerate() {
        for (j, b) in group.iter().enumerate() {
            table[i * n + j] = index(&a.compose_checked(b).expect("one degree"));
        }
    }

    let w = (n - 1) * (n - 1);
    let total = p.checked_pow(w as u32).expect("p^w fits in u64");
    assert!(total <= FUNCTION_CAP, "exhaustive check capped at {FUNCTION_CAP} functions");
    // f(x, y) for x, y ≥ 1 lives at slot (x−1)(n−1) + (y−1); f is 0 when
    // either argument is the identity (index 0).
    let slot = |x: usize, y: usize| (x - 1) * (n - 1) + (y - 1);
    let value = |f: &[u64], x: usize, y: usize| {
        if x == 0 || y == 0 {
            0
        } else {
            f[slot(x, y)]
        }
    };

    let mut cocycles = 0u64;
    let mut f = vec![0u64; w];
    for idx in 0..total {
        let mut rem = idx;
        for s in f.iter_mut() {
            *s = rem % p;
            rem /= p;
        }
        let mut ok = true;
        'outer: for x in 1..n {
            for y in 1..n {
                for z in 1..n {
                    let xy = table[x * n + y];
                    let yz = table[y * n + z];
                    let lhs = (value(&f, x, y) + value(&f, xy, z)) % p;
                    let rhs = (value(&f, y, z) + value(&f, x, yz)) % p;
                    if lhs != rhs {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            cocycles += 1;
        }
    }
    let z2 = log_exact(cocycles, p);

    let c_total = p.checked_pow((n - 1) as u32).expect("p^(n-1) fits in u64");
    let mut coboundaries: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut c = vec![0u64; n - 1];
    for idx in 0..c_total {
        let mut rem = idx;
        for s in c.iter_mut() {
            *s = rem % p;
            rem /= p;
        }
        let cv = |g: usize| if g == 0 { 0 } else { c[g - 1] };
        let mut delta = vec![0u64; w];
        for x in 1..n {
            for y in 1..n {
                let xy = table[x * n + y];
                delta[slot(x, y)] = (cv(x) + cv(y) + p - cv(xy) % p) % p;
            }
        }
        coboundaries.insert(delta);
    }
    let b2 = log_exact(coboundaries.len() as u64, p);

    (z2, b2, z2 - b2)
}
