//! Exhaustive irreducibility checking for small modules over small prime
//! fields, by enumerating every nonzero vector and spanning its orbit
//! closure — deliberately independent of the production Meataxe and of
//! the production linear algebra.

use crate::linalg::{mulmod, Span};
use cgt_core::modrep::GModule;
use std::collections::BTreeSet;

const VECTOR_CAP: u64 = 1_000_000;

fn vector_from_index(mut idx: u64, p: u64, d: usize) -> Vec<u64> {
    let mut v = vec![0u64; d];
    for slot in v.iter_mut() {
        *slot = idx % p;
        idx /= p;
    }
    v
}

/// Applies one generator action on a row vector, reading matrix entries
/// straight off the module: (v·M)_j = Σᵢ vᵢ·M[i][j] mod p.
fn act_row(module: &GModule, g: usize, v: &[u64]) -> Vec<u64> {
    let p = module.field().p();
    let d = module.dimension();
    let m = module.action(g);
    let mut out = vec![0u64; d];
    for (i, &vi) in v.iter().enumerate() {
        if vi == 0 {
            continue;
        }
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = (*slot + mulmod(vi, m.get(i, j), p)) % p;
        }
    }
    out
}

/// The dimension of the invariant subspace generated by one seed vector:
/// close the span under all generator actions until stable.
fn closure_dim(module: &GModule, seed: &[u64]) -> usize {
    let p = module.field().p();
    let d = module.dimension();
    let mut span = Span::new(p, d);
    let mut frontier = vec![seed.to_vec()];
    span.insert(seed);
    while let Some(v) = frontier.pop() {
        for g in 0..module.gen_count() {
            let w = act_row(module, g, &v);
            if span.insert(&w) {
                frontier.push(w);
            }
        }
    }
    span.rank()
}

/// The set of dimensions of cyclic invariant subspaces, over every nonzero
/// seed vector.  Contains `dim` alone iff the module is irreducible.
pub fn invariant_span_dims(module: &GModule) -> BTreeSet<usize> {
    let p = module.field().p();
    let d = module.dimension();
    let total = p.checked_pow(d as u32).expect("p^d fits in u64");
    assert!(total <= VECTOR_CAP, "exhaustive check capped at 10^6 vectors");
    let mut dims = BTreeSet::new();
    for idx in 1..total {
        dims.insert(closure_dim(module, &vector_from_index(idx, p, d)));
    }
    dims
}

/// True iff every nonzero vector generates the whole module — exhaustive
/// irreducibility over GF(p), usable up to p^dim ≤ 10^6.
pub fn is_irreducible_exhaustive(module: &GModule) -> bool {
    let d = module.dimension();
    invariant_span_dims(module).into_iter().all(|k| k == d)
}
