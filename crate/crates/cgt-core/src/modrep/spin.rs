//! Spinning: closing a vector under the module action.

use alloc::vec::Vec;

use crate::gf::{Echelon, FMatrix};
use crate::modrep::{GModule, ModError};

/// Validates and reduces a seed vector for `m`: right length, nonzero.
fn reduce_seed(m: &GModule, v: &[u64]) -> Result<Vec<u64>, ModError> {
    if v.len() != m.dimension() {
        return Err(ModError::DimMismatch { expected: m.dimension(), got: v.len() });
    }
    let f = m.field();
    let w: Vec<u64> = v.iter().map(|&x| f.reduce(x)).collect();
    if w.iter().all(|&x| x == 0) {
        return Err(ModError::ZeroVector);
    }
    Ok(w)
}

/// The smallest invariant subspace containing `v`, as an echelonized basis
/// (one row per basis vector, in row-reduced form ordered by pivot).
///
/// The result is closed under every generator action by construction; the
/// closure is re-verified with a debug assertion.
pub fn spin(m: &GModule, v: &[u64]) -> Result<FMatrix, ModError> {
    let ss = spin_standard(m, v)?;
    let f = m.field();
    let mut ech = Echelon::new(f, m.dimension());
    for row in &ss.rows {
        ech.insert(row);
    }
    let mut rows = ech.into_basis();
    rows.sort_by_key(|r| r.iter().position(|&x| x != 0).unwrap_or(r.len()));
    #[cfg(debug_assertions)]
    {
        let mut check = Echelon::new(f, m.dimension());
        for r in &rows {
            check.insert(r);
        }
        for r in &rows {
            for g in 0..m.gen_count() {
                debug_assert!(check.contains(&m.act(r, g)), "spin not invariant");
            }
        }
    }
    Ok(FMatrix::from_rows(f, &rows)?)
}

/// A standard basis produced by spinning: the vectors in production order
/// together with the schedule that produced them.
///
/// `rows[0]` is the (reduced) seed; for each `(i, g)` in `schedule`, in
/// order, the vector `rows[i]·Aᵍ` was found linearly independent of its
/// predecessors and appended.  Replaying the same schedule from a seed in
/// another module (see [`replay_schedule`]) yields the corresponding
/// candidate standard basis there — the heart of the standard-basis
/// isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSpin {
    /// Basis vectors in production order (not echelonized).
    pub rows: Vec<Vec<u64>>,
    /// For each appended vector (beyond the seed), the pair
    /// `(source row index, generator index)` that produced it.
    pub schedule: Vec<(usize, usize)>,
}

/// Spins `v` keeping the produced vectors and their production schedule.
///
/// Deterministic: sources are processed first-in-first-out and generators
/// in ascending order.
pub fn spin_standard(m: &GModule, v: &[u64]) -> Result<StandardSpin, ModError> {
    let seed = reduce_seed(m, v)?;
    let mut ech = Echelon::new(m.field(), m.dimension());
    ech.insert(&seed);
    let mut rows = alloc::vec![seed];
    let mut schedule = Vec::new();
    let mut i = 0;
    while i < rows.len() && rows.len() < m.dimension() {
        for g in 0..m.gen_count() {
            let w = m.act(&rows[i], g);
            if ech.insert(&w).is_some() {
                rows.push(w);
                schedule.push((i, g));
                if rows.len() == m.dimension() {
                    break;
                }
            }
        }
        i += 1;
    }
    Ok(StandardSpin { rows, schedule })
}

/// Replays a spin schedule from a new seed in (possibly) another module:
/// returns the produced vectors in order, with no independence checking.
/// The caller decides what rank the result has.
pub fn replay_schedule(
    m: &GModule,
    seed: &[u64],
    schedule: &[(usize, usize)],
) -> Result<Vec<Vec<u64>>, ModError> {
    let seed = reduce_seed(m, seed)?;
    let mut rows = alloc::vec![seed];
    for &(i, g) in schedule {
        let w = m.act(&rows[i], g);
        rows.push(w);
    }
    Ok(rows)
}
