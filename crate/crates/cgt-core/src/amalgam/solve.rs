//! Staged exhaustive search for scalar block conjugators.
//!
//! Given two block-sparse matrices `𝔯` and `𝔣` over GF(p) and a
//! [`ConjugatorTemplate`] describing a block-diagonal-of-scalar-grids
//! shape for a conjugator `T`, [`amalgam_solve`] finds every assignment of
//! the template's unknown scalars for which `T⁻¹𝔣T` commutes with `𝔯`.
//! The search runs in stages: each [`SolveStage`] sweeps all `p^u`
//! candidate tuples for its unknowns (u ≤ 6) and keeps the candidates on
//! which the stage's equations — selected blocks of `(T⁻¹𝔣T)𝔯 − 𝔯(T⁻¹𝔣T)`
//! — vanish, with earlier stages' solutions substituted.  This mirrors how
//! block conjugators are pinned down a few entries at a time when
//! amalgamating representations: the block sparsity of `𝔯` and `𝔣` keeps
//! each equation local to a few template groups, and the plan is validated
//! up front so no equation reads an unknown scheduled for a later stage.
//!
//! Candidates are swept in lexicographic order over each stage's unknown
//! tuple (values `0..p−1`, last unknown fastest), so the returned
//! assignments are deterministically ordered.  A candidate making some
//! group's scalar grid singular is dropped silently: such a `T` is not
//! invertible.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::blocks::BlockGrid;
use super::AmalgamError;
use crate::gf::{mat_inverse, mat_mul, FMatrix, GfError, PrimeField};

/// Largest number of unknowns one stage may sweep (`p⁶` candidates).
const MAX_STAGE_UNKNOWNS: usize = 6;

/// One scalar entry of a conjugator template.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateSlot {
    /// Structurally zero.
    Zero,
    /// A fixed scalar.
    Const(u64),
    /// The unknown with this index.
    Unknown(usize),
}

/// A set of equally-sized blocks coupled by one scalar grid: the
/// conjugator's block `(members[a], members[b])` is `slots[a][b]·I`, and
/// blocks from different groups are never coupled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateGroup {
    /// Indices of the blocks in this group.
    pub members: Vec<usize>,
    /// `members.len() × members.len()` grid of scalar slots.
    pub slots: Vec<Vec<TemplateSlot>>,
}

/// Shape of the conjugator `T`: a partition of the block indices into
/// [`TemplateGroup`]s.  Unknown indices must be contiguous from 0.
#[derive(Clone, Debug)]
pub struct ConjugatorTemplate {
    groups: Vec<TemplateGroup>,
    lookup: BTreeMap<usize, (usize, usize)>,
    unknowns: usize,
}

impl ConjugatorTemplate {
    /// Builds a template, validating group shapes, that no block belongs
    /// to two groups, and that unknown indices are `0..u` for some `u`.
    pub fn new(groups: Vec<TemplateGroup>) -> Result<Self, AmalgamError> {
        if groups.is_empty() {
            return Err(AmalgamError::Plan("template needs at least one group".into()));
        }
        let mut lookup = BTreeMap::new();
        let mut unknowns = BTreeSet::new();
        for (gid, g) in groups.iter().enumerate() {
            let n = g.members.len();
            if n == 0 {
                return Err(AmalgamError::Plan(format!("group {gid} has no members")));
            }
            if g.slots.len() != n || g.slots.iter().any(|row| row.len() != n) {
                return Err(AmalgamError::Plan(format!(
                    "group {gid} has {n} members, its slot grid must be {n}×{n}"
                )));
            }
            for (pos, &m) in g.members.iter().enumerate() {
                if lookup.insert(m, (gid, pos)).is_some() {
                    return Err(AmalgamError::Plan(format!(
                        "block {m} appears in more than one group"
                    )));
                }
            }
            for row in &g.slots {
                for slot in row {
                    if let TemplateSlot::Unknown(u) = slot {
                        unknowns.insert(*u);
                    }
                }
            }
        }
        let count = unknowns.len();
        if unknowns.iter().next_back().is_some_and(|&max| max + 1 != count) {
            return Err(AmalgamError::Plan(
                "unknown indices must be contiguous from 0".into(),
            ));
        }
        Ok(ConjugatorTemplate { groups, lookup, unknowns: count })
    }

    /// The template's groups.
    pub fn groups(&self) -> &[TemplateGroup] {
        &self.groups
    }

    /// Number of distinct unknowns.
    pub fn unknown_count(&self) -> usize {
        self.unknowns
    }

    /// The `(group index, position within group)` of a block.
    pub fn group_of(&self, block: usize) -> Option<(usize, usize)> {
        self.lookup.get(&block).copied()
    }

    /// Checks that the template covers exactly the blocks `0..dims.len()`
    /// and that every group's members share one block size.
    fn validate_against(&self, dims: &[usize]) -> Result<(), AmalgamError> {
        if let Some(&b) = self.lookup.keys().find(|&&b| b >= dims.len()) {
            return Err(AmalgamError::Plan(format!(
                "template references block {b}, the grid has {} blocks",
                dims.len()
            )));
        }
        if let Some(b) = (0..dims.len()).find(|b| !self.lookup.contains_key(b)) {
            return Err(AmalgamError::Plan(format!(
                "block {b} is not covered by the template"
            )));
        }
        for (gid, g) in self.groups.iter().enumerate() {
            let d = dims[g.members[0]];
            if g.members.iter().any(|&m| dims[m] != d) {
                return Err(AmalgamError::Plan(format!(
                    "group {gid} mixes blocks of different sizes"
                )));
            }
        }
        Ok(())
    }

    /// The resolved scalar grid of one group under an assignment.
    fn group_matrix(&self, field: PrimeField, gid: usize, assignment: &[u64]) -> FMatrix {
        let g = &self.groups[gid];
        let n = g.members.len();
        let mut m = FMatrix::zeros(field, n, n);
        for (a, row) in g.slots.iter().enumerate() {
            for (b, slot) in row.iter().enumerate() {
                m.set(a, b, slot_value(field, *slot, assignment));
            }
        }
        m
    }

    /// Assembles the full conjugator `T` for the given block dimensions
    /// and assignment of the unknowns.
    pub fn assemble(
        &self,
        field: PrimeField,
        dims: &[usize],
        assignment: &[u64],
    ) -> Result<FMatrix, AmalgamError> {
        self.validate_against(dims)?;
        if assignment.len() != self.unknowns {
            return Err(AmalgamError::Plan(format!(
                "assignment has {} values, the template has {} unknowns",
                assignment.len(),
                self.unknowns
            )));
        }
        let n: usize = dims.iter().sum();
        let mut offsets = Vec::with_capacity(dims.len());
        let mut off = 0;
        for &d in dims {
            offsets.push(off);
            off += d;
        }
        let mut t = FMatrix::zeros(field, n, n);
        for g in &self.groups {
            for (a, &i) in g.members.iter().enumerate() {
                for (b, &j) in g.members.iter().enumerate() {
                    let v = slot_value(field, g.slots[a][b], assignment);
                    if v != 0 {
                        for d in 0..dims[i] {
                            t.set(offsets[i] + d, offsets[j] + d, v);
                        }
                    }
                }
            }
        }
        Ok(t)
    }
}

fn slot_value(field: PrimeField, slot: TemplateSlot, assignment: &[u64]) -> u64 {
    match slot {
        TemplateSlot::Zero => 0,
        TemplateSlot::Const(c) => field.reduce(c),
        TemplateSlot::Unknown(u) => assignment[u],
    }
}

/// One stage of the staged sweep: which unknowns it solves and which
/// blocks `(i, j)` of `(T⁻¹𝔣T)𝔯 − 𝔯(T⁻¹𝔣T)` it requires to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveStage {
    /// Unknown indices swept by this stage (at most 6).
    pub unknowns: Vec<usize>,
    /// Commutator blocks that must vanish on this stage's candidates.
    pub equations: Vec<(usize, usize)>,
}

/// Runs the staged sweep and returns every full assignment (one value per
/// unknown, indexed by unknown) that survives all stages, in deterministic
/// lexicographic order.  Errors with [`AmalgamError::NoSolution`] naming
/// the first stage on which no candidate survives, and with
/// [`AmalgamError::Plan`] when the template, plan, or grids are malformed
/// or an equation depends on an unknown scheduled later.
pub fn amalgam_solve(
    p: u64,
    r: &BlockGrid,
    f: &BlockGrid,
    template: &ConjugatorTemplate,
    plan: &[SolveStage],
) -> Result<Vec<Vec<u64>>, AmalgamError> {
    let field = PrimeField::new(p)?;
    for grid in [r, f] {
        if grid.field().p() != p {
            return Err(AmalgamError::FieldMismatch { left: p, right: grid.field().p() });
        }
    }
    if r.dims() != f.dims() {
        return Err(AmalgamError::GridShape(
            "the two grids declare different block dimensions".into(),
        ));
    }
    template.validate_against(r.dims())?;
    let kb = r.dims().len();

    // Every unknown is scheduled exactly once, at most 6 per stage.
    let mut stage_of = vec![usize::MAX; template.unknown_count()];
    for (s, stage) in plan.iter().enumerate() {
        if stage.unknowns.len() > MAX_STAGE_UNKNOWNS {
            return Err(AmalgamError::Plan(format!(
                "stage {s} sweeps {} unknowns, the limit is {MAX_STAGE_UNKNOWNS}",
                stage.unknowns.len()
            )));
        }
        for &u in &stage.unknowns {
            if u >= template.unknown_count() {
                return Err(AmalgamError::Plan(format!(
                    "stage {s} names unknown {u}, the template has {}",
                    template.unknown_count()
                )));
            }
            if stage_of[u] != usize::MAX {
                return Err(AmalgamError::Plan(format!(
                    "unknown {u} is scheduled more than once"
                )));
            }
            stage_of[u] = s;
        }
        if let Some(&(i, j)) = stage.equations.iter().find(|&&(i, j)| i >= kb || j >= kb) {
            return Err(AmalgamError::Plan(format!(
                "stage {s} equation ({i}, {j}) is outside the {kb}-block grid"
            )));
        }
    }
    if let Some(u) = stage_of.iter().position(|&s| s == usize::MAX) {
        return Err(AmalgamError::Plan(format!("unknown {u} is never scheduled")));
    }

    // Group-level sparsity of 𝔣: may group pair (ga, gb) carry a nonzero
    // block of T⁻¹𝔣T?
    let gcount = template.groups().len();
    let mut gp = vec![vec![false; gcount]; gcount];
    for (ga, a) in template.groups().iter().enumerate() {
        for (gb, b) in template.groups().iter().enumerate() {
            gp[ga][gb] = a
                .members
                .iter()
                .any(|&k| b.members.iter().any(|&l| f.get(k, l).is_some()));
        }
    }
    let gid_of = |b: usize| template.group_of(b).expect("coverage validated").0;

    // Which groups each stage's equations touch, and the locality check:
    // those groups' unknowns must be solved by the end of the stage.
    let mut needed: Vec<BTreeSet<usize>> = Vec::with_capacity(plan.len());
    for (s, stage) in plan.iter().enumerate() {
        let mut need = BTreeSet::new();
        for &(i, j) in &stage.equations {
            let gi = gid_of(i);
            let gj = gid_of(j);
            for m in 0..kb {
                let gm = gid_of(m);
                if gp[gi][gm] && r.get(m, j).is_some() {
                    need.insert(gi);
                    need.insert(gm);
                }
                if r.get(i, m).is_some() && gp[gm][gj] {
                    need.insert(gm);
                    need.insert(gj);
                }
            }
        }
        for &g in &need {
            for row in &template.groups()[g].slots {
                for slot in row {
                    if let TemplateSlot::Unknown(u) = slot {
                        if stage_of[*u] > s {
                            return Err(AmalgamError::Plan(format!(
                                "stage {s} equations depend on unknown {u}, \
                                 scheduled in stage {}",
                                stage_of[*u]
                            )));
                        }
                    }
                }
            }
        }
        needed.push(need);
    }

    let mut survivors: Vec<Vec<u64>> = vec![vec![0; template.unknown_count()]];
    for (s, stage) in plan.iter().enumerate() {
        let mut next: Vec<Vec<u64>> = Vec::new();
        for base in &survivors {
            let w = stage.unknowns.len();
            let mut tuple = vec![0u64; w];
            'candidates: loop {
                let mut asg = base.clone();
                for (t, &u) in stage.unknowns.iter().enumerate() {
                    asg[u] = tuple[t];
                }
                if candidate_ok(field, r, f, template, &needed[s], &stage.equations, &asg)? {
                    next.push(asg);
                }
                let mut idx = w;
                loop {
                    if idx == 0 {
                        break 'candidates;
                    }
                    idx -= 1;
                    tuple[idx] += 1;
                    if tuple[idx] < p {
                        continue 'candidates;
                    }
                    tuple[idx] = 0;
                }
            }
        }
        if next.is_empty() {
            return Err(AmalgamError::NoSolution { stage: s });
        }
        survivors = next;
    }
    Ok(survivors)
}

/// Evaluates one candidate: resolves and inverts the scalar grids of the
/// groups the stage touches (singular grid ⇒ candidate dropped), then
/// checks that every selected commutator block vanishes.
fn candidate_ok(
    field: PrimeField,
    r: &BlockGrid,
    f: &BlockGrid,
    template: &ConjugatorTemplate,
    needed: &BTreeSet<usize>,
    equations: &[(usize, usize)],
    asg: &[u64],
) -> Result<bool, AmalgamError> {
    let mut mats: BTreeMap<usize, (FMatrix, FMatrix)> = BTreeMap::new();
    for &g in needed {
        let sg = template.group_matrix(field, g, asg);
        match mat_inverse(&sg) {
            Ok(inv) => {
                mats.insert(g, (sg, inv));
            }
            Err(GfError::Singular { .. }) => return Ok(false),
            Err(e) => return Err(e.into()),
        }
    }
    let kb = r.dims().len();
    let mut fprime: BTreeMap<(usize, usize), Option<FMatrix>> = BTreeMap::new();
    for &(i, j) in equations {
        let mut acc: Option<FMatrix> = None;
        for m in 0..kb {
            if let Some(rmj) = r.get(m, j) {
                if let Some(fim) = fprime_block(field, i, m, f, template, &mats, &mut fprime)? {
                    let term = mat_mul(&fim, rmj)?;
                    acc = Some(match acc {
                        None => term,
                        Some(a) => a.add(&term)?,
                    });
                }
            }
            if let Some(rim) = r.get(i, m) {
                if let Some(fmj) = fprime_block(field, m, j, f, template, &mats, &mut fprime)? {
                    let term = mat_mul(rim, &fmj)?;
                    acc = Some(match acc {
                        None => term.scale(field.neg(1)),
                        Some(a) => a.sub(&term)?,
                    });
                }
            }
        }
        if let Some(res) = acc {
            if res.entries().iter().any(|&x| x != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Block `(i, m)` of `T⁻¹𝔣T`, memoized per candidate:
/// `Σ_{k∈grp(i), l∈grp(m)} S⁻¹_{grp(i)}[i,k] · S_{grp(m)}[l,m] · 𝔣(k,l)`.
/// `None` is a structural zero (no contributing block of 𝔣).
fn fprime_block(
    field: PrimeField,
    i: usize,
    m: usize,
    f: &BlockGrid,
    template: &ConjugatorTemplate,
    mats: &BTreeMap<usize, (FMatrix, FMatrix)>,
    memo: &mut BTreeMap<(usize, usize), Option<FMatrix>>,
) -> Result<Option<FMatrix>, AmalgamError> {
    if let Some(v) = memo.get(&(i, m)) {
        return Ok(v.clone());
    }
    let (gi, pi) = template.group_of(i).expect("coverage validated");
    let (gm, pm) = template.group_of(m).expect("coverage validated");
    let mut acc: Option<FMatrix> = None;
    for (pk, &k) in template.groups()[gi].members.iter().enumerate() {
        for (pl, &l) in template.groups()[gm].members.iter().enumerate() {
            if let Some(fkl) = f.get(k, l) {
                let inv_si = &mats.get(&gi).expect("locality check resolves this group").1;
                let sm = &mats.get(&gm).expect("locality check resolves this group").0;
                let coef = field.mul(inv_si.get(pi, pk), sm.get(pl, pm));
                if coef != 0 {
                    let term = fkl.scale(coef);
                    acc = Some(match acc {
                        None => term,
                        Some(a) => a.add(&term)?,
                    });
                }
            }
        }
    }
    memo.insert((i, m), acc.clone());
    Ok(acc)
}

/// Re-checks one assignment by direct dense multiplication: assembles
/// `T`, and reports whether `T` is invertible and `T⁻¹𝔣T` commutes
/// with `𝔯`.  A singular `T` yields `Ok(false)`.
pub fn check_assignment(
    r: &BlockGrid,
    f: &BlockGrid,
    template: &ConjugatorTemplate,
    assignment: &[u64],
) -> Result<bool, AmalgamError> {
    if r.field() != f.field() {
        return Err(AmalgamError::FieldMismatch {
            left: r.field().p(),
            right: f.field().p(),
        });
    }
    if r.dims() != f.dims() {
        return Err(AmalgamError::GridShape(
            "the two grids declare different block dimensions".into(),
        ));
    }
    let t = template.assemble(r.field(), r.dims(), assignment)?;
    let tinv = match mat_inverse(&t) {
        Ok(v) => v,
        Err(GfError::Singular { .. }) => return Ok(false),
        Err(e) => return Err(e.into()),
    };
    let g = mat_mul(&mat_mul(&tinv, &f.assemble())?, &t)?;
    let rd = r.assemble();
    Ok(mat_mul(&g, &rd)? == mat_mul(&rd, &g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf13() -> PrimeField {
        PrimeField::new(13).unwrap()
    }

    /// Grid of 1×1 blocks from a dense matrix; zero entries become
    /// structural zeros.
    fn grid_1x1(m: &FMatrix) -> BlockGrid {
        let f = m.field();
        let k = m.rows();
        let entries = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let v = m.get(i, j);
                        (v != 0).then(|| FMatrix::from_rows(f, &[vec![v]]).unwrap())
                    })
                    .collect()
            })
            .collect();
        BlockGrid::new(f, &vec![1; k], entries).unwrap()
    }

    fn one_group(members: Vec<usize>, slots: Vec<Vec<TemplateSlot>>) -> ConjugatorTemplate {
        ConjugatorTemplate::new(vec![TemplateGroup { members, slots }]).unwrap()
    }

    #[test]
    fn template_construction_is_validated() {
        use TemplateSlot::{Const, Unknown};
        // Duplicate member.
        let bad = ConjugatorTemplate::new(vec![
            TemplateGroup { members: vec![0], slots: vec![vec![Const(1)]] },
            TemplateGroup { members: vec![0], slots: vec![vec![Const(1)]] },
        ]);
        assert!(matches!(bad, Err(AmalgamError::Plan(_))));
        // Grid shape mismatch.
        let bad = ConjugatorTemplate::new(vec![TemplateGroup {
            members: vec![0, 1],
            slots: vec![vec![Const(1)]],
        }]);
        assert!(matches!(bad, Err(AmalgamError::Plan(_))));
        // Unknowns must be contiguous from 0.
        let bad = ConjugatorTemplate::new(vec![TemplateGroup {
            members: vec![0],
            slots: vec![vec![Unknown(1)]],
        }]);
        assert!(matches!(bad, Err(AmalgamError::Plan(_))));
    }

    #[test]
    fn assemble_places_scalar_grids_on_identity_blocks() {
        use TemplateSlot::{Const, Zero};
        let f = gf13();
        let template = one_group(
            vec![0, 1],
            vec![vec![Const(1), Const(2)], vec![Zero, Const(1)]],
        );
        let t = template.assemble(f, &[2, 2], &[]).unwrap();
        assert_eq!(t.row(0), &[1, 0, 2, 0]);
        assert_eq!(t.row(1), &[0, 1, 0, 2]);
        assert_eq!(t.row(2), &[0, 0, 1, 0]);
        assert_eq!(t.row(3), &[0, 0, 0, 1]);
        // Mixed block sizes within a group are rejected.
        assert!(matches!(
            template.assemble(f, &[2, 1], &[]),
            Err(AmalgamError::Plan(_))
        ));
    }

    #[test]
    fn scalar_conjugator_leaves_all_nonzero_values() {
        // T = (v), F' = v⁻¹fv = f always commutes: every invertible v
        // survives, in ascending order; v = 0 is dropped as singular.
        let f = gf13();
        let r = grid_1x1(&FMatrix::from_rows(f, &[vec![7]]).unwrap());
        let fg = grid_1x1(&FMatrix::from_rows(f, &[vec![9]]).unwrap());
        let template = one_group(vec![0], vec![vec![TemplateSlot::Unknown(0)]]);
        let plan = [SolveStage { unknowns: vec![0], equations: vec![(0, 0)] }];
        let sols = amalgam_solve(13, &r, &fg, &template, &plan).unwrap();
        let expected: Vec<Vec<u64>> = (1..=12).map(|v| vec![v]).collect();
        assert_eq!(sols, expected);
        // The singular assignment is reported as non-solution by the
        // dense re-check, not as an error.
        assert!(!check_assignment(&r, &fg, &template, &[0]).unwrap());
        assert!(check_assignment(&r, &fg, &template, &[5]).unwrap());
    }

    #[test]
    fn contradictory_equations_name_the_failing_stage() {
        // F'(0,1)R(1,0) = R(0,1)F'(1,0) forces 16v² = 2, i.e. v² = 5,
        // and 5 is not a square mod 13.
        let f = gf13();
        let r = grid_1x1(&FMatrix::from_rows(f, &[vec![0, 1], vec![2, 0]]).unwrap());
        let fg = grid_1x1(&FMatrix::from_rows(f, &[vec![0, 8], vec![2, 0]]).unwrap());
        let template = ConjugatorTemplate::new(vec![
            TemplateGroup { members: vec![0], slots: vec![vec![TemplateSlot::Const(1)]] },
            TemplateGroup { members: vec![1], slots: vec![vec![TemplateSlot::Unknown(0)]] },
        ])
        .unwrap();
        let plan = [SolveStage { unknowns: vec![0], equations: vec![(0, 0)] }];
        assert_eq!(
            amalgam_solve(13, &r, &fg, &template, &plan),
            Err(AmalgamError::NoSolution { stage: 0 })
        );
    }

    #[test]
    fn planted_conjugator_is_recovered_uniquely() {
        // R is the companion matrix of x² − x − 1, irreducible mod 13, so
        // solutions T of (T⁻¹FT)R = R(T⁻¹FT) with F = T₀RT₀⁻¹ form the
        // two cosets T₀·N(C(R)).  Pinning three entries of T to the
        // planted T₀(I + R) = [[3,5],[7,11]] leaves exactly one choice
        // for the fourth: 11.
        let f = gf13();
        let r_dense = FMatrix::from_rows(f, &[vec![0, 1], vec![1, 1]]).unwrap();
        let t0 = FMatrix::from_rows(f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let f_dense =
            mat_mul(&mat_mul(&t0, &r_dense).unwrap(), &mat_inverse(&t0).unwrap()).unwrap();
        let r = grid_1x1(&r_dense);
        let fg = grid_1x1(&f_dense);
        use TemplateSlot::{Const, Unknown};
        let template = one_group(
            vec![0, 1],
            vec![vec![Const(3), Const(5)], vec![Const(7), Unknown(0)]],
        );
        let plan = [SolveStage {
            unknowns: vec![0],
            equations: vec![(0, 0), (0, 1), (1, 0), (1, 1)],
        }];
        let sols = amalgam_solve(13, &r, &fg, &template, &plan).unwrap();
        assert_eq!(sols, vec![vec![11]]);
        assert!(check_assignment(&r, &fg, &template, &[11]).unwrap());
    }

    /// Two uncoupled 2-cycles with a planted diagonal conjugator
    /// T* = diag(1, 5, 7, 11): R has blocks (0,1) = 1, (1,0) = 2,
    /// (2,3) = 1, (3,2) = 2 and F = T*RT*⁻¹.  Stage 0 pins t₁ from the
    /// first cycle (3v² = 10 ⟹ v ∈ {5, 8}); stage 1 sweeps (t₂, t₃) of
    /// the second cycle (6w² = 5u² ⟹ w = ±4u, 24 pairs).
    fn two_cycle_instance() -> (BlockGrid, BlockGrid, ConjugatorTemplate) {
        let f = gf13();
        let r_dense = FMatrix::from_rows(
            f,
            &[
                vec![0, 1, 0, 0],
                vec![2, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 2, 0],
            ],
        )
        .unwrap();
        let tstar = FMatrix::diagonal(f, &[1, 5, 7, 11]).unwrap();
        let f_dense =
            mat_mul(&mat_mul(&tstar, &r_dense).unwrap(), &mat_inverse(&tstar).unwrap())
                .unwrap();
        use TemplateSlot::{Const, Unknown};
        let template = ConjugatorTemplate::new(vec![
            TemplateGroup { members: vec![0], slots: vec![vec![Const(1)]] },
            TemplateGroup { members: vec![1], slots: vec![vec![Unknown(0)]] },
            TemplateGroup { members: vec![2], slots: vec![vec![Unknown(1)]] },
            TemplateGroup { members: vec![3], slots: vec![vec![Unknown(2)]] },
        ])
        .unwrap();
        (grid_1x1(&r_dense), grid_1x1(&f_dense), template)
    }

    #[test]
    fn staged_solving_keeps_equations_local() {
        let (r, fg, template) = two_cycle_instance();
        let plan = [
            SolveStage { unknowns: vec![0], equations: vec![(0, 0)] },
            SolveStage { unknowns: vec![1, 2], equations: vec![(2, 2), (3, 3)] },
        ];
        let sols = amalgam_solve(13, &r, &fg, &template, &plan).unwrap();
        // 2 choices for t₁ times 24 pairs (t₂, t₃).
        assert_eq!(sols.len(), 48);
        assert!(sols.contains(&vec![5, 7, 11]));
        for s in &sols {
            assert!(check_assignment(&r, &fg, &template, s).unwrap());
        }
        // A near-miss fails the dense re-check.
        assert!(!check_assignment(&r, &fg, &template, &[5, 7, 10]).unwrap());
    }

    #[test]
    fn plans_reading_later_unknowns_are_rejected() {
        let (r, fg, template) = two_cycle_instance();
        // Equation (2,2) needs t₂ and t₃, scheduled only in stage 1.
        let plan = [
            SolveStage { unknowns: vec![0], equations: vec![(2, 2)] },
            SolveStage { unknowns: vec![1, 2], equations: vec![] },
        ];
        assert!(matches!(
            amalgam_solve(13, &r, &fg, &template, &plan),
            Err(AmalgamError::Plan(_))
        ));
        // Unscheduled and doubly-scheduled unknowns are rejected.
        let plan = [SolveStage { unknowns: vec![0], equations: vec![] }];
        assert!(matches!(
            amalgam_solve(13, &r, &fg, &template, &plan),
            Err(AmalgamError::Plan(_))
        ));
        let plan = [
            SolveStage { unknowns: vec![0, 0, 1, 2], equations: vec![] },
        ];
        assert!(matches!(
            amalgam_solve(13, &r, &fg, &template, &plan),
            Err(AmalgamError::Plan(_))
        ));
        // More than six unknowns in one stage.
        let plan = [SolveStage { unknowns: vec![0, 1, 2, 3, 4, 5, 6], equations: vec![] }];
        assert!(matches!(
            amalgam_solve(13, &r, &fg, &template, &plan),
            Err(AmalgamError::Plan(_))
        ));
    }
}
