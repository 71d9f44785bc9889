//! Todd–Coxeter coset enumeration: HLT with lookahead compaction (the
//! default), and Felsch for dense presentations.

use alloc::vec;
use alloc::vec::Vec;

use super::{FpError, Presentation};
use crate::gf::{evaluate_word_in, GenWord};
use crate::perm::Permutation;

/// Enumeration strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Relator-driven enumeration with lookahead compaction; the default.
    Hlt,
    /// Definition-driven enumeration with full deduction sweeps after every
    /// definition.  Slower per coset but defines far fewer redundant cosets
    /// on dense presentations.
    Felsch,
}

/// Options for [`todd_coxeter`].
#[derive(Clone, Copy, Debug)]
pub struct TcOptions {
    /// Enumeration strategy.
    pub strategy: Strategy,
    /// Maximum number of live cosets at any moment.  When HLT hits the cap
    /// it runs a lookahead pass and compacts; if that frees nothing the
    /// enumeration stops with a capped status.
    pub max_cosets: usize,
    /// Dead cosets tolerated before the table is compacted.
    pub compaction_interval: usize,
}

impl Default for TcOptions {
    fn default() -> Self {
        TcOptions { strategy: Strategy::Hlt, max_cosets: 1 << 20, compaction_interval: 100_000 }
    }
}

/// Outcome of an enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcStatus {
    /// The table closed: every entry is defined and every relator scans
    /// correctly at every coset, so the coset count is the exact index.
    Closed,
    /// The coset cap was reached before closure; the table is partial.
    Capped,
}

const UNDEF: u32 = u32::MAX;

/// A coset table for a subgroup of a finitely presented group.  Coset 1 (in
/// the 1-based public numbering) is the subgroup itself.
pub struct CosetTable {
    pres: Presentation,
    subgroup_words: Vec<GenWord>,
    width: usize,
    /// Row-major live table; `UNDEF` entries only occur in capped tables.
    rows: Vec<u32>,
    status: TcStatus,
    defined: usize,
    killed: usize,
}

impl CosetTable {
    /// The presentation that was enumerated.
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// The subgroup generator words the enumeration was relative to.
    pub fn subgroup_words(&self) -> &[GenWord] {
        &self.subgroup_words
    }

    /// Number of live cosets (the index of the subgroup when closed).
    pub fn index(&self) -> usize {
        if self.width == 0 {
            1
        } else {
            self.rows.len() / self.width
        }
    }

    /// Enumeration outcome.
    pub fn status(&self) -> TcStatus {
        self.status
    }

    /// Whether the table closed.
    pub fn is_closed(&self) -> bool {
        self.status == TcStatus::Closed
    }

    /// Total cosets ever defined, including ones later merged away.
    pub fn cosets_defined(&self) -> usize {
        self.defined
    }

    /// Cosets merged away by coincidences.
    pub fn cosets_killed(&self) -> usize {
        self.killed
    }

    /// Image of the 0-based coset `c` under generator `g` (or its inverse
    /// for `inverse = true`); `None` where the table is undefined (capped
    /// tables only).
    pub fn apply(&self, c: usize, g: usize, inverse: bool) -> Option<usize> {
        let col = 2 * g + usize::from(inverse);
        let v = self.rows[c * self.width + col];
        if v == UNDEF {
            None
        } else {
            Some(v as usize)
        }
    }

    /// Traces a word from a coset; `None` if the trace runs off the defined
    /// part of a capped table.
    pub fn trace(&self, start: usize, word: &GenWord) -> Option<usize> {
        let mut c = start;
        for &(g, e) in word.syllables() {
            let (steps, inv) = if e >= 0 { (e as u64, false) } else { ((-e) as u64, true) };
            for _ in 0..steps {
                c = self.apply(c, g, inv)?;
            }
        }
        Some(c)
    }
}

/// Converts a closed coset table to the permutation action on its cosets:
/// one permutation per generator.  The result is verified before it is
/// returned — every relator must act trivially and every subgroup word must
/// fix coset 1.
pub fn coset_action(table: &CosetTable) -> Result<Vec<Permutation>, FpError> {
    if !table.is_closed() {
        return Err(FpError::TableNotClosed);
    }
    let n = table.index();
    let mut perms = Vec::with_capacity(table.pres.gen_count());
    for g in 0..table.pres.gen_count() {
        let mut images = Vec::with_capacity(n);
        for c in 0..n {
            images.push(table.apply(c, g, false).expect("closed table is total") as u32);
        }
        perms.push(Permutation::from_images(images).map_err(FpError::Perm)?);
    }
    for (i, rel) in table.pres.relators().iter().enumerate() {
        if table.pres.gen_count() == 0 {
            break;
        }
        let image = evaluate_word_in(rel, &perms).map_err(|_| FpError::RelatorFailed { index: i })?;
        if !image.is_identity() {
            return Err(FpError::RelatorFailed { index: i });
        }
    }
    for w in &table.subgroup_words {
        if table.trace(0, w) != Some(0) {
            return Err(FpError::RelatorFailed { index: usize::MAX });
        }
    }
    Ok(perms)
}

/// Expands a word into a sequence of column letters: column `2g` applies
/// generator `g`, column `2g+1` its inverse.
fn letters(w: &GenWord) -> Vec<u32> {
    let mut out = Vec::new();
    for &(g, e) in w.syllables() {
        let (col, count) =
            if e >= 0 { ((2 * g) as u32, e as u64) } else { ((2 * g + 1) as u32, (-e) as u64) };
        for _ in 0..count {
            out.push(col);
        }
    }
    out
}

#[inline]
fn inv_col(col: u32) -> u32 {
    col ^ 1
}

/// The working state of an enumeration.
struct Enumerator {
    width: usize,
    table: Vec<u32>,
    /// Union-find over cosets; `rep[c] == c` for live cosets.
    rep: Vec<u32>,
    live: usize,
    defined: usize,
    killed: usize,
    killed_since_compact: usize,
    /// Coincidences waiting to be processed.
    pending: Vec<(u32, u32)>,
    /// Count of table entries filled, for deduction-progress detection.
    edges_set: u64,
}

/// Signal that the coset cap was hit while trying to define a coset.
struct CapHit;

impl Enumerator {
    fn new(width: usize) -> Self {
        let mut e = Enumerator {
            width,
            table: Vec::new(),
            rep: Vec::new(),
            live: 0,
            defined: 0,
            killed: 0,
            killed_since_compact: 0,
            pending: Vec::new(),
            edges_set: 0,
        };
        e.new_coset();
        e
    }

    fn n_rows(&self) -> usize {
        self.rep.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.rep[c as usize] == c
    }

    fn find(&mut self, mut c: u32) -> u32 {
        while self.rep[c as usize] != c {
            let up = self.rep[c as usize];
            self.rep[c as usize] = self.rep[up as usize];
            c = self.rep[c as usize];
        }
        c
    }

    fn entry(&self, c: u32, col: u32) -> u32 {
        self.table[c as usize * self.width + col as usize]
    }

    fn set_entry(&mut self, c: u32, col: u32, v: u32) {
        self.table[c as usize * self.width + col as usize] = v;
    }

    fn new_coset(&mut self) -> u32 {
        let c = self.rep.len() as u32;
        self.rep.push(c);
        self.table.extend(core::iter::repeat(UNDEF).take(self.width));
        self.live += 1;
        self.defined += 1;
        c
    }

    /// Records the edge `a --col--> b` (both live).
    ///
    /// The table keeps a strict symmetry invariant at quiescence: an entry
    /// `table[a][col] = b` always has the partner `table[b][col⁻¹] = a`,
    /// both written with live ids.  When one side of the new edge is
    /// already occupied, the edge is not written; the fact it carries is
    /// preserved as a queued coincidence against the occupant (whose own
    /// symmetric pair keeps it alive through the merge).  Occupants that
    /// are merely stale aliases of the intended target are freshened in
    /// place.
    fn set_edge(&mut self, a: u32, col: u32, b: u32) {
        let ea = self.entry(a, col);
        if ea != UNDEF {
            if self.find(ea) == b {
                self.set_entry(a, col, b);
                self.set_entry(b, inv_col(col), a);
            } else {
                let ea = self.find(ea);
                self.pending.push((ea, b));
            }
            return;
        }
        let eb = self.entry(b, inv_col(col));
        if eb != UNDEF {
            if self.find(eb) == a {
                self.set_entry(a, col, b);
                self.set_entry(b, inv_col(col), a);
            } else {
                let eb = self.find(eb);
                self.pending.push((eb, a));
            }
            return;
        }
        self.set_entry(a, col, b);
        self.set_entry(b, inv_col(col), a);
        self.edges_set += 1;
    }

    /// Drains the coincidence queue, merging rows into surviving cosets.
    fn process_pending(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (s, d) = if a < b { (a, b) } else { (b, a) };
            self.rep[d as usize] = s;
            self.live -= 1;
            self.killed += 1;
            self.killed_since_compact += 1;
            for col in 0..self.width as u32 {
                let x = self.entry(d, col);
                if x == UNDEF {
                    continue;
                }
                // Remove both halves of the edge, then re-insert it at the
                // survivor; set_edge re-queues any conflict as a further
                // coincidence.
                self.set_entry(d, col, UNDEF);
                if self.entry(x, inv_col(col)) == d {
                    self.set_entry(x, inv_col(col), UNDEF);
                }
                let xs = self.find(x);
                self.set_edge(s, col, xs);
            }
        }
    }

    /// Scans a relator (or subgroup word) at a live coset.  With
    /// `fill = true` (HLT) undefined edges on the path are defined, up to
    /// the coset cap; with `fill = false` only the closing deduction or
    /// coincidence is applied.
    fn scan(&mut self, c: u32, word: &[u32], fill: bool, cap: usize) -> Result<(), CapHit> {
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = word.len();
        loop {
            while i < j {
                let t = self.entry(f, word[i]);
                if t == UNDEF {
                    break;
                }
                f = self.find(t);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.pending.push((f, b));
                    self.process_pending();
                }
                return Ok(());
            }
            while j > i {
                let t = self.entry(b, inv_col(word[j - 1]));
                if t == UNDEF {
                    break;
                }
                b = self.find(t);
                j -= 1;
            }
            if i == j {
                if f != b {
                    self.pending.push((f, b));
                    self.process_pending();
                }
                return Ok(());
            }
            if j == i + 1 {
                // Deduction: the single missing edge is forced.
                self.set_edge(f, word[i], b);
                self.process_pending();
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            if self.live >= cap {
                return Err(CapHit);
            }
            let n = self.new_coset();
            self.set_edge(f, word[i], n);
            // A fresh coset cannot conflict, so no pending work exists here.
            f = n;
            i += 1;
        }
    }

    /// Lookahead: scan every relator at every live coset without defining
    /// cosets, harvesting deductions and coincidences.
    fn lookahead(&mut self, relator_letters: &[Vec<u32>]) {
        let mut c = 0u32;
        while (c as usize) < self.n_rows() {
            if self.is_live(c) {
                for rel in relator_letters {
                    let cc = self.find(c);
                    if cc != c {
                        break;
                    }
                    let _ = self.scan(cc, rel, false, usize::MAX);
                }
            }
            c += 1;
        }
    }

    /// Renumbers live cosets contiguously, preserving order.  `cursor` is a
    /// live-table position to remap (the HLT scan head).
    fn compact(&mut self, cursor: &mut usize) {
        let mut map: Vec<u32> = vec![UNDEF; self.n_rows()];
        let mut next = 0u32;
        for c in 0..self.n_rows() as u32 {
            if self.is_live(c) {
                map[c as usize] = next;
                next += 1;
            }
        }
        let old_cursor = *cursor;
        *cursor = (0..old_cursor.min(self.n_rows()))
            .filter(|&c| self.is_live(c as u32))
            .count();
        let width = self.width;
        let mut new_table: Vec<u32> = Vec::with_capacity(next as usize * width);
        for c in 0..self.n_rows() as u32 {
            if !self.is_live(c) {
                continue;
            }
            for col in 0..width as u32 {
                let v = self.entry(c, col);
                if v == UNDEF {
                    new_table.push(UNDEF);
                } else {
                    let v = self.find(v);
                    new_table.push(map[v as usize]);
                }
            }
        }
        self.table = new_table;
        self.rep = (0..next).collect();
        self.killed_since_compact = 0;
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words` in
/// the group defined by `pres`.
///
/// The enumeration is deterministic for a fixed strategy.  If it closes,
/// the coset count is exactly the index of the subgroup.  If the coset cap
/// is exceeded, the partial table is returned with [`TcStatus::Capped`] and
/// the defined/killed diagnostics; a capped run proves nothing about the
/// index.
pub fn todd_coxeter(
    pres: &Presentation,
    subgroup_words: &[GenWord],
    opts: &TcOptions,
) -> Result<CosetTable, FpError> {
    for w in subgroup_words {
        if let Some(max) = w.max_generator() {
            if max >= pres.gen_count() {
                return Err(FpError::GeneratorIndex { index: max, count: pres.gen_count() });
            }
        }
    }
    if opts.max_cosets == 0 || opts.max_cosets as u64 >= UNDEF as u64 {
        return Err(FpError::Parse(alloc::format!(
            "coset cap {} out of range",
            opts.max_cosets
        )));
    }

    let width = 2 * pres.gen_count();
    let relator_letters: Vec<Vec<u32>> = pres.relators().iter().map(letters).collect();
    let subgroup_letters: Vec<Vec<u32>> = subgroup_words.iter().map(letters).collect();

    let mut e = Enumerator::new(width);
    let mut capped = false;

    // Subgroup generators fix coset 0: trace each with definitions.
    for w in &subgroup_letters {
        let c0 = e.find(0);
        if e.scan(c0, w, true, opts.max_cosets).is_err() {
            capped = true;
            break;
        }
    }

    if !capped {
        match opts.strategy {
            Strategy::Hlt => hlt_loop(&mut e, &relator_letters, opts, &mut capped),
            Strategy::Felsch => felsch_loop(&mut e, &relator_letters, opts, &mut capped),
        }
    }

    let mut cursor = 0usize;
    e.compact(&mut cursor);

    let status = if capped { TcStatus::Capped } else { TcStatus::Closed };
    if status == TcStatus::Closed {
        debug_assert!(e.table.iter().all(|&v| v != UNDEF));
    }
    Ok(CosetTable {
        pres: pres.clone(),
        subgroup_words: subgroup_words.to_vec(),
        width,
        rows: e.table,
        status,
        defined: e.defined,
        killed: e.killed,
    })
}

fn hlt_loop(
    e: &mut Enumerator,
    relator_letters: &[Vec<u32>],
    opts: &TcOptions,
    capped: &mut bool,
) {
    let mut cursor = 0usize;
    'outer: while cursor < e.n_rows() {
        if !e.is_live(cursor as u32) {
            cursor += 1;
            continue;
        }
        for rel in relator_letters {
            let c = cursor as u32;
            if !e.is_live(c) {
                break;
            }
            if e.scan(c, rel, true, opts.max_cosets).is_err() {
                // At the cap: lookahead, compact, and retry.  Stop if the
                // lookahead freed nothing, or if repeated retries keep
                // defining without converging.
                e.lookahead(relator_letters);
                e.process_pending();
                e.compact(&mut cursor);
                if e.live >= opts.max_cosets
                    || e.defined >= opts.max_cosets.saturating_mul(64)
                {
                    *capped = true;
                    break 'outer;
                }
                continue 'outer;
            }
        }
        // Fill any columns no relator touched, so the closed table is total
        // even for generators that appear in no relator.
        if e.is_live(cursor as u32) {
            for col in 0..e.width as u32 {
                let c = cursor as u32;
                if !e.is_live(c) {
                    break;
                }
                if e.entry(c, col) == UNDEF {
                    if e.live >= opts.max_cosets {
                        e.lookahead(relator_letters);
                        e.process_pending();
                        e.compact(&mut cursor);
                        if e.live >= opts.max_cosets
                            || e.defined >= opts.max_cosets.saturating_mul(64)
                        {
                            *capped = true;
                            break 'outer;
                        }
                        continue 'outer;
                    }
                    let n = e.new_coset();
                    e.set_edge(c, col, n);
                }
            }
        }
        cursor += 1;
        if e.killed_since_compact >= opts.compaction_interval {
            e.compact(&mut cursor);
        }
    }
}

fn felsch_loop(
    e: &mut Enumerator,
    relator_letters: &[Vec<u32>],
    opts: &TcOptions,
    capped: &mut bool,
) {
    loop {
        // Saturate deductions: sweep every relator at every live coset
        // until nothing changes.  Quadratic but dependable at desk scale.
        loop {
            let before = (e.edges_set, e.killed);
            e.lookahead(relator_letters);
            e.process_pending();
            if (e.edges_set, e.killed) == before {
                break;
            }
        }
        // First undefined entry in scan order drives the next definition.
        let mut hole: Option<(u32, u32)> = None;
        'search: for c in 0..e.n_rows() as u32 {
            if !e.is_live(c) {
                continue;
            }
            for col in 0..e.width as u32 {
                if e.entry(c, col) == UNDEF {
                    hole = Some((c, col));
                    break 'search;
                }
            }
        }
        let Some((c, col)) = hole else {
            return; // closed
        };
        if e.live >= opts.max_cosets {
            *capped = true;
            return;
        }
        let n = e.new_coset();
        e.set_edge(c, col, n);
        if e.killed_since_compact >= opts.compaction_interval {
            let mut cursor = 0usize;
            e.compact(&mut cursor);
        }
    }
}
