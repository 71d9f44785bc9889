//! Block group specifications, blockwise subgroups, and block grids.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::AmalgamError;
use crate::gf::{mat_inverse, mat_mul, FMatrix, PrimeField};

/// `|GL_n(p)| = ∏_{i=0}^{n−1} (pⁿ − pⁱ)`.
pub fn gl_order(p: u64, n: usize) -> BigUint {
    let p = BigUint::from(p);
    let pn = p.pow(n as u32);
    let mut order = BigUint::from(1u32);
    let mut pi = BigUint::from(1u32);
    for _ in 0..n {
        order *= &pn - &pi;
        pi *= &p;
    }
    order
}

/// Shape of a block-diagonal matrix group `GL_{n₁}(p) × … × GL_{n_k}(p)`:
/// the field and the ordered list of block sizes.  A size-1 block is a
/// scalar factor `F*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockGroupSpec {
    field: PrimeField,
    sizes: Vec<usize>,
}

impl BlockGroupSpec {
    /// Builds a spec over GF(p) with the given ordered block sizes.
    pub fn new(p: u64, sizes: &[usize]) -> Result<Self, AmalgamError> {
        let field = PrimeField::new(p)?;
        if sizes.is_empty() {
            return Err(AmalgamError::EmptyShape);
        }
        if let Some(index) = sizes.iter().position(|&n| n == 0) {
            return Err(AmalgamError::BadBlockSize { index });
        }
        Ok(BlockGroupSpec { field, sizes: sizes.to_vec() })
    }

    /// The coefficient field.
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The ordered block sizes.
    pub fn block_sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.sizes.len()
    }

    /// Total matrix dimension, the sum of the block sizes.
    pub fn dimension(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Order of the full block group, `∏ᵢ |GL_{nᵢ}(p)|`.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::from(1u32);
        for &n in &self.sizes {
            order *= gl_order(self.field.p(), n);
        }
        order
    }

    /// Identity element, one identity matrix per block.
    pub fn identity(&self) -> Vec<FMatrix> {
        self.sizes.iter().map(|&n| FMatrix::identity(self.field, n)).collect()
    }
}

/// True if every off-diagonal entry is zero (the matrix must be square).
pub(crate) fn is_diagonal(m: &FMatrix) -> bool {
    let n = m.rows();
    m.is_square()
        && (0..n).all(|i| (0..n).all(|j| i == j || m.get(i, j) == 0))
}

/// Flattens a blockwise element into a single comparable entry vector.
pub(crate) fn flatten(blocks: &[FMatrix]) -> Vec<u64> {
    let mut out = Vec::new();
    for b in blocks {
        out.extend_from_slice(b.entries());
    }
    out
}

/// A subgroup of a block group, given by generators stored blockwise: one
/// invertible matrix per block per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagSubgroup {
    spec: BlockGroupSpec,
    generators: Vec<Vec<FMatrix>>,
}

impl DiagSubgroup {
    /// Builds a subgroup from blockwise generators, validating that every
    /// generator conforms to the spec's block shape and that every block is
    /// invertible.
    pub fn new(
        spec: BlockGroupSpec,
        generators: Vec<Vec<FMatrix>>,
    ) -> Result<Self, AmalgamError> {
        for (g, blocks) in generators.iter().enumerate() {
            if blocks.len() != spec.block_count() {
                return Err(AmalgamError::BlockCount {
                    generator: g,
                    expected: spec.block_count(),
                    got: blocks.len(),
                });
            }
            for (b, m) in blocks.iter().enumerate() {
                if m.field() != spec.field() {
                    return Err(AmalgamError::FieldMismatch {
                        left: spec.field().p(),
                        right: m.field().p(),
                    });
                }
                let n = spec.block_sizes()[b];
                if m.rows() != n || m.cols() != n {
                    return Err(AmalgamError::BlockShape {
                        generator: g,
                        block: b,
                        expected: n,
                        rows: m.rows(),
                        cols: m.cols(),
                    });
                }
                if mat_inverse(m).is_err() {
                    return Err(AmalgamError::NotInvertible { generator: g, block: b });
                }
            }
        }
        Ok(DiagSubgroup { spec, generators })
    }

    /// Builds a subgroup whose generators are diagonal matrices, one flat
    /// diagonal (of length `spec.dimension()`) per generator.
    pub fn from_diagonals(
        spec: BlockGroupSpec,
        diagonals: &[Vec<u64>],
    ) -> Result<Self, AmalgamError> {
        let mut generators = Vec::with_capacity(diagonals.len());
        for (g, d) in diagonals.iter().enumerate() {
            if d.len() != spec.dimension() {
                return Err(AmalgamError::BlockCount {
                    generator: g,
                    expected: spec.dimension(),
                    got: d.len(),
                });
            }
            let mut blocks = Vec::with_capacity(spec.block_count());
            let mut off = 0;
            for &n in spec.block_sizes() {
                blocks.push(FMatrix::diagonal(spec.field(), &d[off..off + n])?);
                off += n;
            }
            generators.push(blocks);
        }
        DiagSubgroup::new(spec, generators)
    }

    /// The trivial subgroup (no generators).
    pub fn trivial(spec: BlockGroupSpec) -> DiagSubgroup {
        DiagSubgroup { spec, generators: Vec::new() }
    }

    /// The owning block group spec.
    pub fn spec(&self) -> &BlockGroupSpec {
        &self.spec
    }

    /// The blockwise generators.
    pub fn generators(&self) -> &[Vec<FMatrix>] {
        &self.generators
    }

    /// True if every generator block is diagonal (hence every element is).
    pub fn is_diagonal(&self) -> bool {
        self.generators.iter().all(|blocks| blocks.iter().all(is_diagonal))
    }

    /// Enumerates all subgroup elements by breadth-first closure under
    /// right multiplication by the generators, identity first.  The order
    /// is deterministic for a fixed generator list.  Errors when the
    /// element count would exceed `budget`.
    pub fn enumerate(&self, budget: usize) -> Result<Vec<Vec<FMatrix>>, AmalgamError> {
        let id = self.spec.identity();
        let mut seen = BTreeSet::new();
        seen.insert(flatten(&id));
        let mut elements = vec![id];
        let mut head = 0;
        while head < elements.len() {
            for g in 0..self.generators.len() {
                let next: Vec<FMatrix> = elements[head]
                    .iter()
                    .zip(&self.generators[g])
                    .map(|(a, b)| mat_mul(a, b))
                    .collect::<Result<_, _>>()?;
                if seen.insert(flatten(&next)) {
                    if elements.len() == budget {
                        return Err(AmalgamError::EnumerationBudget { budget });
                    }
                    elements.push(next);
                }
            }
            head += 1;
        }
        Ok(elements)
    }

    /// The subgroup order, by enumeration.
    pub fn order(&self, budget: usize) -> Result<BigUint, AmalgamError> {
        Ok(BigUint::from(self.enumerate(budget)?.len()))
    }
}

/// Zero/nonzero sparsity of a matrix partitioned into a square grid of
/// blocks; `true` marks a (potentially) nonzero block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPattern {
    size: usize,
    flags: Vec<bool>,
}

impl BlockPattern {
    /// Builds a pattern from rows of flags, validating squareness.
    pub fn new(rows: &[Vec<bool>]) -> Result<Self, AmalgamError> {
        let size = rows.len();
        let mut flags = Vec::with_capacity(size * size);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(AmalgamError::PatternShape {
                    row: i,
                    expected: size,
                    got: r.len(),
                });
            }
            flags.extend_from_slice(r);
        }
        Ok(BlockPattern { size, flags })
    }

    /// Grid side length.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Whether block `(i, j)` may be nonzero.
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.size && j < self.size, "pattern index out of range");
        self.flags[i * self.size + j]
    }

    /// Number of (potentially) nonzero blocks.
    pub fn nonzero_count(&self) -> usize {
        self.flags.iter().filter(|&&b| b).count()
    }
}

/// A square grid of optional matrix blocks: entry `(i, j)` is either a
/// concrete `dims[i] × dims[j]` matrix or structurally zero.
#[derive(Clone, Debug)]
pub struct BlockGrid {
    field: PrimeField,
    dims: Vec<usize>,
    slots: Vec<Option<FMatrix>>,
}

impl BlockGrid {
    /// Builds a grid, validating that `entries` is `dims.len()` rows of
    /// `dims.len()` optional blocks and that every present block has shape
    /// `dims[i] × dims[j]` over `field`.
    pub fn new(
        field: PrimeField,
        dims: &[usize],
        entries: Vec<Vec<Option<FMatrix>>>,
    ) -> Result<Self, AmalgamError> {
        let k = dims.len();
        if k == 0 {
            return Err(AmalgamError::EmptyShape);
        }
        if let Some(index) = dims.iter().position(|&n| n == 0) {
            return Err(AmalgamError::BadBlockSize { index });
        }
        if entries.len() != k {
            return Err(AmalgamError::GridShape(format!(
                "{} rows supplied, {} blocks declared",
                entries.len(),
                k
            )));
        }
        let mut slots = Vec::with_capacity(k * k);
        for (i, row) in entries.into_iter().enumerate() {
            if row.len() != k {
                return Err(AmalgamError::GridShape(format!(
                    "row {i} has {} entries, {} blocks declared",
                    row.len(),
                    k
                )));
            }
            for (j, slot) in row.into_iter().enumerate() {
                if let Some(m) = &slot {
                    if m.field() != field {
                        return Err(AmalgamError::FieldMismatch {
                            left: field.p(),
                            right: m.field().p(),
                        });
                    }
                    if m.rows() != dims[i] || m.cols() != dims[j] {
                        return Err(AmalgamError::GridShape(format!(
                            "block ({i}, {j}) is {}×{}, dims require {}×{}",
                            m.rows(),
                            m.cols(),
                            dims[i],
                            dims[j]
                        )));
                    }
                }
                slots.push(slot);
            }
        }
        Ok(BlockGrid { field, dims: dims.to_vec(), slots })
    }

    /// The coefficient field.
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The block dimensions.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of blocks per side.
    pub fn block_count(&self) -> usize {
        self.dims.len()
    }

    /// The block at `(i, j)`, or `None` for a structural zero.
    pub fn get(&self, i: usize, j: usize) -> Option<&FMatrix> {
        assert!(i < self.dims.len() && j < self.dims.len(), "grid index out of range");
        self.slots[i * self.dims.len() + j].as_ref()
    }

    /// The zero/nonzero sparsity pattern of the grid.
    pub fn pattern(&self) -> BlockPattern {
        let k = self.dims.len();
        let flags = self.slots.iter().map(|s| s.is_some()).collect();
        BlockPattern { size: k, flags }
    }

    /// Assembles the grid into one dense matrix.
    pub fn assemble(&self) -> FMatrix {
        let n: usize = self.dims.iter().sum();
        let mut offsets = Vec::with_capacity(self.dims.len());
        let mut off = 0;
        for &d in &self.dims {
            offsets.push(off);
            off += d;
        }
        let mut out = FMatrix::zeros(self.field, n, n);
        for i in 0..self.dims.len() {
            for j in 0..self.dims.len() {
                if let Some(m) = self.get(i, j) {
                    for r in 0..m.rows() {
                        for c in 0..m.cols() {
                            out.set(offsets[i] + r, offsets[j] + c, m.get(r, c));
                        }
                    }
                }
            }
        }
        out
    }
}
