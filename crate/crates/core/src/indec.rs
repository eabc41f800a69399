//! Enumeration of the indecomposable modules.
//!
//! Over a linearly oriented bound `A_n` quiver every indecomposable is
//! uniserial, hence an interval `[a,b]`; it exists iff `b <= cap(a)`. The
//! modules starting at a fixed vertex form a block, and the blocks partition
//! the whole list.

use crate::algebra::NakayamaAlgebra;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An interval module `[a,b]`: the top sits at vertex `a`, the socle at `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntervalModule {
    pub a: usize,
    pub b: usize,
}

impl IntervalModule {
    pub fn new(a: usize, b: usize) -> Self {
        IntervalModule { a, b }
    }

    /// Number of vertices carrying the field, i.e. the total dimension.
    pub fn dim(&self) -> usize {
        self.b - self.a + 1
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.a <= v && v <= self.b
    }
}

impl fmt::Display for IntervalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// All indecomposables of an algebra in lexicographic order, partitioned into
/// the per-start blocks `{[l,l], ..., [l,cap(l)]}`.
#[derive(Debug, Clone)]
pub struct ModuleSet {
    modules: Vec<IntervalModule>,
    /// `block_offsets[l-1]..block_offsets[l]` indexes the block of vertex `l`.
    block_offsets: Vec<usize>,
}

impl ModuleSet {
    pub fn modules(&self) -> &[IntervalModule] {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = IntervalModule> + '_ {
        self.modules.iter().copied()
    }

    /// The block of modules with top at `l` (1-based vertex).
    pub fn block(&self, l: usize) -> &[IntervalModule] {
        &self.modules[self.block_offsets[l - 1]..self.block_offsets[l]]
    }

    pub fn vertex_count(&self) -> usize {
        self.block_offsets.len() - 1
    }

    /// Position of `[a,b]` in the lexicographic list, if it is a module.
    pub fn index_of(&self, m: IntervalModule) -> Option<usize> {
        if m.a < 1 || m.a > self.vertex_count() {
            return None;
        }
        let block = self.block(m.a);
        (m.b >= m.a && m.b < m.a + block.len()).then(|| self.block_offsets[m.a - 1] + (m.b - m.a))
    }
}

/// List every interval `[a,b]` with `a <= b <= cap(a)`, lexicographically.
pub fn enumerate_indecomposables(alg: &NakayamaAlgebra) -> ModuleSet {
    let n = alg.n();
    let mut modules = Vec::new();
    let mut block_offsets = Vec::with_capacity(n + 1);
    block_offsets.push(0);
    for a in 1..=n {
        let cap = alg.cap_unchecked(a);
        for b in a..=cap {
            modules.push(IntervalModule::new(a, b));
        }
        block_offsets.push(modules.len());
    }
    ModuleSet { modules, block_offsets }
}

/// Closed count of indecomposables:
/// `sum_j (i_j - i_{j-1}) * (i_j + p_j) - n(n-1)/2` over the blocks, with the
/// conventions `i_0 = 0`, `i_{k+1} = n`, `p_{k+1} = 0`.
pub fn count_indecomposables_formula(alg: &NakayamaAlgebra) -> u64 {
    let data = alg.block_data();
    let n = alg.n() as i128;
    let mut total: i128 = 0;
    for j in 1..data.starts.len() {
        let width = data.starts[j] - data.starts[j - 1];
        let cap = data.starts[j] + data.lengths[j];
        total = total.checked_add(width.checked_mul(cap).expect("overflow")).expect("overflow");
    }
    total -= n * (n - 1) / 2;
    debug_assert!(total >= 0);
    total as u64
}

/// The block `{[l,l], ..., [l,cap(l)]}` for one vertex.
pub fn block_of(alg: &NakayamaAlgebra, l: usize) -> Result<Vec<IntervalModule>> {
    let cap = alg.cap(l).map_err(|_| Error::VertexOutOfRange { v: l, n: alg.n() })?;
    Ok((l..=cap).map(|b| IntervalModule::new(l, b)).collect())
}
