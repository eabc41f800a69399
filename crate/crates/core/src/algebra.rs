//! The algebra family: linearly oriented `A_n` quivers bound by monomial
//! zero-relations, together with the `cap` function and the
//! projective/injective/simple constructors everything else consumes.
//!
//! Vertices are `1..=n`, the arrow `alpha_v` points `v -> v+1` and exists for
//! `v = 1..=n-1`. A relation is a composition of consecutive arrows that is
//! declared zero in the path algebra.

use crate::error::{Error, Result};
use crate::indec::IntervalModule;
use std::fmt;

/// One monomial zero-relation: the composite of `arrows` consecutive arrows
/// starting with `alpha_start`.
///
/// "Length" here counts arrows, so an admissible relation has `arrows >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    /// Vertex where the relation starts (1-based).
    pub start: usize,
    /// Number of composed arrows.
    pub arrows: usize,
}

impl Relation {
    pub fn new(start: usize, arrows: usize) -> Self {
        Relation { start, arrows }
    }

    /// Index of the last arrow in the relation; also the largest vertex
    /// reachable from `start` by a nonzero path once this relation applies.
    pub fn cap(&self) -> usize {
        self.start + self.arrows - 1
    }

    /// Arrow span `start..=cap()` contains the other relation's span.
    fn contains_span(&self, other: &Relation) -> bool {
        self.start <= other.start && other.cap() <= self.cap()
    }

    fn check_admissible(&self, n: usize) -> Result<()> {
        if self.arrows < 2 {
            return Err(Error::RelationTooShort { start: self.start, arrows: self.arrows });
        }
        if self.start < 1 || self.start + self.arrows > n {
            return Err(Error::RelationOutOfRange { start: self.start, arrows: self.arrows, n });
        }
        Ok(())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.arrows)
    }
}

/// Reduce a relation list to the unique minimal generating set: sorted by
/// start, with a relation dropped iff some other relation's arrow span is
/// contained in its own (the contained one already forces the longer path to
/// vanish).
///
/// The result has strictly increasing starts and strictly increasing caps.
pub fn normalize_relations(relations: &[Relation]) -> Result<Vec<Relation>> {
    let mut sorted = relations.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateRelation { start: w[0].start, arrows: w[0].arrows });
        }
    }
    let kept: Vec<Relation> = sorted
        .iter()
        .filter(|r| !sorted.iter().any(|other| *other != **r && r.contains_span(other)))
        .copied()
        .collect();
    // Minimality leaves caps strictly increasing along strictly increasing starts.
    debug_assert!(kept.windows(2).all(|w| w[0].start < w[1].start && w[0].cap() < w[1].cap()));
    Ok(kept)
}

/// A Nakayama algebra presented by its vertex count and a minimal, sorted
/// relation list. Immutable after construction; `cap` values are precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NakayamaAlgebra {
    n: usize,
    relations: Vec<Relation>,
    /// `caps[v-1]` = largest vertex reachable from `v` by a nonzero path.
    caps: Vec<usize>,
}

impl NakayamaAlgebra {
    /// Build from an already-minimal relation list; rejects unsorted or
    /// non-minimal input instead of fixing it.
    pub fn new(n: usize, relations: Vec<Relation>) -> Result<Self> {
        Self::build(n, relations, false)
    }

    /// Build after normalizing: redundant relations (whose arrow span contains
    /// another relation's span) are dropped first.
    pub fn normalized(n: usize, relations: Vec<Relation>) -> Result<Self> {
        Self::build(n, relations, true)
    }

    fn build(n: usize, relations: Vec<Relation>, auto_normalize: bool) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidPresetParams("vertex count must be at least 1".into()));
        }
        for r in &relations {
            r.check_admissible(n)?;
        }
        let relations = if auto_normalize {
            normalize_relations(&relations)?
        } else {
            for w in relations.windows(2) {
                if w[0].start >= w[1].start || w[0].cap() >= w[1].cap() {
                    return Err(Error::NonMinimalSet(format!(
                        "relations {} and {} must have strictly increasing starts and caps",
                        w[0], w[1]
                    )));
                }
            }
            relations
        };
        let caps = compute_caps(n, &relations);
        Ok(NakayamaAlgebra { n, relations, caps })
    }

    /// Hereditary case: no relations.
    pub fn linear(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn preset(p: &AlgebraPreset) -> Result<Self> {
        p.build()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Number of relations (the `k` of the block decomposition).
    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    /// Largest vertex reachable from `v` by a nonzero path: the smallest cap
    /// among relations starting at or after `v`, or `n` when no relation
    /// applies. Monotone non-decreasing in `v`.
    pub fn cap(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.caps[v - 1])
    }

    /// `cap` without the range check, for hot loops over known-valid vertices.
    pub(crate) fn cap_unchecked(&self, v: usize) -> usize {
        self.caps[v - 1]
    }

    /// Smallest vertex `c` with a nonzero path `c -> v`; the top of the
    /// injective envelope of the simple at `v`.
    pub fn soc_start(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        // caps are sorted, so the first c with cap(c) >= v is a prefix boundary.
        Ok(self.caps.partition_point(|&c| c < v) + 1)
    }

    /// Indecomposable projective at `v`: the interval `[v, cap(v)]`.
    pub fn projective(&self, v: usize) -> Result<IntervalModule> {
        Ok(IntervalModule::new(v, self.cap(v)?))
    }

    /// Indecomposable injective at `v`: the interval `[soc_start(v), v]`.
    pub fn injective(&self, v: usize) -> Result<IntervalModule> {
        Ok(IntervalModule::new(self.soc_start(v)?, v))
    }

    /// Simple at `v`: the interval `[v, v]`.
    pub fn simple(&self, v: usize) -> Result<IntervalModule> {
        self.check_vertex(v)?;
        Ok(IntervalModule::new(v, v))
    }

    /// An interval `[a,b]` is a module of this algebra iff `1 <= a <= b <= n`
    /// and `b <= cap(a)`.
    pub fn is_module(&self, m: IntervalModule) -> bool {
        m.a >= 1 && m.a <= m.b && m.b <= self.n && m.b <= self.caps[m.a - 1]
    }

    pub fn check_module(&self, m: IntervalModule) -> Result<()> {
        if self.is_module(m) {
            Ok(())
        } else {
            Err(Error::NotAModule { a: m.a, b: m.b })
        }
    }

    /// Block boundaries `i_0 = 0 < i_1 < ... < i_k < i_{k+1} = n` together
    /// with `p_j = arrows_j - 1` and the convention `p_{k+1} = 0`. These are
    /// the quantities the closed counting formulas range over.
    pub fn block_data(&self) -> BlockData {
        let k = self.relations.len();
        let mut starts = Vec::with_capacity(k + 2);
        let mut lengths = Vec::with_capacity(k + 2);
        starts.push(0);
        lengths.push(0); // placeholder so lengths[j] pairs with starts[j]
        for r in &self.relations {
            starts.push(r.start as i128);
            lengths.push(r.arrows as i128 - 1);
        }
        starts.push(self.n as i128);
        lengths.push(0);
        BlockData { starts, lengths }
    }

    /// Parse the algebra text format:
    /// `n=<int>[; rel=<start>:<arrows>,...][; preset=linear|single:<s>,<m>|rad:<k>|auslander:<m>]`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut rel: Option<Vec<Relation>> = None;
        let mut preset: Option<String> = None;
        for field in text.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("field '{field}' is not key=value")))?;
            match key.trim() {
                "n" => {
                    n = Some(parse_int(value.trim(), "n")?);
                }
                "rel" => {
                    rel = Some(parse_relation_list(value.trim())?);
                }
                "preset" => {
                    preset = Some(value.trim().to_string());
                }
                other => return Err(Error::Parse(format!("unknown field '{other}'"))),
            }
        }
        if rel.is_some() && preset.is_some() {
            return Err(Error::Parse("give either rel= or preset=, not both".into()));
        }
        if let Some(p) = preset {
            let preset = AlgebraPreset::parse(&p, n)?;
            let alg = preset.build()?;
            if let Some(n) = n {
                if alg.n() != n {
                    return Err(Error::Parse(format!(
                        "n={} conflicts with preset (expects n={})",
                        n,
                        alg.n()
                    )));
                }
            }
            return Ok(alg);
        }
        let n = n.ok_or_else(|| Error::Parse("missing n=".into()))?;
        NakayamaAlgebra::new(n, rel.unwrap_or_default())
    }
}

/// Canonical text form, `n=<n>; rel=<start>:<arrows>,...`; parses back via
/// [`NakayamaAlgebra::parse`].
impl fmt::Display for NakayamaAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
            write!(f, "; rel={}", rels.join(","))?;
        }
        Ok(())
    }
}

/// Relation starts and lengths with the index conventions baked in:
/// `starts[0] = 0`, `starts[k+1] = n`, `lengths[k+1] = 0`, and for
/// `1 <= j <= k` the entries describe the j-th relation (`lengths[j]` is its
/// arrow count minus one).
#[derive(Debug, Clone)]
pub struct BlockData {
    pub starts: Vec<i128>,
    pub lengths: Vec<i128>,
}

impl BlockData {
    /// Number of relations.
    pub fn k(&self) -> usize {
        self.starts.len() - 2
    }
}

fn compute_caps(n: usize, relations: &[Relation]) -> Vec<usize> {
    // With strictly increasing starts and caps, the binding relation for v is
    // the first one starting at or after v.
    let mut caps = vec![n; n];
    let mut idx = relations.len();
    for v in (1..=n).rev() {
        while idx > 0 && relations[idx - 1].start >= v {
            idx -= 1;
        }
        if idx < relations.len() {
            caps[v - 1] = relations[idx].cap();
        }
    }
    caps
}

fn parse_int(s: &str, what: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::Parse(format!("invalid {what} value '{s}'")))
}

fn parse_relation_list(s: &str) -> Result<Vec<Relation>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|item| {
            let item = item.trim();
            let (start, arrows) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("relation '{item}' is not start:arrows")))?;
            Ok(Relation::new(parse_int(start, "relation start")?, parse_int(arrows, "relation arrows")?))
        })
        .collect()
}

/// The named families used throughout the tables and closed formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraPreset {
    /// No relations (hereditary).
    Linear { n: usize },
    /// One relation of `length` arrows starting at `start`.
    Single { n: usize, start: usize, length: usize },
    /// All relations of `k` arrows: radical-power-zero.
    RadPower { n: usize, k: usize },
    /// The Auslander algebra of a radical-square-zero `A_m`: `n = 2m-1` with
    /// two-arrow relations at the odd vertices `1, 3, ..., 2m-3`.
    Auslander { m: usize },
}

impl AlgebraPreset {
    pub fn build(&self) -> Result<NakayamaAlgebra> {
        match *self {
            AlgebraPreset::Linear { n } => NakayamaAlgebra::linear(n),
            AlgebraPreset::Single { n, start, length } => {
                if length < 2 || start < 1 || start + length > n {
                    return Err(Error::InvalidPresetParams(format!(
                        "single relation {start}:{length} does not fit in A_{n}"
                    )));
                }
                NakayamaAlgebra::new(n, vec![Relation::new(start, length)])
            }
            AlgebraPreset::RadPower { n, k } => {
                if k < 2 || k >= n {
                    return Err(Error::InvalidPresetParams(format!(
                        "rad-power requires 2 <= k < n, got k={k}, n={n}"
                    )));
                }
                let rels = (1..=n - k).map(|i| Relation::new(i, k)).collect();
                NakayamaAlgebra::new(n, rels)
            }
            AlgebraPreset::Auslander { m } => {
                if m < 2 {
                    return Err(Error::InvalidPresetParams(format!(
                        "auslander preset requires m >= 2, got m={m}"
                    )));
                }
                let n = 2 * m - 1;
                let rels = (1..m).map(|j| Relation::new(2 * j - 1, 2)).collect();
                NakayamaAlgebra::new(n, rels)
            }
        }
    }

    /// Parse the preset syntax used in the text format and on the CLI:
    /// `linear | single:<start>,<length> | rad:<k> | auslander:<m>`.
    /// `n` is taken from context where the preset itself does not fix it.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let (name, args) = match text.split_once(':') {
            Some((name, args)) => (name.trim(), Some(args.trim())),
            None => (text.trim(), None),
        };
        let need_n = || n.ok_or_else(|| Error::Parse(format!("preset '{name}' needs n=")));
        match (name, args) {
            ("linear", None) => Ok(AlgebraPreset::Linear { n: need_n()? }),
            ("single", Some(args)) => {
                let (s, m) = args
                    .split_once(',')
                    .ok_or_else(|| Error::Parse("single preset wants single:<start>,<length>".into()))?;
                Ok(AlgebraPreset::Single {
                    n: need_n()?,
                    start: parse_int(s.trim(), "single start")?,
                    length: parse_int(m.trim(), "single length")?,
                })
            }
            ("rad", Some(k)) => Ok(AlgebraPreset::RadPower { n: need_n()?, k: parse_int(k, "rad k")? }),
            ("auslander", Some(m)) => Ok(AlgebraPreset::Auslander { m: parse_int(m, "auslander m")? }),
            _ => Err(Error::Parse(format!("unknown preset '{text}'"))),
        }
    }
}
