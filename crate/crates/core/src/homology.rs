//! Combinatorial Hom/Ext machinery for interval modules.
//!
//! Everything here runs on interval endpoints alone: the Hom criterion, the
//! syzygy recursion for projective resolutions, the three-Hom window that
//! locates the unique nonzero Ext degree, and the closed per-module counts.
//! The `oracle` module recomputes all of it from explicit matrices; the two
//! paths are compared in tests and never share code.

use crate::algebra::NakayamaAlgebra;
use crate::error::{Error, Result};
use crate::indec::{enumerate_indecomposables, IntervalModule, ModuleSet};

/// Hom criterion on endpoints: a nonzero map `[a,b] -> [c,d]` exists iff
/// `c <= a <= d <= b` (the image is then the interval `[a,d]`).
pub fn hom_nonzero(m: IntervalModule, n: IntervalModule) -> bool {
    n.a <= m.a && m.a <= n.b && n.b <= m.b
}

/// Dimension of `Hom(M, N)`, always 0 or 1 for interval modules.
pub fn hom_dim(alg: &NakayamaAlgebra, m: IntervalModule, n: IntervalModule) -> Result<u8> {
    alg.check_module(m)?;
    alg.check_module(n)?;
    Ok(hom_nonzero(m, n) as u8)
}

/// Number of modules `M` with `Hom(M, [a,b])` nonzero:
/// `sum_{v=a}^{b} cap(v) + (b-a+1)(1-b)`.
pub fn hom_in_count(alg: &NakayamaAlgebra, target: IntervalModule) -> Result<u64> {
    alg.check_module(target)?;
    let (a, b) = (target.a as i128, target.b as i128);
    let mut total: i128 = 0;
    for v in target.a..=target.b {
        total += alg.cap_unchecked(v) as i128;
    }
    total += (b - a + 1) * (1 - b);
    debug_assert!(total >= 0);
    Ok(total as u64)
}

/// A minimal projective resolution recorded as its sequence of interval
/// projectives `P_0, ..., P_m`.
///
/// The terms satisfy `a_0 = a`, `b_t = cap(a_t)`, `a_1 = b + 1`, and
/// `a_{t+1} = b_{t-1} + 1` for `t >= 1`; the resolution ends when a syzygy is
/// itself projective, which forces `b_m = b_{m-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveResolution {
    terms: Vec<IntervalModule>,
}

impl ProjectiveResolution {
    pub fn terms(&self) -> &[IntervalModule] {
        &self.terms
    }

    /// Projective dimension `m` (0 for projective modules).
    pub fn dimension(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, t: usize) -> IntervalModule {
        self.terms[t]
    }
}

/// Resolve `[a,b]` by iterating syzygies: cover the current interval by the
/// projective at its top, cut off the covered part, repeat. Each syzygy is
/// again an interval, so the whole resolution is determined by endpoints.
pub fn projective_resolution(alg: &NakayamaAlgebra, m: IntervalModule) -> Result<ProjectiveResolution> {
    alg.check_module(m)?;
    Ok(resolve_unchecked(alg, m))
}

fn resolve_unchecked(alg: &NakayamaAlgebra, m: IntervalModule) -> ProjectiveResolution {
    let mut terms = Vec::new();
    let cap = alg.cap_unchecked(m.a);
    terms.push(IntervalModule::new(m.a, cap));
    // syzygy [x, y]: kernel of the previous cover
    let mut x = m.b + 1;
    let mut y = cap;
    while x <= y {
        let cap = alg.cap_unchecked(x);
        terms.push(IntervalModule::new(x, cap));
        x = y + 1;
        y = cap;
    }
    ProjectiveResolution { terms }
}

/// The unique degree `i >= 1` with `Ext^i(M, N)` nonzero, if any: the window
/// on the resolution of `M` where `Hom(P_i, N)` is nonzero but both
/// neighbours vanish.
pub fn ext_nonzero_degree(
    alg: &NakayamaAlgebra,
    m: IntervalModule,
    n: IntervalModule,
) -> Result<Option<usize>> {
    alg.check_module(n)?;
    let res = projective_resolution(alg, m)?;
    Ok(ext_degree_in(&res, n))
}

/// Window search against a precomputed resolution.
pub fn ext_degree_in(res: &ProjectiveResolution, n: IntervalModule) -> Option<usize> {
    let terms = res.terms();
    let m = res.dimension();
    (1..=m).find(|&i| {
        hom_nonzero(terms[i], n)
            && !hom_nonzero(terms[i - 1], n)
            && (i == m || !hom_nonzero(terms[i + 1], n))
    })
}

/// Number of modules `N` with `Ext^i([a,b], N)` nonzero for some `i >= 1`:
/// `a_m(b_m+1) - a(b+1) + sum_i (2 a_i a_{i-1} - a_i^2 - a_{i-1}(b_{i-1}+1))`
/// over the resolution; 0 for projectives.
pub fn ext_out_count(alg: &NakayamaAlgebra, m: IntervalModule) -> Result<u64> {
    alg.check_module(m)?;
    let res = resolve_unchecked(alg, m);
    Ok(ext_out_count_in(&res, m))
}

pub(crate) fn ext_out_count_in(res: &ProjectiveResolution, module: IntervalModule) -> u64 {
    let terms = res.terms();
    let last = terms[terms.len() - 1];
    let mut total =
        (last.a as i128) * (last.b as i128 + 1) - (module.a as i128) * (module.b as i128 + 1);
    for i in 1..terms.len() {
        let (ai, prev) = (terms[i].a as i128, terms[i - 1]);
        let (ap, bp) = (prev.a as i128, prev.b as i128);
        total += 2 * ai * ap - ai * ai - ap * (bp + 1);
    }
    debug_assert!(total >= 0);
    total as u64
}

/// Count of intervals `[c,d]` with `Hom([a1,b1],.) = 0`,
/// `Hom([a2,b2],.) != 0`, `Hom([a3,b3],.) = 0`, given the resolution-shaped
/// ordering `a1 <= a2 <= b1 <= a3 <= b2 <= b3`:
/// `a1(a2 - (b1+1)) + a2(a3 - a2)`.
///
/// The value is plain arithmetic and may go negative on degenerate inputs
/// that still satisfy the ordering; callers use it on resolution triples,
/// where it counts genuine modules.
pub fn interval_count_three(
    a1: usize,
    b1: usize,
    a2: usize,
    b2: usize,
    a3: usize,
    b3: usize,
) -> Result<i64> {
    if !(a1 <= a2 && a2 <= b1 && b1 <= a3 && a3 <= b2 && b2 <= b3) {
        return Err(Error::PreconditionViolated(format!(
            "need a1 <= a2 <= b1 <= a3 <= b2 <= b3, got ({a1},{b1}), ({a2},{b2}), ({a3},{b3})"
        )));
    }
    let (a1, b1, a2, a3) = (a1 as i64, b1 as i64, a2 as i64, a3 as i64);
    Ok(a1 * (a2 - (b1 + 1)) + a2 * (a3 - a2))
}

/// Count of intervals `[c,d]` with `Hom([a1,b1],.) = 0` and
/// `Hom([a2,b1],.) != 0`, given `a1 <= a2 <= b1`: `(a2 - a1)(b1 + 1 - a2)`.
/// The boundary `a2 = b1 + 1` is admitted and counts zero intervals.
pub fn interval_count_two(a1: usize, b1: usize, a2: usize) -> Result<i64> {
    if !(a1 <= a2 && a2 <= b1 + 1) {
        return Err(Error::PreconditionViolated(format!(
            "need a1 <= a2 <= b1 + 1, got a1={a1}, a2={a2}, b1={b1}"
        )));
    }
    let (a1, b1, a2) = (a1 as i64, b1 as i64, a2 as i64);
    Ok((a2 - a1) * (b1 + 1 - a2))
}

/// Resolutions for every indecomposable of one algebra, built once and then
/// shared read-only. Indexed in the module set's lexicographic order.
#[derive(Debug, Clone)]
pub struct ResolutionTable {
    modules: ModuleSet,
    resolutions: Vec<ProjectiveResolution>,
}

impl ResolutionTable {
    pub fn new(alg: &NakayamaAlgebra) -> Self {
        let modules = enumerate_indecomposables(alg);
        let resolutions = modules.iter().map(|m| resolve_unchecked(alg, m)).collect();
        ResolutionTable { modules, resolutions }
    }

    pub fn modules(&self) -> &ModuleSet {
        &self.modules
    }

    pub fn resolution_of(&self, m: IntervalModule) -> Option<&ProjectiveResolution> {
        self.modules.index_of(m).map(|i| &self.resolutions[i])
    }

    pub fn resolution(&self, index: usize) -> &ProjectiveResolution {
        &self.resolutions[index]
    }

    pub fn ext_degree(&self, m: IntervalModule, n: IntervalModule) -> Option<usize> {
        self.resolution_of(m).and_then(|res| ext_degree_in(res, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraPreset;

    fn iv(a: usize, b: usize) -> IntervalModule {
        IntervalModule::new(a, b)
    }

    fn rad2(n: usize) -> NakayamaAlgebra {
        AlgebraPreset::RadPower { n, k: 2 }.build().unwrap()
    }

    #[test]
    fn hom_dim_examples() {
        let alg = NakayamaAlgebra::linear(5).unwrap();
        assert_eq!(hom_dim(&alg, iv(2, 4), iv(1, 3)).unwrap(), 1);
        assert_eq!(hom_dim(&alg, iv(2, 4), iv(2, 4)).unwrap(), 1);
        assert_eq!(hom_dim(&alg, iv(1, 2), iv(4, 5)).unwrap(), 0);
        assert_eq!(
            hom_dim(&rad2(5), iv(1, 3), iv(1, 1)).unwrap_err(),
            Error::NotAModule { a: 1, b: 3 }
        );
    }

    #[test]
    fn hom_in_count_matches_direct_enumeration() {
        // Frozen from the enumeration oracle: sources of a nonzero map into
        // the target are the [x,y] with a <= x <= b <= y.
        assert_eq!(hom_in_count(&NakayamaAlgebra::linear(5).unwrap(), iv(2, 3)).unwrap(), 6);
        assert_eq!(hom_in_count(&NakayamaAlgebra::linear(3).unwrap(), iv(3, 3)).unwrap(), 1);
        assert_eq!(hom_in_count(&rad2(4), iv(1, 1)).unwrap(), 2);
    }

    #[test]
    fn resolution_examples() {
        let linear5 = NakayamaAlgebra::linear(5).unwrap();
        let res = projective_resolution(&linear5, iv(2, 3)).unwrap();
        assert_eq!(res.terms(), [iv(2, 5), iv(4, 5)]);
        assert_eq!(res.dimension(), 1);

        let res = projective_resolution(&rad2(4), iv(1, 1)).unwrap();
        assert_eq!(res.terms(), [iv(1, 2), iv(2, 3), iv(3, 4), iv(4, 4)]);

        // projectives resolve as themselves
        let proj = projective_resolution(&rad2(4), iv(2, 3)).unwrap();
        assert_eq!(proj.terms(), [iv(2, 3)]);
        assert_eq!(proj.dimension(), 0);
    }

    #[test]
    fn ext_degree_examples() {
        let alg = rad2(4);
        assert_eq!(ext_nonzero_degree(&alg, iv(2, 3), iv(1, 1)).unwrap(), None);
        assert_eq!(ext_nonzero_degree(&alg, iv(1, 1), iv(4, 4)).unwrap(), Some(3));
        let linear5 = NakayamaAlgebra::linear(5).unwrap();
        assert_eq!(ext_nonzero_degree(&linear5, iv(2, 3), iv(4, 5)).unwrap(), Some(1));
    }

    #[test]
    fn ext_out_count_examples() {
        let alg = rad2(4);
        assert_eq!(ext_out_count(&alg, iv(2, 3)).unwrap(), 0);
        assert_eq!(ext_out_count(&alg, iv(1, 1)).unwrap(), 3);
        let linear5 = NakayamaAlgebra::linear(5).unwrap();
        assert_eq!(ext_out_count(&linear5, iv(2, 3)).unwrap(), 4);
    }

    #[test]
    fn interval_count_examples() {
        assert_eq!(interval_count_three(1, 2, 2, 3, 3, 4).unwrap(), 1);
        assert_eq!(interval_count_three(2, 2, 2, 2, 2, 2).unwrap(), -2);
        assert!(interval_count_three(3, 2, 1, 5, 4, 6).is_err());
        assert_eq!(interval_count_two(2, 3, 4).unwrap(), 0);
        assert!(interval_count_two(4, 3, 2).is_err());
    }

    #[test]
    fn resolution_table_agrees_with_direct_calls() {
        let alg = rad2(5);
        let table = ResolutionTable::new(&alg);
        for m in table.modules().iter() {
            assert_eq!(*table.resolution_of(m).unwrap(), projective_resolution(&alg, m).unwrap());
            for n in table.modules().iter() {
                assert_eq!(table.ext_degree(m, n), ext_nonzero_degree(&alg, m, n).unwrap());
            }
        }
    }
}
