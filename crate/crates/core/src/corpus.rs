//! Exhaustive algebra corpora for verification: every minimal relation set
//! on a given quiver, and the overlap-free subfamily. Minimal sets are the
//! antichains of arrow spans (strictly increasing starts and caps), so the
//! corpus sizes follow the Catalan numbers.

use crate::algebra::{NakayamaAlgebra, Relation};

/// Every algebra on `n` vertices whose relation set is minimal (no relation's
/// arrow span contains another's). Includes the hereditary algebra.
pub fn all_minimal_algebras(n: usize) -> Vec<NakayamaAlgebra> {
    let mut sets = Vec::new();
    let mut current = Vec::new();
    collect(n, 1, 0, &mut current, &mut sets, false);
    sets.into_iter()
        .map(|rels| NakayamaAlgebra::new(n, rels).expect("enumerated sets are minimal"))
        .collect()
}

/// The overlap-free subfamily: relations pairwise sharing no arrow.
pub fn all_overlap_free_algebras(n: usize) -> Vec<NakayamaAlgebra> {
    let mut sets = Vec::new();
    let mut current = Vec::new();
    collect(n, 1, 0, &mut current, &mut sets, true);
    sets.into_iter()
        .map(|rels| NakayamaAlgebra::new(n, rels).expect("enumerated sets are minimal"))
        .collect()
}

fn collect(
    n: usize,
    min_start: usize,
    last_cap: usize,
    current: &mut Vec<Relation>,
    out: &mut Vec<Vec<Relation>>,
    disjoint: bool,
) {
    out.push(current.clone());
    if n < 3 {
        return;
    }
    // next relation: start after the previous start (or after the previous
    // cap, when arrow-disjointness is required), cap after the previous cap
    let lo = if disjoint { min_start.max(last_cap + 1) } else { min_start };
    for start in lo..=n - 2 {
        for cap in (last_cap + 1).max(start + 1)..=n - 1 {
            current.push(Relation::new(start, cap - start + 1));
            collect(n, start + 1, cap, current, out, disjoint);
            current.pop();
        }
    }
}
