//! Acceptance suite: one test per criterion, each printing a PASS line once
//! every check in it has held exactly (all quantities are integers; every
//! comparison is equality).

use nakayama_census::census::{self, closed_formula, FormulaId};
use nakayama_census::corpus::{all_minimal_algebras, all_overlap_free_algebras};
use nakayama_census::homology::{ext_degree_in, hom_nonzero, ResolutionTable};
use nakayama_census::indec::{count_indecomposables_formula, enumerate_indecomposables};
use nakayama_census::oracle::{
    ep_count_oracle, hom_basis, hom_complex_of, matrix_resolution, to_matrix_rep, MatrixRep,
    MatrixResolution,
};
use nakayama_census::sequences::{build_table, column_formula, column_recursion, TableKind};
use nakayama_census::{AlgebraPreset, NakayamaAlgebra};
use rayon::prelude::*;

/// Printed reference tables, rows n = 3..=9, columns m = 2..=n-1.
const TABLE_IND_SQ: [&[u64]; 7] = [
    &[25],
    &[64, 81],
    &[144, 169, 196],
    &[289, 324, 361, 400],
    &[529, 576, 625, 676, 729],
    &[900, 961, 1024, 1089, 1156, 1225],
    &[1444, 1521, 1600, 1681, 1764, 1849, 1936],
];
const TABLE_H: [&[u64]; 7] = [
    &[10],
    &[21, 28],
    &[42, 51, 61],
    &[78, 89, 102, 115],
    &[135, 148, 164, 181, 197],
    &[220, 235, 254, 275, 296, 315],
    &[341, 358, 380, 405, 431, 456, 478],
];
const TABLE_E: [&[u64]; 7] = [
    &[3],
    &[8, 12],
    &[19, 25, 31],
    &[40, 48, 57, 65],
    &[76, 86, 98, 110, 120],
    &[133, 145, 160, 176, 191, 203],
    &[218, 232, 250, 270, 290, 308, 322],
];
const TABLE_EP: [&[u64]; 7] = [
    &[12],
    &[35, 41],
    &[83, 93, 104],
    &[171, 187, 202, 220],
    &[318, 342, 363, 385, 412],
    &[547, 581, 610, 638, 669, 707],
    &[885, 931, 970, 1006, 1043, 1085, 1136],
];

fn golden_csv(table: &[&[u64]; 7]) -> String {
    let mut out = String::from("n,m,value\n");
    for (i, row) in table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out.push_str(&format!("{},{},{v}\n", i + 3, j + 2));
        }
    }
    out
}

fn single(n: usize, start: usize, length: usize) -> NakayamaAlgebra {
    AlgebraPreset::Single { n, start, length }.build().unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    if n < k {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn criterion_01_table_reproduction() {
    for (kind, golden) in [
        (TableKind::IndSq, &TABLE_IND_SQ),
        (TableKind::H, &TABLE_H),
        (TableKind::E, &TABLE_E),
        (TableKind::Ep, &TABLE_EP),
    ] {
        let grid = build_table(kind, 9);
        let mut cells = 0;
        for (i, row) in golden.iter().enumerate() {
            let n = i + 3;
            for (j, &value) in row.iter().enumerate() {
                let m = j + 2;
                assert_eq!(grid.cell(n, m), Some(value), "{} cell ({n},{m})", kind.label());
                cells += 1;
            }
        }
        assert_eq!(cells, 28);
        assert_eq!(grid.to_csv(), golden_csv(golden), "{} csv golden", kind.label());
    }
    // spot values called out explicitly
    assert_eq!(build_table(TableKind::Ep, 9).cell(7, 2), Some(318));
    assert_eq!(build_table(TableKind::H, 9).cell(8, 5), Some(275));
    assert_eq!(build_table(TableKind::E, 9).cell(6, 4), Some(57));
    assert_eq!(build_table(TableKind::IndSq, 9).cell(9, 8), Some(1936));
    println!("criterion 1 PASS: all 4 x 28 printed table cells reproduced exactly");
}

#[test]
fn criterion_02_hereditary_formulas() {
    for n in 1..=12u64 {
        let alg = NakayamaAlgebra::linear(n as usize).unwrap();
        assert_eq!(census::hom_total(&alg), binomial(n + 3, 4), "H at n={n}");
        assert_eq!(census::ext_total(&alg), binomial(n + 2, 4), "E at n={n}");
        assert_eq!(
            census::exceptional_pairs(&alg),
            (n - 1) * n * (n + 1) * (n + 1) / 6,
            "EP at n={n}"
        );
    }
    println!("criterion 2 PASS: hereditary H, E, EP closed forms for n = 1..=12");
}

#[test]
fn criterion_03_overlap_free_theorems() {
    let mut checked = 0;
    for n in 1..=10 {
        for alg in all_overlap_free_algebras(n) {
            let relations = alg.relations().to_vec();
            let h = closed_formula(&FormulaId::HOverlapFree { n, relations: relations.clone() }).unwrap();
            let e = closed_formula(&FormulaId::EOverlapFree { n, relations: relations.clone() }).unwrap();
            let ep = closed_formula(&FormulaId::EpOverlapFree { n, relations }).unwrap();
            assert_eq!(h, census::hom_total(&alg), "H over {alg}");
            assert_eq!(e, census::ext_total(&alg), "E over {alg}");
            assert_eq!(ep, census::exceptional_pairs(&alg), "EP over {alg}");
            checked += 1;
        }
    }
    println!("criterion 3 PASS: overlap-free H/E/EP theorems over {checked} relation placements");
}

#[test]
fn criterion_04_single_relation_corollary() {
    let cases: Vec<(usize, usize)> = (3..=10).flat_map(|n| (2..n).map(move |m| (n, m))).collect();
    cases.par_iter().for_each(|&(n, m)| {
        let alg = single(n, 1, m);
        let engine = census::exceptional_pairs(&alg);
        assert_eq!(closed_formula(&FormulaId::EpSingle { n, m }).unwrap(), engine, "formula ({n},{m})");
        assert_eq!(ep_count_oracle(&alg), engine, "oracle ({n},{m})");
    });
    println!("criterion 4 PASS: EP_SINGLE == engine == oracle for 3 <= n <= 10, 2 <= m <= n-1");
}

#[test]
fn criterion_05_rad_square_theorems() {
    for n in 3..=12usize {
        let alg = AlgebraPreset::RadPower { n, k: 2 }.build().unwrap();
        let big = n as u64;
        assert_eq!(count_indecomposables_formula(&alg), 2 * big - 1, "|Ind| at n={n}");
        assert_eq!(census::hom_total(&alg), 5 * big - 5, "H at n={n}");
        let tri = (big - 3) * (big - 2) / 2;
        assert_eq!(census::ext_total(&alg), (big - 1) + (big - 2) + tri, "E at n={n}");
        let ep = (7 * big * big - 17 * big + 12) / 2;
        assert_eq!(census::exceptional_pairs(&alg), ep, "EP at n={n}");
        if n <= 8 {
            assert_eq!(ep_count_oracle(&alg), ep, "oracle at n={n}");
        }
    }
    println!("criterion 5 PASS: rad-square |Ind|, H, E, EP for n = 3..=12 (oracle to n = 8)");
}

#[test]
fn criterion_06_rad_power_count() {
    for n in 3..=12usize {
        for k in 2..n {
            let alg = AlgebraPreset::RadPower { n, k }.build().unwrap();
            let expected = (k * n - k * (k - 1) / 2) as u64;
            assert_eq!(count_indecomposables_formula(&alg), expected, "n={n}, k={k}");
            assert_eq!(enumerate_indecomposables(&alg).len() as u64, expected, "n={n}, k={k}");
        }
    }
    println!("criterion 6 PASS: |Ind| = kn - t_(k-1) for all 2 <= k < n <= 12");
}

#[test]
fn criterion_07_auslander_family() {
    for m in 2..=6usize {
        let alg = AlgebraPreset::Auslander { m }.build().unwrap();
        assert_eq!(count_indecomposables_formula(&alg), 5 * (m as u64 - 1), "|Ind| at m={m}");
        let expected = if m == 2 { 12 } else { (25 * m as i64 * m as i64 - 77 * m as i64 + 68) as u64 };
        assert_eq!(census::exceptional_pairs(&alg), expected, "engine EP at m={m}");
        assert_eq!(ep_count_oracle(&alg), expected, "oracle EP at m={m}");
    }
    println!("criterion 7 PASS: Auslander |Ind| and EP (engine and oracle) for m = 2..=6");
}

#[test]
fn criterion_08_remark_checks() {
    let shifted = single(7, 4, 2);
    assert_eq!(census::exceptional_pairs(&shifted), 260);
    assert_eq!(ep_count_oracle(&shifted), 260);
    for n in 3..=10 {
        assert_eq!(
            census::exceptional_pairs(&single(n, 1, 2)),
            census::exceptional_pairs(&single(n, n - 2, 2)),
            "symmetry at n={n}"
        );
    }
    println!("criterion 8 PASS: EP(A_7, relation 4:2) = 260; placement symmetry for n = 3..=10");
}

#[test]
fn criterion_09_property_suite() {
    let algebras: Vec<NakayamaAlgebra> = (1..=8).flat_map(all_minimal_algebras).collect();
    let total = algebras.len();
    algebras.par_iter().for_each(|alg| {
        let table = ResolutionTable::new(alg);
        let modules = table.modules().clone();
        let reps: Vec<MatrixRep> =
            modules.iter().map(|m| to_matrix_rep(alg, m).unwrap()).collect();
        let resolutions: Vec<MatrixResolution> =
            reps.iter().map(|r| matrix_resolution(alg, r)).collect();

        // (e) resolution syzygy identities
        for (idx, module) in modules.iter().enumerate() {
            let terms = table.resolution(idx).terms();
            let m = terms.len() - 1;
            for (t, term) in terms.iter().enumerate() {
                assert_eq!(term.b, alg.cap(term.a).unwrap());
                if t == 1 {
                    assert_eq!(term.a, module.b + 1);
                } else if t >= 2 {
                    assert_eq!(term.a, terms[t - 2].b + 1);
                }
            }
            if m >= 1 {
                assert_eq!(terms[m].b, terms[m - 1].b);
            }
        }

        let mut hom_pairs = 0u64;
        let mut ext_pairs = 0u64;
        let mut ep_pairs = 0u64;
        for (i, m) in modules.iter().enumerate() {
            for (j, t) in modules.iter().enumerate() {
                // (d) oracle equivalence of hom_dim ...
                let fast_hom = hom_nonzero(m, t);
                let oracle_hom = hom_basis(&reps[i], &reps[j]).len();
                assert!(oracle_hom <= 1);
                assert_eq!(fast_hom as usize, oracle_hom, "Hom({m},{t}) over {alg}");

                // ... and of ext_nonzero_degree, with (b) uniqueness
                let complex = hom_complex_of(&resolutions[i], &reps[j]);
                let degrees: Vec<usize> =
                    (1..=complex.length()).filter(|&d| complex.ext_dim(d) != 0).collect();
                assert!(degrees.len() <= 1, "Ext degrees {degrees:?} for ({m},{t}) over {alg}");
                assert!(degrees.iter().all(|&d| complex.ext_dim(d) == 1));
                let fast_ext = ext_degree_in(table.resolution(i), t);
                assert_eq!(fast_ext, degrees.first().copied(), "Ext({m},{t}) over {alg}");

                // (c) Hom/Ext disjointness
                if fast_hom {
                    assert!(degrees.is_empty(), "Hom and Ext both nonzero for ({m},{t}) over {alg}");
                }

                hom_pairs += fast_hom as u64;
                ext_pairs += !degrees.is_empty() as u64;
                ep_pairs += (!fast_hom && degrees.is_empty()) as u64;
            }
        }

        // (a) the key identity |Ind|^2 = EP + H + E, oracle-counted
        let ind = modules.len() as u64;
        assert_eq!(ind * ind, ep_pairs + hom_pairs + ext_pairs, "key identity over {alg}");
        assert_eq!(hom_pairs, census::hom_total(alg), "H totals over {alg}");
        assert_eq!(ext_pairs, census::ext_total(alg), "E totals over {alg}");
        assert_eq!(ep_pairs, census::exceptional_pairs(alg), "EP over {alg}");
    });
    println!(
        "criterion 9 PASS: key identity, Ext uniqueness, Hom/Ext disjointness, \
         oracle equivalence and syzygy identities over all {total} minimal relation sets, n <= 8"
    );
}

#[test]
fn criterion_10_sequence_recursions() {
    for kind in [TableKind::IndSq, TableKind::Ep] {
        let grid = build_table(kind, 12);
        for n in 3..=12 {
            for m in 2..n {
                assert_eq!(
                    column_recursion(kind, n, m).unwrap(),
                    grid.cell(n, m).unwrap(),
                    "{} recursion at ({n},{m})",
                    kind.label()
                );
            }
            assert_eq!(
                column_formula(kind, 2, n).unwrap(),
                grid.cell(n, 2).unwrap(),
                "{} first column at n={n}",
                kind.label()
            );
        }
    }
    assert_eq!(column_formula(TableKind::IndSq, 2, 3).unwrap(), 25);
    println!("criterion 10 PASS: column formulas and recursions match the tables for n <= 12");
}
