//! Tables over the single-relation family and the integer sequences they
//! generate: direct engine values, the first-column formulas, the column
//! recursions, and text emission (plain, b-file, CSV).
//!
//! Tables are always recomputed from the engine; printed reference values
//! live only in test fixtures.

use crate::algebra::{AlgebraPreset, NakayamaAlgebra};
use crate::census;
use crate::error::{Error, Result};
use crate::indec::count_indecomposables_formula;
use serde::Serialize;
use std::fmt::Write as _;

/// Which quantity a table tabulates for the algebras `single(n, 1, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TableKind {
    IndSq,
    H,
    E,
    Ep,
}

impl TableKind {
    pub fn label(self) -> &'static str {
        match self {
            TableKind::IndSq => "IND_SQ",
            TableKind::H => "H",
            TableKind::E => "E",
            TableKind::Ep => "EP",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "IND_SQ" => Ok(TableKind::IndSq),
            "H" => Ok(TableKind::H),
            "E" => Ok(TableKind::E),
            "EP" => Ok(TableKind::Ep),
            other => Err(Error::Parse(format!("unknown table kind '{other}'"))),
        }
    }
}

/// Engine value of one cell: the chosen quantity for `single(n, 1, m)`.
fn cell_value(kind: TableKind, n: usize, m: usize) -> u64 {
    let alg = AlgebraPreset::Single { n, start: 1, length: m }
        .build()
        .expect("defined cells index admissible algebras");
    match kind {
        TableKind::IndSq => {
            let ind = count_indecomposables_formula(&alg);
            ind * ind
        }
        TableKind::H => census::hom_total(&alg),
        TableKind::E => census::ext_total(&alg),
        TableKind::Ep => census::exceptional_pairs(&alg),
    }
}

/// Rows `n = 3..=n_max`, columns `m = 2..=n-1`; a cell is defined iff
/// `2 <= m <= n-1`.
#[derive(Debug, Clone, Serialize)]
pub struct TableGrid {
    pub kind: TableKind,
    pub n_max: usize,
    /// `rows[i]` holds the cells of `n = 3 + i` for `m = 2..=n-1`.
    pub rows: Vec<Vec<u64>>,
}

impl TableGrid {
    pub fn cell(&self, n: usize, m: usize) -> Option<u64> {
        if n < 3 || n > self.n_max || m < 2 || m + 1 > n {
            return None;
        }
        Some(self.rows[n - 3][m - 2])
    }

    /// `n,m,value` rows in row-major order, newline-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,value\n");
        for (i, row) in self.rows.iter().enumerate() {
            let n = i + 3;
            for (j, value) in row.iter().enumerate() {
                writeln!(out, "{n},{},{value}", j + 2).unwrap();
            }
        }
        out
    }

    /// Aligned grid with `-` for undefined cells, as printed references are.
    pub fn to_plain(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let cols: Vec<usize> = (2..self.n_max).collect();
        let mut out = String::new();
        write!(out, "{:>4}", "n/m").unwrap();
        for m in &cols {
            write!(out, " {m:>width$}").unwrap();
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            write!(out, "{:>4}", i + 3).unwrap();
            for (j, _) in cols.iter().enumerate() {
                match row.get(j) {
                    Some(v) => write!(out, " {v:>width$}").unwrap(),
                    None => write!(out, " {:>width$}", "-").unwrap(),
                }
            }
            out.push('\n');
        }
        out
    }
}

pub fn build_table(kind: TableKind, n_max: usize) -> TableGrid {
    let rows = (3..=n_max.max(2))
        .map(|n| (2..n).map(|m| cell_value(kind, n, m)).collect())
        .collect();
    TableGrid { kind, n_max, rows }
}

/// First-column (`m = 2`) closed formulas: `(n^2-n+4)^2/4` for the squared
/// module count, `n^4/6 - n^3/2 + 7n^2/3 - 4n + 3` for exceptional pairs.
pub fn column_formula(kind: TableKind, col: usize, n: usize) -> Result<u64> {
    if col != 2 || n < 3 {
        return Err(Error::NotApplicable(format!(
            "first-column formulas cover col=2, n >= 3; got col={col}, n={n}"
        )));
    }
    let big = n as i128;
    match kind {
        TableKind::IndSq => {
            let half = big * big - big + 4;
            debug_assert_eq!(half % 2, 0);
            Ok(((half / 2) * (half / 2)) as u64)
        }
        TableKind::Ep => {
            // n^4/6 - n^3/2 + 7n^2/3 - 4n + 3, integral for every n
            let num = big.pow(4) - 3 * big.pow(3) + 14 * big * big - 24 * big + 18;
            if num % 6 != 0 {
                return Err(Error::InternalInconsistency(format!(
                    "EP first-column formula not integral at n={n}"
                )));
            }
            Ok((num / 6) as u64)
        }
        _ => Err(Error::NotApplicable(format!(
            "no first-column formula for kind {}",
            kind.label()
        ))),
    }
}

/// Column recursions from the first column. For the squared module count:
/// add `(m-2)(n^2-n+5) + sum_{h=2}^{m-1} 2(h-2)`. For exceptional pairs the
/// second column adds `(n-3)^2 + (n-3) + 4` and later columns add
/// `sum_{t=3}^{m-1} t^2 + sum_{i=n-m}^{n-4} i(i+1)` on top of column 3.
pub fn column_recursion(kind: TableKind, n: usize, m: usize) -> Result<u64> {
    if n < 3 || m < 2 || m + 1 > n {
        return Err(Error::NotApplicable(format!("cell (n={n}, m={m}) is not defined")));
    }
    let big_n = n as i128;
    match kind {
        TableKind::IndSq => {
            let first = column_formula(kind, 2, n)? as i128;
            let step = (m as i128 - 2) * (big_n * big_n - big_n + 5);
            let extra: i128 = (2..m as i128).map(|h| 2 * (h - 2)).sum();
            Ok((first + step + extra) as u64)
        }
        TableKind::Ep => {
            let first = column_formula(kind, 2, n)? as i128;
            if m == 2 {
                return Ok(first as u64);
            }
            let second = first + (big_n - 3) * (big_n - 3) + (big_n - 3) + 4;
            if m == 3 {
                return Ok(second as u64);
            }
            let squares: i128 = (3..m as i128).map(|t| t * t).sum();
            let products: i128 = (big_n - m as i128..=big_n - 4).map(|i| i * (i + 1)).sum();
            Ok((second + squares + products) as u64)
        }
        _ => Err(Error::NotApplicable(format!(
            "no column recursion for kind {}",
            kind.label()
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceFormat {
    Plain,
    BFile,
    Csv,
}

impl SequenceFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(SequenceFormat::Plain),
            "bfile" | "b-file" => Ok(SequenceFormat::BFile),
            "csv" => Ok(SequenceFormat::Csv),
            other => Err(Error::Parse(format!("unknown sequence format '{other}'"))),
        }
    }
}

/// Named sequence generators. Column sequences walk a table column downwards;
/// family sequences walk their parameter. Everything is recomputed from the
/// engine.
///
/// Names: `ind-sq-col-<m>`, `h-col-<m>`, `e-col-<m>`, `ep-col-<m>`,
/// `ind-rad-<k>`, `ep-rad2`, `h-rad2`, `e-rad2`, `ep-auslander`,
/// `h-auslander`, `e-auslander`, `ind-auslander`, `ep-linear`, `h-linear`,
/// `e-linear`, `ind-linear`.
pub fn emit_sequence(name: &str, terms: usize, format: SequenceFormat) -> Result<String> {
    let values = sequence_terms(name, terms)?;
    let mut out = String::new();
    match format {
        SequenceFormat::Plain => {
            let items: Vec<String> = values.iter().map(u64::to_string).collect();
            writeln!(out, "{}", items.join(", ")).unwrap();
        }
        SequenceFormat::BFile => {
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{} {v}", i + 1).unwrap();
            }
        }
        SequenceFormat::Csv => {
            out.push_str("index,value\n");
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{},{v}", i + 1).unwrap();
            }
        }
    }
    Ok(out)
}

/// The raw terms of a named sequence; index 1 is the smallest valid
/// parameter of the family (`n = m+1` for column sequences but never below 3,
/// `n = 3` for the rad-square family, `n = k+1` for `ind-rad-<k>`, `m = 2`
/// for the Auslander family, `n = 1` for the hereditary family).
pub fn sequence_terms(name: &str, terms: usize) -> Result<Vec<u64>> {
    let unknown = || Error::UnknownSequence(name.to_string());
    let lower = name.to_ascii_lowercase();

    if let Some(rest) = lower.strip_suffix("-rad2") {
        let start = 3;
        return match rest {
            "ep" => Ok(family(start, terms, |n| census::exceptional_pairs(&rad2(n)))),
            "h" => Ok(family(start, terms, |n| census::hom_total(&rad2(n)))),
            "e" => Ok(family(start, terms, |n| census::ext_total(&rad2(n)))),
            _ => Err(unknown()),
        };
    }
    if let Some(rest) = lower.strip_suffix("-auslander") {
        let aus = |m: usize| AlgebraPreset::Auslander { m }.build().expect("m >= 2");
        return match rest {
            "ep" => Ok(family(2, terms, |m| census::exceptional_pairs(&aus(m)))),
            "h" => Ok(family(2, terms, |m| census::hom_total(&aus(m)))),
            "e" => Ok(family(2, terms, |m| census::ext_total(&aus(m)))),
            "ind" => Ok(family(2, terms, |m| count_indecomposables_formula(&aus(m)))),
            _ => Err(unknown()),
        };
    }
    if let Some(rest) = lower.strip_suffix("-linear") {
        let lin = |n: usize| NakayamaAlgebra::linear(n).expect("n >= 1");
        return match rest {
            "ep" => Ok(family(1, terms, |n| census::exceptional_pairs(&lin(n)))),
            "h" => Ok(family(1, terms, |n| census::hom_total(&lin(n)))),
            "e" => Ok(family(1, terms, |n| census::ext_total(&lin(n)))),
            "ind" => Ok(family(1, terms, |n| count_indecomposables_formula(&lin(n)))),
            _ => Err(unknown()),
        };
    }
    if let Some(k) = lower.strip_prefix("ind-rad-") {
        let k: usize = k.parse().map_err(|_| unknown())?;
        if k < 2 {
            return Err(unknown());
        }
        return Ok(family(k + 1, terms, |n| {
            count_indecomposables_formula(&AlgebraPreset::RadPower { n, k }.build().expect("n > k"))
        }));
    }
    for (prefix, kind) in [
        ("ind-sq-col-", TableKind::IndSq),
        ("h-col-", TableKind::H),
        ("e-col-", TableKind::E),
        ("ep-col-", TableKind::Ep),
    ] {
        if let Some(m) = lower.strip_prefix(prefix) {
            let m: usize = m.parse().map_err(|_| unknown())?;
            if m < 2 {
                return Err(unknown());
            }
            let start = (m + 1).max(3);
            return Ok(family(start, terms, |n| cell_value(kind, n, m)));
        }
    }
    Err(unknown())
}

fn rad2(n: usize) -> NakayamaAlgebra {
    AlgebraPreset::RadPower { n, k: 2 }.build().expect("n >= 3")
}

fn family(start: usize, terms: usize, f: impl Fn(usize) -> u64) -> Vec<u64> {
    (start..start + terms).map(f).collect()
}
