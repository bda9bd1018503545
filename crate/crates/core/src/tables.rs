//! Golden transcriptions of the published tables and their recomputation.
//!
//! Rows are stored one per line with ` | ` separated fields. Lines starting
//! with `#` are comments; a `# n = N` comment sets the code length.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub use crate::analysis::{table1_row, Table1Row};
use crate::analysis::Rat;
use crate::codes_ring::{parse_r_generator, CyclicCodeR, Distance, GrayParams, RWord};
use crate::codes_z4::CyclicCodeZ4;
use crate::cyclotomic::{factor_xn_minus_1, FactorTable};
use crate::error::{Error, Result};
use crate::z4poly::Z4Poly;

pub const TABLE1: &str = include_str!("../golden/table1.txt");
pub const TABLE2: &str = include_str!("../golden/table2.txt");
pub const TABLE3: &str = include_str!("../golden/table3.txt");

/// Rows whose printed values are known to be suspect. A failure there is
/// reported as an expected discrepancy rather than a regression. Rows that
/// print the same generator as another row are found from the data.
pub fn expected_discrepancy(table: u8, row: usize) -> Option<&'static str> {
    match (table, row) {
        (2, 3) => Some("printed distance 2 is out of line with rows of equal size"),
        _ => None,
    }
}

impl CodeTable {
    /// Other rows printing the same generator as `row`.
    pub fn duplicate_generators(&self, row: usize) -> Vec<usize> {
        let Some(this) = self.rows.iter().find(|r| r.index == row) else { return Vec::new() };
        self.rows
            .iter()
            .filter(|r| r.index != row && r.generator == this.generator)
            .map(|r| r.index)
            .collect()
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn fields(line: &str) -> Vec<&str> {
    line.split('|').map(str::trim).collect()
}

fn malformed(line: &str) -> Error {
    Error::MalformedRow(line.to_string())
}

pub fn parse_table1(text: &str) -> Result<Vec<Table1Row>> {
    data_lines(text)
        .map(|line| {
            let f = fields(line);
            if f.len() != 4 {
                return Err(malformed(line));
            }
            let num = |s: &str| s.parse::<u64>().map_err(|_| malformed(line));
            Ok(Table1Row {
                n: num(f[0])?,
                dagger: match f[1] {
                    "†" => true,
                    "-" => false,
                    _ => return Err(malformed(line)),
                },
                b: num(f[2])?,
                e: f[3].parse().map_err(|_| malformed(line))?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Report {
    pub printed: Table1Row,
    pub computed: Table1Row,
    pub status: RowStatus,
    pub notes: Vec<String>,
}

/// Recomputes every printed Table 1 row.
pub fn verify_table1(rows: Option<&[usize]>) -> Result<Vec<Table1Report>> {
    let printed = parse_table1(TABLE1)?;
    printed
        .into_iter()
        .enumerate()
        .filter(|(i, _)| rows.is_none_or(|sel| sel.contains(&(i + 1))))
        .map(|(_, row)| {
            let computed = table1_row(row.n)?;
            let mut notes = Vec::new();
            if row.dagger && row.b != row.n {
                notes.push(format!("printed B = {} contradicts the dagger: n in N2 forces B = n", row.b));
            }
            let implied = Rat::new(10 * row.n as i64 - 4 * row.b as i64, 9);
            if implied != row.e {
                notes.push(format!("printed E = {} is not (10n - 4B)/9 = {} for the printed B", row.e, implied));
            }
            let status = if computed == row { RowStatus::Pass } else { RowStatus::Fail };
            Ok(Table1Report { printed: row, computed, status, notes })
        })
        .collect()
}

/// The six polynomials of a Tables 2-3 row, in the order
/// `p1, q1, r1, p2, q2, r2`.
pub const LABELS: [&str; 6] = ["p_1", "q_1", "r_1", "p_2", "q_2", "r_2"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedParams {
    pub length: usize,
    pub k1: usize,
    pub k2: usize,
    pub distance: u32,
    pub good: bool,
}

impl fmt::Display for PrintedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, 4^{} 2^{}, {})", self.length, self.k1, self.k2, self.distance)?;
        if self.good {
            write!(f, "*")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeRow {
    pub index: usize,
    pub polys: [Z4Poly; 6],
    pub generator: RWord,
    pub printed: PrintedParams,
}

#[derive(Clone, Debug)]
pub struct CodeTable {
    pub id: u8,
    pub n: u64,
    pub rows: Vec<CodeRow>,
}

/// `"1131201"` or a product such as `"(10231)(13201)"`.
fn parse_poly_product(s: &str) -> Result<Z4Poly> {
    if !s.starts_with('(') {
        return Z4Poly::parse(s);
    }
    let mut acc = Z4Poly::one();
    for part in s.split(')') {
        if part.is_empty() {
            continue;
        }
        let inner = part.strip_prefix('(').ok_or_else(|| malformed(s))?;
        acc = &acc * &Z4Poly::parse(inner)?;
    }
    Ok(acc)
}

fn parse_params(s: &str) -> Option<PrintedParams> {
    let good = s.ends_with('*');
    let body = s.trim_end_matches('*').strip_prefix('(')?.strip_suffix(')')?;
    let parts: Vec<&str> = body.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return None;
    }
    let (four, two) = parts[1].split_once(' ')?;
    Some(PrintedParams {
        length: parts[0].parse().ok()?,
        k1: four.strip_prefix("4^")?.parse().ok()?,
        k2: two.strip_prefix("2^")?.parse().ok()?,
        distance: parts[2].parse().ok()?,
        good,
    })
}

pub fn parse_code_table(id: u8, text: &str) -> Result<CodeTable> {
    let n = text
        .lines()
        .find_map(|l| l.trim().strip_prefix("# n = "))
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::MalformedRow("missing length header".into()))?;
    let mut rows = Vec::new();
    for (i, line) in data_lines(text).enumerate() {
        let f = fields(line);
        if f.len() != 5 {
            return Err(malformed(line));
        }
        let mut polys: [Option<Z4Poly>; 6] = Default::default();
        for cell in &f[..3] {
            let mut parts: Vec<&str> = cell.split('=').collect();
            let poly = parse_poly_product(parts.pop().ok_or_else(|| malformed(line))?)?;
            for label in parts {
                let k = LABELS.iter().position(|l| *l == label).ok_or_else(|| malformed(line))?;
                if polys[k].replace(poly.clone()).is_some() {
                    return Err(malformed(line));
                }
            }
        }
        let polys = polys.map(|p| p.ok_or_else(|| malformed(line)));
        let [p1, q1, r1, p2, q2, r2] = polys;
        rows.push(CodeRow {
            index: i + 1,
            polys: [p1?, q1?, r1?, p2?, q2?, r2?],
            generator: parse_r_generator(f[3])?,
            printed: parse_params(f[4]).ok_or_else(|| malformed(line))?,
        });
    }
    Ok(CodeTable { id, n, rows })
}

pub fn table2() -> CodeTable {
    parse_code_table(2, TABLE2).expect("shipped golden file parses")
}

pub fn table3() -> CodeTable {
    parse_code_table(3, TABLE3).expect("shipped golden file parses")
}

pub fn code_table(id: u8) -> Result<CodeTable> {
    match id {
        2 => Ok(table2()),
        3 => Ok(table3()),
        _ => Err(Error::MalformedRow(format!("no code table {id}"))),
    }
}

impl CodeRow {
    /// The code `v <p1 q1, 2 p1> + (1 - v) <p2 q2, 2 p2>`, with `r1`, `r2`
    /// inferred as complements.
    pub fn code(&self, table: &Arc<FactorTable>) -> Result<CyclicCodeR> {
        let [p1, q1, _, p2, q2, _] = &self.polys;
        CyclicCodeR::new(
            CyclicCodeZ4::from_polys(table, p1, q1)?,
            CyclicCodeZ4::from_polys(table, p2, q2)?,
        )
    }

    /// Whether the printed `r1`, `r2` are the inferred complements.
    pub fn r_consistent(&self, code: &CyclicCodeR) -> [bool; 2] {
        [self.polys[2] == code.c1.h_poly(), self.polys[5] == code.c2.h_poly()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum RowStatus {
    Pass,
    Fail,
    ExpectedDiscrepancy,
    /// Above the enumeration cap.
    Skipped,
    Error,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "PASS",
            RowStatus::Fail => "FAIL",
            RowStatus::ExpectedDiscrepancy => "EXPECTED-DISCREPANCY",
            RowStatus::Skipped => "SKIPPED",
            RowStatus::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub table: u8,
    pub row: usize,
    pub printed: PrintedParams,
    /// Gray image parameters of the hull of the row's code.
    pub computed: Option<GrayParams>,
    /// Gray image parameters of the cyclic span of the printed generator.
    pub printed_generator: Option<GrayParams>,
    pub generator_spans_hull: Option<bool>,
    pub r_consistent: [bool; 2],
    pub status: RowStatus,
    pub notes: Vec<String>,
}

impl RowReport {
    pub fn matches(&self) -> bool {
        self.computed.is_some_and(|c| params_match(&c, &self.printed))
    }
}

pub fn params_match(c: &GrayParams, p: &PrintedParams) -> bool {
    c.length == p.length && c.k1 == p.k1 && c.k2 == p.k2 && c.distance == Distance::Finite(p.distance)
}

/// Recomputes one row. Hull parameters come from the closed-form hull of
/// the tabulated polynomials; the printed generator is checked separately.
pub fn verify_code_row(
    id: u8,
    table: &Arc<FactorTable>,
    row: &CodeRow,
    duplicates: &[usize],
    cap: u64,
    workers: usize,
) -> RowReport {
    let mut notes = Vec::new();
    let mut skipped = false;
    let mut report = RowReport {
        table: id,
        row: row.index,
        printed: row.printed.clone(),
        computed: None,
        printed_generator: None,
        generator_spans_hull: None,
        r_consistent: [false, false],
        status: RowStatus::Error,
        notes: Vec::new(),
    };
    match row.code(table) {
        Ok(code) => {
            report.r_consistent = row.r_consistent(&code);
            for (k, ok) in report.r_consistent.iter().enumerate() {
                if !ok {
                    let inferred = if k == 0 { code.c1.h_poly() } else { code.c2.h_poly() };
                    notes.push(format!(
                        "printed r_{} = {} but the complement of p_{0} q_{0} is {}",
                        k + 1,
                        row.polys[3 * k + 2],
                        inferred
                    ));
                }
            }
            let (hull, _) = code.hull();
            match hull.gray_params(cap, workers) {
                Ok(p) => report.computed = Some(p),
                Err(e @ Error::CodeTooLarge { .. }) => {
                    skipped = true;
                    notes.push(format!("hull: {e}"));
                }
                Err(e) => notes.push(format!("hull: {e}")),
            }
            match crate::codes_ring::span_of_r_generator(table, &row.generator) {
                Ok(span) => {
                    report.generator_spans_hull = Some(span.code == hull);
                    match span.code.gray_params(cap, workers) {
                        Ok(p) => report.printed_generator = Some(p),
                        Err(e) => notes.push(format!("printed generator: {e}")),
                    }
                }
                Err(e) => notes.push(format!("printed generator: {e}")),
            }
        }
        Err(e) => notes.push(format!("row does not define a code: {e}")),
    }
    let suspect = expected_discrepancy(id, row.index).is_some() || !duplicates.is_empty();
    report.status = match (&report.computed, report.matches()) {
        (_, true) => RowStatus::Pass,
        _ if suspect => RowStatus::ExpectedDiscrepancy,
        (Some(_), false) => RowStatus::Fail,
        (None, _) if skipped => RowStatus::Skipped,
        (None, _) => RowStatus::Error,
    };
    if let (Some(c), Some(g)) = (&report.computed, &report.printed_generator) {
        if c != g && params_match(g, &row.printed) {
            notes.push("the printed triple belongs to the printed generator, not to the tabulated polynomials".into());
        }
    }
    if let Some(why) = expected_discrepancy(id, row.index) {
        notes.push(format!("known suspect row: {why}"));
    }
    if !duplicates.is_empty() {
        let others: Vec<String> = duplicates.iter().map(|d| d.to_string()).collect();
        notes.push(format!(
            "known suspect row: prints the same generator as row {} for different polynomials",
            others.join(", ")
        ));
    }
    report.notes = notes;
    report
}

pub fn verify_code_table(
    t: &CodeTable,
    rows: Option<&[usize]>,
    cap: u64,
    workers: usize,
) -> Result<Vec<RowReport>> {
    let table = Arc::new(factor_xn_minus_1(t.n)?);
    Ok(t.rows
        .iter()
        .filter(|r| rows.is_none_or(|sel| sel.contains(&r.index)))
        .map(|r| verify_code_row(t.id, &table, r, &t.duplicate_generators(r.index), cap, workers))
        .collect())
}
