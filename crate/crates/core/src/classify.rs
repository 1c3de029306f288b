//! Classification reports: one row per isomorphism class with its property
//! flags, automorphism group, dual partner and catalog name.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::axioms::{dimonoid_profile, StructureKind};
use crate::catalog::{self, dimonoid_names, doppelsemigroup_names, semigroup_names, NamedStructure};
use crate::enumerate::{enumerate_dimonoids, EnumerationResult, Limits};
use crate::error::{Error, Result};
use crate::iso::{automorphism_group, canonical_form, CanonicalKey, GroupId};
use crate::tables::DiStructure;

/// Version tag written into JSON reports.
pub const REPORT_SCHEMA: &str = "dimonoid-report/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub key: CanonicalKey,
    /// Catalog name, or `unnamed-<order>-<seq>`.
    pub name: String,
    pub named: bool,
    pub trivial: bool,
    pub commutative: bool,
    pub abelian: bool,
    pub aut: GroupId,
    /// Key of the dual class. Abelian rows are their own partner, and so is
    /// any class isomorphic to its dual.
    pub dual_key: CanonicalKey,
    pub representative: DiStructure,
}

impl ClassRow {
    fn pair_key(&self) -> (&CanonicalKey, &CanonicalKey) {
        if self.dual_key < self.key {
            (&self.dual_key, &self.key)
        } else {
            (&self.key, &self.dual_key)
        }
    }
}

/// Number of rows with one combination of flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCell {
    pub trivial: bool,
    pub commutative: bool,
    pub abelian: bool,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub total: usize,
    pub trivial: usize,
    pub commutative: usize,
    pub abelian: usize,
    pub nonabelian: usize,
    /// Pairs `{d, dual d}` of distinct classes.
    pub dual_pairs: usize,
    pub trivial_dual_pairs: usize,
    pub nontrivial_dual_pairs: usize,
    pub named: usize,
    pub unnamed: usize,
    pub cells: Vec<PropertyCell>,
}

impl ReportSummary {
    fn tally(rows: &[ClassRow]) -> Self {
        let count = |f: &dyn Fn(&ClassRow) -> bool| rows.iter().filter(|r| f(r)).count();
        let paired = |f: &dyn Fn(&ClassRow) -> bool| {
            rows.iter()
                .filter(|r| !r.abelian && r.key < r.dual_key && f(r))
                .count()
        };
        let mut cells: BTreeMap<(bool, bool, bool), usize> = BTreeMap::new();
        for r in rows {
            *cells.entry((r.trivial, r.commutative, r.abelian)).or_default() += 1;
        }
        Self {
            total: rows.len(),
            trivial: count(&|r| r.trivial),
            commutative: count(&|r| r.commutative),
            abelian: count(&|r| r.abelian),
            nonabelian: count(&|r| !r.abelian),
            dual_pairs: paired(&|_| true),
            trivial_dual_pairs: paired(&|r| r.trivial),
            nontrivial_dual_pairs: paired(&|r| !r.trivial),
            named: count(&|r| r.named),
            unnamed: count(&|r| !r.named),
            cells: cells
                .into_iter()
                .map(|((trivial, commutative, abelian), count)| PropertyCell {
                    trivial,
                    commutative,
                    abelian,
                    count,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: usize,
    pub kind: StructureKind,
    /// Sorted so that each dual pair is adjacent, smaller key first.
    pub rows: Vec<ClassRow>,
    pub summary: ReportSummary,
}

impl ClassificationReport {
    fn from_rows(order: usize, kind: StructureKind, mut rows: Vec<ClassRow>) -> Self {
        rows.sort_by(|a, b| a.pair_key().cmp(&b.pair_key()).then_with(|| a.key.cmp(&b.key)));
        let summary = ReportSummary::tally(&rows);
        Self {
            order,
            kind,
            rows,
            summary,
        }
    }

    /// The rows satisfying `keep`, with the summary recounted.
    pub fn restrict(&self, keep: impl Fn(&ClassRow) -> bool) -> Self {
        let rows = self.rows.iter().filter(|r| keep(r)).cloned().collect();
        Self::from_rows(self.order, self.kind, rows)
    }

    pub fn row_named(&self, name: &str) -> Option<&ClassRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    pub fn row_with_key(&self, key: &CanonicalKey) -> Option<&ClassRow> {
        self.rows.iter().find(|r| &r.key == key)
    }
}

/// Canonical keys of the catalog names for one order and kind.
#[derive(Clone, Debug, Default)]
pub struct NameIndex {
    names: BTreeMap<Vec<u8>, &'static str>,
}

impl NameIndex {
    pub fn new(order: usize, kind: StructureKind) -> Self {
        let mut names = BTreeMap::new();
        let mut add = |n: &NamedStructure, d: DiStructure| {
            if d.order() == order {
                names.entry(canonical_form(&d).key).or_insert(n.display);
            }
        };
        for n in semigroup_names() {
            let t = catalog::build(n.grammar).expect("catalog names build");
            add(n, DiStructure::doubled(t));
        }
        let pairs = match kind {
            StructureKind::Semigroup => &[][..],
            StructureKind::Dimonoid => dimonoid_names(),
            StructureKind::Doppelsemigroup => doppelsemigroup_names(),
        };
        for n in pairs {
            add(n, catalog::build_pair(n.grammar).expect("catalog names build"));
        }
        Self { names }
    }

    pub fn lookup(&self, key: &CanonicalKey) -> Option<&'static str> {
        self.names.get(&key.key).copied()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// Name of the class of `d` in the catalog for its kind, if it has one.
/// A pair that is both a dimonoid and a doppelsemigroup is looked up among
/// the dimonoid names first.
pub fn match_names(d: &DiStructure) -> Option<String> {
    let key = canonical_form(d);
    let kinds = [StructureKind::Dimonoid, StructureKind::Doppelsemigroup];
    kinds
        .iter()
        .filter(|&&k| crate::axioms::satisfies(d, k))
        .find_map(|&k| NameIndex::new(d.order(), k).lookup(&key))
        .map(str::to_owned)
}

/// Builds the report for any enumeration result.
pub fn classify(result: &EnumerationResult) -> ClassificationReport {
    let index = NameIndex::new(result.order, result.kind);
    let mut unnamed = 0usize;
    let rows = result
        .classes
        .iter()
        .map(|c| {
            let d = &c.representative;
            let profile = dimonoid_profile(d);
            let dual_key = canonical_form(&catalog::dual_dimonoid(d));
            let (name, named) = match index.lookup(&c.key) {
                Some(n) => (n.to_owned(), true),
                None => {
                    unnamed += 1;
                    (format!("unnamed-{}-{unnamed}", result.order), false)
                }
            };
            ClassRow {
                key: c.key.clone(),
                name,
                named,
                trivial: profile.trivial,
                commutative: profile.commutative,
                abelian: profile.abelian,
                aut: automorphism_group(d),
                dual_key,
                representative: d.clone(),
            }
        })
        .collect();
    ClassificationReport::from_rows(result.order, result.kind, rows)
}

/// [`classify`] for dimonoid enumerations.
pub fn classify_dimonoids(result: &EnumerationResult) -> ClassificationReport {
    debug_assert_eq!(result.kind, StructureKind::Dimonoid);
    classify(result)
}

/// All noncommutative, nonabelian, nontrivial dimonoids of order 3.
pub fn solve_problem1(limits: Limits) -> Result<ClassificationReport> {
    let result = enumerate_dimonoids(3, limits)?;
    Ok(classify_dimonoids(&result).restrict(|r| !r.commutative && !r.abelian && !r.trivial))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(Self::Markdown),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::UnknownFormat(s.to_owned())),
        }
    }
}

pub fn render_report(report: &ClassificationReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Markdown => Ok(render_markdown(report)),
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Json => render_json(report),
    }
}

const COLUMNS_PER_BLOCK: usize = 6;

fn section(out: &mut String, title: &str, rows: &[&ClassRow]) {
    let _ = writeln!(out, "### {title} ({})\n", rows.len());
    let mut chunks: Vec<&[&ClassRow]> = rows.chunks(COLUMNS_PER_BLOCK).collect();
    if chunks.is_empty() {
        chunks.push(&[]);
    }
    for chunk in chunks {
        let mut head = String::from("| D |");
        let mut rule = String::from("|---|");
        let mut aut = String::from("| Aut(D) |");
        for r in chunk {
            let _ = write!(head, " {} |", r.name);
            rule.push_str("---|");
            let _ = write!(aut, " {} |", r.aut);
        }
        let _ = writeln!(out, "{head}\n{rule}\n{aut}\n");
    }
}

fn render_markdown(report: &ClassificationReport) -> String {
    let s = &report.summary;
    let mut out = String::new();
    let _ = writeln!(out, "## Order-{} {} classes\n", report.order, report.kind);
    let _ = writeln!(
        out,
        "total {}; trivial {}; commutative {}; abelian {}; nonabelian {}; dual pairs {} \
         (trivial {}, nontrivial {}); unnamed {}\n",
        s.total,
        s.trivial,
        s.commutative,
        s.abelian,
        s.nonabelian,
        s.dual_pairs,
        s.trivial_dual_pairs,
        s.nontrivial_dual_pairs,
        s.unnamed
    );
    let pick = |f: &dyn Fn(&ClassRow) -> bool| -> Vec<&ClassRow> {
        report.rows.iter().filter(|r| f(r)).collect()
    };
    section(&mut out, "Commutative", &pick(&|r| r.named && r.commutative));
    section(
        &mut out,
        "Abelian noncommutative",
        &pick(&|r| r.named && r.abelian && !r.commutative),
    );
    section(
        &mut out,
        "Nonabelian noncommutative",
        &pick(&|r| r.named && !r.abelian && !r.commutative),
    );
    section(&mut out, "Unnamed", &pick(&|r| !r.named));
    out
}

const CSV_HEADER: [&str; 9] = [
    "key",
    "name",
    "named",
    "trivial",
    "commutative",
    "abelian",
    "aut",
    "aut_order",
    "dual_key",
];

fn render_csv(report: &ClassificationReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in &report.rows {
        w.write_record([
            r.key.hex(),
            r.name.clone(),
            r.named.to_string(),
            r.trivial.to_string(),
            r.commutative.to_string(),
            r.abelian.to_string(),
            r.aut.to_string(),
            r.aut.order.to_string(),
            r.dual_key.hex(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

fn render_json(report: &ClassificationReport) -> Result<String> {
    let rows: Vec<_> = report
        .rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "key": r.key.hex(),
                "name": r.name,
                "named": r.named,
                "trivial": r.trivial,
                "commutative": r.commutative,
                "abelian": r.abelian,
                "aut": r.aut.to_string(),
                "aut_order": r.aut.order,
                "dual_key": r.dual_key.hex(),
                "left": r.representative.left().rows(),
                "right": r.representative.right().rows(),
            })
        })
        .collect();
    let doc = serde_json::json!({
        "schema": REPORT_SCHEMA,
        "order": report.order,
        "kind": report.kind,
        "summary": report.summary,
        "rows": rows,
    });
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}
