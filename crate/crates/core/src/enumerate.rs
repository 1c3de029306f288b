//! Exhaustive enumeration of associative tables and of the pairs built
//! from them.
//!
//! Associative tables are generated by backtracking over the cells in
//! row-major order, trying values in increasing order, and rejecting a
//! partial table as soon as some fully determined triple breaks
//! associativity. The output is therefore in lexicographic order.
//!
//! Pairs are formed from the labeled associative tables of one order. The
//! outer (left-table) index range is split into chunks that workers filter
//! independently; each worker returns its set of canonical keys and the
//! sets are merged and sorted, so the result does not depend on the number
//! of workers.

use std::collections::BTreeSet;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::axioms::{first_failure, Axiom, StructureKind};
use crate::error::{Error, Result};
use crate::iso::{canonical_form, CanonicalKey};
use crate::tables::{DiStructure, OpTable};

/// Largest order enumerated without [`Limits::allow_large`].
pub const DEFAULT_MAX_ORDER: usize = 4;
/// Largest order ever attempted.
pub const HARD_MAX_ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub allow_large: bool,
    pub workers: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            allow_large: false,
            workers: 1,
        }
    }
}

impl Limits {
    pub fn workers(workers: usize) -> Self {
        Self {
            workers,
            ..Self::default()
        }
    }

    fn admit(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > HARD_MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                order: n,
                limit: HARD_MAX_ORDER,
                hint: "",
            });
        }
        if n > DEFAULT_MAX_ORDER && !self.allow_large {
            return Err(Error::UnsupportedOrder {
                order: n,
                limit: DEFAULT_MAX_ORDER,
                hint: "; pass allow-large to attempt order 5",
            });
        }
        Ok(())
    }
}

/// One isomorphism class: its key (witness is the identity, since the
/// representative is the canonical copy itself) and representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRep {
    pub key: CanonicalKey,
    pub representative: DiStructure,
}

impl ClassRep {
    fn from_key_bytes(order: usize, key: Vec<u8>) -> Self {
        let nn = order * order;
        let rep = DiStructure::new(
            OpTable::from_raw(order, key[..nn].to_vec()),
            OpTable::from_raw(order, key[nn..].to_vec()),
        )
        .expect("equal orders");
        let key = canonical_form(&rep);
        debug_assert!(key.witness.is_identity());
        Self {
            key,
            representative: rep,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub order: usize,
    pub kind: StructureKind,
    /// Number of labeled structures on `0..n`.
    pub labeled_count: u64,
    /// One entry per isomorphism class, sorted by key. Semigroup classes are
    /// keyed by the doubled pair `(t, t)`.
    pub classes: Vec<ClassRep>,
}

impl EnumerationResult {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Writes one JSON object per class.
    pub fn write_jsonl(&self, mut out: impl Write) -> Result<()> {
        for c in &self.classes {
            let line = serde_json::json!({
                "key": c.key.hex(),
                "kind": self.kind,
                "order": self.order,
                "left": c.representative.left().rows(),
                "right": c.representative.right().rows(),
            });
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    pub fn summary(&self) -> Summary {
        Summary {
            order: self.order,
            kind: self.kind,
            labeled_count: self.labeled_count,
            class_count: self.classes.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub order: usize,
    pub kind: StructureKind,
    pub labeled_count: u64,
    pub class_count: usize,
}

/// Every associative table on `0..n`, in lexicographic order.
pub fn enumerate_associative_tables(n: usize, limits: Limits) -> Result<Vec<OpTable>> {
    limits.admit(n)?;
    let mut search = TableSearch::new(n);
    let mut out = Vec::new();
    search.run(0, &mut out);
    Ok(out)
}

const UNSET: u8 = u8::MAX;

struct TableSearch {
    n: usize,
    cells: Vec<u8>,
}

impl TableSearch {
    fn new(n: usize) -> Self {
        Self {
            n,
            cells: vec![UNSET; n * n],
        }
    }

    #[inline]
    fn at(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.cells[x * self.n + y];
        (v != UNSET).then_some(v as usize)
    }

    /// `(a*b)*c = a*(b*c)` or some cell is still open.
    #[inline]
    fn triple_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let (Some(ab), Some(bc)) = (self.at(a, b), self.at(b, c)) else {
            return true;
        };
        match (self.at(ab, c), self.at(a, bc)) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        }
    }

    /// Checks the triples in which cell `(x, y)` takes part.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let n = self.n;
        for z in 0..n {
            if !self.triple_ok(x, y, z) || !self.triple_ok(z, x, y) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                // (a*b)*y with a*b = x, and x*(a*b) with a*b = y
                let v = self.at(a, b);
                if v == Some(x) && !self.triple_ok(a, b, y) {
                    return false;
                }
                if v == Some(y) && !self.triple_ok(x, a, b) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, cell: usize, out: &mut Vec<OpTable>) {
        let n = self.n;
        if cell == n * n {
            out.push(OpTable::from_raw(n, self.cells.clone()));
            return;
        }
        let (x, y) = (cell / n, cell % n);
        for v in 0..n as u8 {
            self.cells[cell] = v;
            if self.consistent(x, y) {
                self.run(cell + 1, out);
            }
        }
        self.cells[cell] = UNSET;
    }
}

/// Semigroups of order `n`, labeled and up to isomorphism.
pub fn enumerate_semigroups(n: usize, limits: Limits) -> Result<EnumerationResult> {
    let tables = enumerate_associative_tables(n, limits)?;
    let keys: BTreeSet<Vec<u8>> = with_pool(limits.workers, || {
        tables
            .par_iter()
            .map(|t| canonical_form(&DiStructure::doubled(t.clone())).key)
            .collect()
    });
    Ok(EnumerationResult {
        order: n,
        kind: StructureKind::Semigroup,
        labeled_count: tables.len() as u64,
        classes: keys
            .into_iter()
            .map(|k| ClassRep::from_key_bytes(n, k))
            .collect(),
    })
}

pub fn enumerate_dimonoids(n: usize, limits: Limits) -> Result<EnumerationResult> {
    enumerate_pairs(n, StructureKind::Dimonoid, limits)
}

pub fn enumerate_doppelsemigroups(n: usize, limits: Limits) -> Result<EnumerationResult> {
    enumerate_pairs(n, StructureKind::Doppelsemigroup, limits)
}

/// Dispatches on `kind`.
pub fn enumerate(n: usize, kind: StructureKind, limits: Limits) -> Result<EnumerationResult> {
    match kind {
        StructureKind::Semigroup => enumerate_semigroups(n, limits),
        _ => enumerate_pairs(n, kind, limits),
    }
}

/// All labeled pairs of associative tables of order `n` that satisfy the
/// axioms of `kind` (both coordinates are associative by construction).
pub fn labeled_pairs(n: usize, kind: StructureKind, limits: Limits) -> Result<Vec<DiStructure>> {
    let tables = enumerate_associative_tables(n, limits)?;
    let filter = pair_filter(kind);
    Ok(with_pool(limits.workers, || {
        tables
            .par_iter()
            .flat_map_iter(|l| {
                tables.iter().filter_map(move |r| {
                    let d = DiStructure::new(l.clone(), r.clone()).expect("same order");
                    filter.iter().all(|&a| first_failure(&d, a).is_none()).then_some(d)
                })
            })
            .collect()
    }))
}

fn pair_filter(kind: StructureKind) -> &'static [Axiom] {
    // D2 is shared by both kinds and checked first
    match kind {
        StructureKind::Dimonoid => &[Axiom::D2, Axiom::D1, Axiom::D3],
        StructureKind::Doppelsemigroup => &[Axiom::D2, Axiom::D4],
        StructureKind::Semigroup => &[],
    }
}

fn enumerate_pairs(n: usize, kind: StructureKind, limits: Limits) -> Result<EnumerationResult> {
    let tables = enumerate_associative_tables(n, limits)?;
    let filter = pair_filter(kind);
    let chunk = tables.len().div_ceil(limits.workers.max(1) * 8).max(1);
    let partials: Vec<(u64, BTreeSet<Vec<u8>>)> = with_pool(limits.workers, || {
        tables
            .par_chunks(chunk)
            .map(|lefts| {
                let mut count = 0u64;
                let mut keys = BTreeSet::new();
                for l in lefts {
                    for r in &tables {
                        let d = DiStructure::new(l.clone(), r.clone()).expect("same order");
                        if filter.iter().all(|&a| first_failure(&d, a).is_none()) {
                            count += 1;
                            keys.insert(canonical_form(&d).key);
                        }
                    }
                }
                (count, keys)
            })
            .collect()
    });
    let mut labeled_count = 0;
    let mut keys = BTreeSet::new();
    for (c, k) in partials {
        labeled_count += c;
        keys.extend(k);
    }
    Ok(EnumerationResult {
        order: n,
        kind,
        labeled_count,
        classes: keys
            .into_iter()
            .map(|k| ClassRep::from_key_bytes(n, k))
            .collect(),
    })
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
    {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
