//! Cayley tables, pairs of tables, and relabelings of the carrier.
//!
//! Elements of an order-`n` structure are always the integers `0..n`. An
//! [`OpTable`] stores the products row-major: the entry at `(x, y)` is
//! `x * y`, with `x` selecting the row.
//!
//! The text form of a table is `n` lines of `n` space-separated integers.
//! A [`DiStructure`] is written as two such blocks (the `⊣` table first)
//! separated by one blank line.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One binary operation on `{0, …, n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct OpTable {
    order: usize,
    entries: Vec<u8>,
}

impl OpTable {
    /// Builds a table from row-major entries, checking shape and closure.
    pub fn new(order: usize, entries: Vec<u8>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyCarrier);
        }
        if order > u8::MAX as usize {
            return Err(Error::UnsupportedOrder {
                order,
                limit: u8::MAX as usize,
                hint: "",
            });
        }
        if entries.len() != order * order {
            return Err(Error::Dimension {
                expected: order * order,
                found: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|&v| v as usize >= order) {
            return Err(Error::OutOfRange {
                row: pos / order,
                col: pos % order,
                value: entries[pos] as usize,
                order,
            });
        }
        Ok(Self { order, entries })
    }

    /// Tabulates `f` over all pairs; fails if `f` leaves the carrier.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = f(x, y);
                if v >= order {
                    return Err(Error::OutOfRange {
                        row: x,
                        col: y,
                        value: v,
                        order,
                    });
                }
                entries.push(v as u8);
            }
        }
        Self::new(order, entries)
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Parse {
                    line: r + 1,
                    col: row.len().min(order) + 1,
                    msg: format!("expected {order} entries, found {}", row.len()),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::OutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order,
                    });
                }
                entries.push(v as u8);
            }
        }
        Self::new(order, entries)
    }

    pub(crate) fn from_raw(order: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), order * order);
        Self { order, entries }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `x * y`.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.order + y] as usize
    }

    #[inline]
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// The table of `x *ᵈ y = y * x`.
    pub fn transpose(&self) -> Self {
        let n = self.order;
        let mut entries = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[y * n + x] = self.entries[x * n + y];
            }
        }
        Self::from_raw(n, entries)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Relabels the carrier by `p`: the result `t'` satisfies
    /// `t'(p(x), p(y)) = p(t(x, y))`.
    pub fn permuted(&self, p: &Permutation) -> Result<Self> {
        if p.len() != self.order {
            return Err(Error::Dimension {
                expected: self.order,
                found: p.len(),
            });
        }
        Ok(self.permuted_unchecked(p))
    }

    pub(crate) fn permuted_unchecked(&self, p: &Permutation) -> Self {
        let n = self.order;
        let mut entries = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[p.apply(x) * n + p.apply(y)] = p.apply(self.get(x, y)) as u8;
            }
        }
        Self::from_raw(n, entries)
    }

    /// Parses the text form, inferring the order from the number of rows.
    pub fn parse(text: &str) -> Result<Self> {
        parse_block(text, 0, None)
    }

    /// Parses the text form against a declared order.
    pub fn parse_with_order(text: &str, order: usize) -> Result<Self> {
        parse_block(text, 0, Some(order))
    }
}

/// Relabels `t` along `p`; see [`OpTable::permuted`].
pub fn apply_permutation(t: &OpTable, p: &Permutation) -> Result<OpTable> {
    t.permuted(p)
}

impl fmt::Display for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.order).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OpTable[")?;
        for (i, row) in self.entries.chunks(self.order).enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for v in row {
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

impl FromStr for OpTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    order: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableRepr> for OpTable {
    type Error = Error;

    fn try_from(r: TableRepr) -> Result<Self> {
        let t = OpTable::from_rows(&r.rows)?;
        if t.order != r.order {
            return Err(Error::Dimension {
                expected: r.order,
                found: t.order,
            });
        }
        Ok(t)
    }
}

impl From<OpTable> for TableRepr {
    fn from(t: OpTable) -> Self {
        TableRepr {
            order: t.order,
            rows: t.rows(),
        }
    }
}

/// An ordered pair of tables of equal order: `left` is `⊣`, `right` is `⊢`.
///
/// No axioms are implied; see [`crate::axioms`] for the checks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PairRepr", into = "PairRepr")]
pub struct DiStructure {
    left: OpTable,
    right: OpTable,
}

impl DiStructure {
    pub fn new(left: OpTable, right: OpTable) -> Result<Self> {
        if left.order() != right.order() {
            return Err(Error::Dimension {
                expected: left.order(),
                found: right.order(),
            });
        }
        Ok(Self { left, right })
    }

    /// Both operations equal to `t`.
    pub fn doubled(t: OpTable) -> Self {
        Self {
            right: t.clone(),
            left: t,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.left.order()
    }

    /// The `⊣` table.
    #[inline]
    pub fn left(&self) -> &OpTable {
        &self.left
    }

    /// The `⊢` table.
    #[inline]
    pub fn right(&self) -> &OpTable {
        &self.right
    }

    pub fn into_parts(self) -> (OpTable, OpTable) {
        (self.left, self.right)
    }

    /// The dual pair: `x ⊣ᵈ y = y ⊢ x` and `x ⊢ᵈ y = y ⊣ x`.
    pub fn dual(&self) -> Self {
        Self {
            left: self.right.transpose(),
            right: self.left.transpose(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.left == self.right
    }

    pub fn permuted(&self, p: &Permutation) -> Result<Self> {
        Ok(Self {
            left: self.left.permuted(p)?,
            right: self.right.permuted(p)?,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().collect();
        let Some(sep) = lines.iter().position(|l| l.trim().is_empty()) else {
            return Err(Error::Parse {
                line: lines.len() + 1,
                col: 1,
                msg: "expected two blocks separated by a blank line".into(),
            });
        };
        let first = lines[..sep].join("\n");
        let rest = &lines[sep + 1..];
        let second = rest.join("\n");
        let left = parse_block(&first, 0, None)?;
        if let Some(extra) = rest.iter().position(|l| l.trim().is_empty()) {
            if rest[extra..].iter().any(|l| !l.trim().is_empty()) {
                return Err(Error::Parse {
                    line: sep + 2 + extra,
                    col: 1,
                    msg: "more than two blocks".into(),
                });
            }
        }
        let right = parse_block(second.trim_end(), sep + 1, Some(left.order()))?;
        Self::new(left, right)
    }
}

impl fmt::Display for DiStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n\n{}", self.left, self.right)
    }
}

impl fmt::Debug for DiStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.left, self.right)
    }
}

impl FromStr for DiStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    order: usize,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl TryFrom<PairRepr> for DiStructure {
    type Error = Error;

    fn try_from(r: PairRepr) -> Result<Self> {
        let left = OpTable::from_rows(&r.left)?;
        let right = OpTable::from_rows(&r.right)?;
        if left.order() != r.order {
            return Err(Error::Dimension {
                expected: r.order,
                found: left.order(),
            });
        }
        DiStructure::new(left, right)
    }
}

impl From<DiStructure> for PairRepr {
    fn from(d: DiStructure) -> Self {
        PairRepr {
            order: d.order(),
            left: d.left.rows(),
            right: d.right.rows(),
        }
    }
}

fn parse_block(text: &str, line_offset: usize, declared: Option<usize>) -> Result<OpTable> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut positions: Vec<Vec<usize>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = line_offset + i + 1;
        if line.trim().is_empty() {
            return Err(Error::Parse {
                line: line_no,
                col: 1,
                msg: "unexpected blank line".into(),
            });
        }
        let mut row = Vec::new();
        let mut cols = Vec::new();
        let mut col = 0;
        for tok in line.split(' ') {
            let start = col + 1;
            col += tok.len() + 1;
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                col: start,
                msg: format!("`{tok}` is not a non-negative integer"),
            })?;
            row.push(v);
            cols.push(start);
        }
        rows.push(row);
        positions.push(cols);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: line_offset + 1,
            col: 1,
            msg: "empty table".into(),
        });
    }
    let order = declared.unwrap_or(rows.len());
    if rows.len() != order {
        return Err(Error::Parse {
            line: line_offset + rows.len().min(order) + 1,
            col: 1,
            msg: format!("expected {order} rows, found {}", rows.len()),
        });
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(Error::Parse {
                line: line_offset + r + 1,
                col: 1,
                msg: format!("expected {order} entries, found {}", row.len()),
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= order {
                return Err(Error::Parse {
                    line: line_offset + r + 1,
                    col: positions[r][c],
                    msg: format!("value {v} out of range for order {order}"),
                });
            }
        }
    }
    OpTable::from_rows(&rows)
}

/// A bijection of `{0, …, n-1}`.
///
/// Composition follows function notation: `p.compose(&q)` is `p ∘ q`, the
/// map `x ↦ p(q(x))`. Relabeling by `q` and then by `p` equals relabeling
/// once by `p.compose(&q)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    /// All permutations of `n` points in lexicographic order of images.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0..n as u8)
            .permutations(n)
            .map(|images| Permutation { images })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u8;
        }
        Self { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Self {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Order of the permutation as a group element.
    pub fn element_order(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut order = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
