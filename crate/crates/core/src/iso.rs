//! Canonical forms, isomorphism tests and automorphism groups.
//!
//! The canonical key of a pair is the lexicographically least byte string
//! `left ‖ right` (row-major) over all relabelings of the carrier. Two pairs
//! are isomorphic exactly when their keys are equal. The search walks the
//! `n!` permutations in lexicographic order of images and abandons a
//! candidate as soon as its partial key exceeds the best one found, so the
//! recorded witness is the least permutation attaining the minimum.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tables::{DiStructure, OpTable, Permutation};

/// Minimal relabeled serialization of a structure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CanonicalKey {
    pub order: usize,
    #[serde(with = "hex_bytes")]
    pub key: Vec<u8>,
    pub witness: Permutation,
}

impl CanonicalKey {
    pub fn hex(&self) -> String {
        hex_bytes::encode(&self.key)
    }

    /// The canonical representative encoded by a pair key.
    pub fn to_distructure(&self) -> DiStructure {
        let n = self.order;
        let nn = n * n;
        assert_eq!(self.key.len(), 2 * nn, "not a pair key");
        DiStructure::new(
            OpTable::from_raw(n, self.key[..nn].to_vec()),
            OpTable::from_raw(n, self.key[nn..].to_vec()),
        )
        .expect("equal orders")
    }

    /// The canonical representative encoded by a single-table key.
    pub fn to_table(&self) -> OpTable {
        assert_eq!(self.key.len(), self.order * self.order, "not a table key");
        OpTable::from_raw(self.order, self.key.clone())
    }
}

// Keys compare by (order, bytes); the witness does not take part.
impl PartialEq for CanonicalKey {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.key == other.key
    }
}

impl Eq for CanonicalKey {}

impl std::hash::Hash for CanonicalKey {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.key.hash(state);
    }
}

impl Ord for CanonicalKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.order, &self.key).cmp(&(other.order, &other.key))
    }
}

impl PartialOrd for CanonicalKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

pub(crate) mod hex_bytes {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn encode(bytes: &[u8]) -> String {
        bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn decode(s: &str) -> Option<Vec<u8>> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect()
    }

    pub fn serialize<S: Serializer>(bytes: &[u8], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&encode(bytes))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u8>, D::Error> {
        let s = String::deserialize(d)?;
        decode(&s).ok_or_else(|| serde::de::Error::custom("invalid hex key"))
    }
}

/// Lexicographic minimum of the relabeled concatenation of `tables`.
fn minimise(tables: &[&OpTable]) -> CanonicalKey {
    let n = tables[0].order();
    let nn = n * n;
    let len = nn * tables.len();
    let mut best: Option<(Vec<u8>, Permutation)> = None;
    let mut cand = vec![0u8; len];
    let mut inv = vec![0usize; n];
    for p in Permutation::all(n) {
        for (x, &y) in p.raw().iter().enumerate() {
            inv[y as usize] = x;
        }
        // relabeled entry at (i, j) is p(t(p⁻¹ i, p⁻¹ j))
        let mut state = if best.is_some() {
            Ordering::Equal
        } else {
            Ordering::Less
        };
        let img = p.raw();
        'fill: for (k, t) in tables.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let idx = k * nn + i * n + j;
                    let v = img[t.get(inv[i], inv[j])];
                    cand[idx] = v;
                    if state == Ordering::Equal {
                        let b = best.as_ref().unwrap().0[idx];
                        match v.cmp(&b) {
                            Ordering::Less => state = Ordering::Less,
                            Ordering::Greater => {
                                state = Ordering::Greater;
                                break 'fill;
                            }
                            Ordering::Equal => {}
                        }
                    }
                }
            }
        }
        if state == Ordering::Less {
            best = Some((cand.clone(), p));
        }
    }
    let (key, witness) = best.expect("at least one permutation");
    CanonicalKey {
        order: n,
        key,
        witness,
    }
}

/// Canonical key of a pair of tables.
pub fn canonical_form(d: &DiStructure) -> CanonicalKey {
    minimise(&[d.left(), d.right()])
}

/// Canonical key of a single table.
pub fn canonical_table(t: &OpTable) -> CanonicalKey {
    minimise(&[t])
}

fn is_iso_under(p: &Permutation, a: &OpTable, b: &OpTable) -> bool {
    let n = a.order();
    (0..n).all(|x| (0..n).all(|y| p.apply(a.get(x, y)) == b.get(p.apply(x), p.apply(y))))
}

/// A relabeling `ψ` with `ψ(x ⊣₁ y) = ψ(x) ⊣₂ ψ(y)` and the same for `⊢`,
/// found by direct search. Structures of different orders are never
/// isomorphic.
pub fn are_isomorphic(d1: &DiStructure, d2: &DiStructure) -> Option<Permutation> {
    if d1.order() != d2.order() {
        return None;
    }
    Permutation::all(d1.order()).find(|p| {
        is_iso_under(p, d1.left(), d2.left()) && is_iso_under(p, d1.right(), d2.right())
    })
}

pub fn tables_isomorphic(a: &OpTable, b: &OpTable) -> Option<Permutation> {
    if a.order() != b.order() {
        return None;
    }
    Permutation::all(a.order()).find(|p| is_iso_under(p, a, b))
}

/// All permutations preserving both tables, in lexicographic order.
pub fn automorphisms(d: &DiStructure) -> Vec<Permutation> {
    Permutation::all(d.order())
        .filter(|p| is_iso_under(p, d.left(), d.left()) && is_iso_under(p, d.right(), d.right()))
        .collect()
}

pub fn table_automorphisms(t: &OpTable) -> Vec<Permutation> {
    Permutation::all(t.order())
        .filter(|p| is_iso_under(p, t, t))
        .collect()
}

/// Abstract group named by order, commutativity and element orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupName {
    C1,
    C2,
    C3,
    C4,
    V4,
    C5,
    C6,
    S3,
    Other {
        order: usize,
        abelian: bool,
        element_orders: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupId {
    pub order: usize,
    pub name: GroupName,
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            GroupName::C1 => f.write_str("C1"),
            GroupName::C2 => f.write_str("C2"),
            GroupName::C3 => f.write_str("C3"),
            GroupName::C4 => f.write_str("C4"),
            GroupName::V4 => f.write_str("V4"),
            GroupName::C5 => f.write_str("C5"),
            GroupName::C6 => f.write_str("C6"),
            GroupName::S3 => f.write_str("S3"),
            GroupName::Other {
                order,
                abelian,
                element_orders,
            } => {
                let kind = if *abelian { "abelian" } else { "nonabelian" };
                write!(f, "G{order}[{kind};")?;
                for (i, o) in element_orders.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{o}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// Names a finite permutation group from its order, whether it is abelian,
/// and the multiset of its element orders. Fails unless `perms` is a group.
pub fn identify_group(perms: &[Permutation]) -> Result<GroupId> {
    check_group(perms)?;
    let order = perms.len();
    let abelian = perms
        .iter()
        .all(|a| perms.iter().all(|b| a.compose(b) == b.compose(a)));
    let mut element_orders: Vec<usize> = perms.iter().map(Permutation::element_order).collect();
    element_orders.sort_unstable();
    let max = element_orders.last().copied().unwrap_or(1);
    let name = match (order, abelian) {
        (1, _) => GroupName::C1,
        (2, _) => GroupName::C2,
        (3, _) => GroupName::C3,
        (4, true) if max == 4 => GroupName::C4,
        (4, true) => GroupName::V4,
        (5, _) => GroupName::C5,
        (6, true) => GroupName::C6,
        (6, false) => GroupName::S3,
        _ => GroupName::Other {
            order,
            abelian,
            element_orders,
        },
    };
    Ok(GroupId { order, name })
}

fn check_group(perms: &[Permutation]) -> Result<()> {
    let Some(first) = perms.first() else {
        return Err(Error::NotGroup("empty set".into()));
    };
    let n = first.len();
    if perms.iter().any(|p| p.len() != n) {
        return Err(Error::NotGroup("mixed degrees".into()));
    }
    let set: BTreeSet<&Permutation> = perms.iter().collect();
    if set.len() != perms.len() {
        return Err(Error::NotGroup("repeated elements".into()));
    }
    if !set.contains(&Permutation::identity(n)) {
        return Err(Error::NotGroup("missing identity".into()));
    }
    for a in perms {
        if !set.contains(&a.inverse()) {
            return Err(Error::NotGroup(format!("{a} has no inverse in the set")));
        }
        for b in perms {
            if !set.contains(&a.compose(b)) {
                return Err(Error::NotGroup(format!("{a} ∘ {b} leaves the set")));
            }
        }
    }
    Ok(())
}

/// `identify_group(automorphisms(d))`.
pub fn automorphism_group(d: &DiStructure) -> GroupId {
    identify_group(&automorphisms(d)).expect("automorphisms form a group")
}

pub fn table_automorphism_group(t: &OpTable) -> GroupId {
    identify_group(&table_automorphisms(t)).expect("automorphisms form a group")
}

/// Partitions `items` into isomorphism classes by pairwise search, keeping
/// the first member of each class. Quadratic; used as a cross-check of
/// key-based deduplication.
pub fn dedup_pairwise(items: &[DiStructure]) -> Vec<DiStructure> {
    let mut reps: Vec<DiStructure> = Vec::new();
    // bucket by cheap invariants before searching
    let mut buckets: BTreeMap<(Vec<usize>, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for d in items {
        let inv = (histogram(d.left()), histogram(d.right()));
        let bucket = buckets.entry(inv).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&reps[i], d).is_some()) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(d.clone());
    }
    reps
}

/// Sorted counts of each value in the table (a relabeling invariant).
fn histogram(t: &OpTable) -> Vec<usize> {
    let mut h = vec![0; t.order()];
    for &v in t.entries() {
        h[v as usize] += 1;
    }
    h.sort_unstable();
    h
}
