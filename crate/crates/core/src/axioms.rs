//! Associativity, the dimonoid and doppelsemigroup axioms, and the
//! element roles and structural predicates of finite semigroups.
//!
//! With `⊣` the left table and `⊢` the right table, the identities are
//!
//! | name | identity |
//! |------|----------|
//! | D1 | `(x ⊣ y) ⊣ z = x ⊣ (y ⊢ z)` |
//! | D2 | `(x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)` |
//! | D3 | `(x ⊣ y) ⊢ z = x ⊢ (y ⊢ z)` |
//! | D4 | `(x ⊣ y) ⊢ z = x ⊣ (y ⊢ z)` |
//!
//! A dimonoid has both tables associative and satisfies D1, D2, D3. A
//! doppelsemigroup has both tables associative and satisfies D2 and D4.
//!
//! Every scan runs over triples `(x, y, z)` in lexicographic order and stops
//! at the first failure, which becomes the witness.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tables::{DiStructure, OpTable};

pub type Triple = [usize; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    LeftAssociative,
    RightAssociative,
    D1,
    D2,
    D3,
    D4,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::LeftAssociative,
        Axiom::RightAssociative,
        Axiom::D1,
        Axiom::D2,
        Axiom::D3,
        Axiom::D4,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Semigroup,
    Doppelsemigroup,
    Dimonoid,
}

impl StructureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureKind::Semigroup => "semigroup",
            StructureKind::Doppelsemigroup => "doppelsemigroup",
            StructureKind::Dimonoid => "dimonoid",
        }
    }

    /// Axioms required of a pair of this kind. Semigroups are checked as
    /// doubled pairs and need only associativity.
    pub fn axioms(self) -> &'static [Axiom] {
        match self {
            StructureKind::Semigroup => &[Axiom::LeftAssociative, Axiom::RightAssociative],
            StructureKind::Doppelsemigroup => &[
                Axiom::LeftAssociative,
                Axiom::RightAssociative,
                Axiom::D2,
                Axiom::D4,
            ],
            StructureKind::Dimonoid => &[
                Axiom::LeftAssociative,
                Axiom::RightAssociative,
                Axiom::D1,
                Axiom::D2,
                Axiom::D3,
            ],
        }
    }
}

impl std::fmt::Display for StructureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for StructureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semigroup" => Ok(StructureKind::Semigroup),
            "doppelsemigroup" | "doppel" => Ok(StructureKind::Doppelsemigroup),
            "dimonoid" => Ok(StructureKind::Dimonoid),
            _ => Err(Error::Name {
                name: s.into(),
                msg: "expected semigroup, doppelsemigroup or dimonoid".into(),
            }),
        }
    }
}

/// First failing triple of `axiom` on `d`, or `None` if it holds.
pub fn first_failure(d: &DiStructure, axiom: Axiom) -> Option<Triple> {
    let (l, r) = (d.left(), d.right());
    match axiom {
        Axiom::LeftAssociative => associativity_failure(l),
        Axiom::RightAssociative => associativity_failure(r),
        // (x ⊣ y) ⊣ z = x ⊣ (y ⊢ z)
        Axiom::D1 => scan(l.order(), |x, y, z| {
            l.get(l.get(x, y), z) == l.get(x, r.get(y, z))
        }),
        // (x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)
        Axiom::D2 => scan(l.order(), |x, y, z| {
            l.get(r.get(x, y), z) == r.get(x, l.get(y, z))
        }),
        // (x ⊣ y) ⊢ z = x ⊢ (y ⊢ z)
        Axiom::D3 => scan(l.order(), |x, y, z| {
            r.get(l.get(x, y), z) == r.get(x, r.get(y, z))
        }),
        // (x ⊣ y) ⊢ z = x ⊣ (y ⊢ z)
        Axiom::D4 => scan(l.order(), |x, y, z| {
            r.get(l.get(x, y), z) == l.get(x, r.get(y, z))
        }),
    }
}

#[inline]
fn scan(n: usize, mut holds: impl FnMut(usize, usize, usize) -> bool) -> Option<Triple> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// First triple with `(x*y)*z ≠ x*(y*z)`, if any.
pub fn associativity_failure(t: &OpTable) -> Option<Triple> {
    scan(t.order(), |x, y, z| t.get(t.get(x, y), z) == t.get(x, t.get(y, z)))
}

pub fn is_associative(t: &OpTable) -> bool {
    associativity_failure(t).is_none()
}

/// Outcome of checking all six identities on a pair of tables.
///
/// `first_failure` holds the lexicographically first failing triple of each
/// identity that does not hold; a flag is `false` exactly when its witness is
/// present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub kind: StructureKind,
    pub left_associative: bool,
    pub right_associative: bool,
    pub d1: bool,
    pub d2: bool,
    pub d3: bool,
    pub d4: bool,
    pub first_failure: Witnesses,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_associative: Option<Triple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_associative: Option<Triple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<Triple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<Triple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d3: Option<Triple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d4: Option<Triple>,
}

impl Witnesses {
    pub fn get(&self, axiom: Axiom) -> Option<Triple> {
        match axiom {
            Axiom::LeftAssociative => self.left_associative,
            Axiom::RightAssociative => self.right_associative,
            Axiom::D1 => self.d1,
            Axiom::D2 => self.d2,
            Axiom::D3 => self.d3,
            Axiom::D4 => self.d4,
        }
    }
}

impl AxiomVerdict {
    fn compute(d: &DiStructure, kind: StructureKind) -> Self {
        let w = Witnesses {
            left_associative: first_failure(d, Axiom::LeftAssociative),
            right_associative: first_failure(d, Axiom::RightAssociative),
            d1: first_failure(d, Axiom::D1),
            d2: first_failure(d, Axiom::D2),
            d3: first_failure(d, Axiom::D3),
            d4: first_failure(d, Axiom::D4),
        };
        Self {
            kind,
            left_associative: w.left_associative.is_none(),
            right_associative: w.right_associative.is_none(),
            d1: w.d1.is_none(),
            d2: w.d2.is_none(),
            d3: w.d3.is_none(),
            d4: w.d4.is_none(),
            first_failure: w,
        }
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.first_failure.get(axiom).is_none()
    }

    /// Whether every identity required by `kind` holds.
    pub fn passes(&self) -> bool {
        self.kind.axioms().iter().all(|&a| self.holds(a))
    }

    /// Required identities that fail, in declaration order.
    pub fn failed(&self) -> Vec<Axiom> {
        self.kind
            .axioms()
            .iter()
            .copied()
            .filter(|&a| !self.holds(a))
            .collect()
    }
}

/// Checks both associativities and D1, D2, D3 (D4 is reported too).
pub fn check_dimonoid(d: &DiStructure) -> AxiomVerdict {
    AxiomVerdict::compute(d, StructureKind::Dimonoid)
}

/// Checks both associativities and D2, D4 (D1 and D3 are reported too).
pub fn check_doppelsemigroup(d: &DiStructure) -> AxiomVerdict {
    AxiomVerdict::compute(d, StructureKind::Doppelsemigroup)
}

pub fn check(d: &DiStructure, kind: StructureKind) -> AxiomVerdict {
    AxiomVerdict::compute(d, kind)
}

pub fn is_dimonoid(d: &DiStructure) -> bool {
    satisfies(d, StructureKind::Dimonoid)
}

pub fn is_doppelsemigroup(d: &DiStructure) -> bool {
    satisfies(d, StructureKind::Doppelsemigroup)
}

/// Short-circuiting form of `check(d, kind).passes()`.
pub fn satisfies(d: &DiStructure, kind: StructureKind) -> bool {
    kind.axioms()
        .iter()
        .all(|&a| first_failure(d, a).is_none())
}

/// Element roles and identities of a finite semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupProfile {
    pub order: usize,
    pub commutative: bool,
    pub band: bool,
    pub semilattice: bool,
    /// `s*x*y = s*y*x` for all `s, x, y`.
    pub right_commutative: bool,
    pub idempotents: Vec<usize>,
    pub left_identities: Vec<usize>,
    pub right_identities: Vec<usize>,
    pub identity: Option<usize>,
    pub left_zeros: Vec<usize>,
    pub right_zeros: Vec<usize>,
    pub zero: Option<usize>,
    pub monogenic: Option<Monogenic>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monogenic {
    pub generator: usize,
    pub index: usize,
    pub period: usize,
}

/// Computes the profile of an associative table; non-associative tables
/// are refused with their first failing triple.
pub fn semigroup_profile(t: &OpTable) -> Result<SemigroupProfile> {
    if let Some(w) = associativity_failure(t) {
        return Err(Error::NotAssociative(w));
    }
    let n = t.order();
    let all = 0..n;
    let idempotents: Vec<usize> = all.clone().filter(|&e| t.get(e, e) == e).collect();
    let left_identities = left_identities(t);
    let right_identities = right_identities(t);
    let identity = left_identities
        .iter()
        .copied()
        .find(|e| right_identities.contains(e));
    let left_zeros = left_zeros(t);
    let right_zeros = right_zeros(t);
    let zero = left_zeros.iter().copied().find(|z| right_zeros.contains(z));
    let commutative = t.is_commutative();
    let band = idempotents.len() == n;
    Ok(SemigroupProfile {
        order: n,
        commutative,
        band,
        semilattice: band && commutative,
        right_commutative: is_right_commutative(t),
        idempotents,
        left_identities,
        right_identities,
        identity,
        left_zeros,
        right_zeros,
        zero,
        monogenic: monogenic(t),
    })
}

pub fn left_identities(t: &OpTable) -> Vec<usize> {
    let n = t.order();
    (0..n).filter(|&e| (0..n).all(|a| t.get(e, a) == a)).collect()
}

pub fn right_identities(t: &OpTable) -> Vec<usize> {
    let n = t.order();
    (0..n).filter(|&e| (0..n).all(|a| t.get(a, e) == a)).collect()
}

pub fn identity(t: &OpTable) -> Option<usize> {
    let n = t.order();
    (0..n).find(|&e| (0..n).all(|a| t.get(e, a) == a && t.get(a, e) == a))
}

pub fn left_zeros(t: &OpTable) -> Vec<usize> {
    let n = t.order();
    (0..n).filter(|&z| (0..n).all(|a| t.get(z, a) == z)).collect()
}

pub fn right_zeros(t: &OpTable) -> Vec<usize> {
    let n = t.order();
    (0..n).filter(|&z| (0..n).all(|a| t.get(a, z) == z)).collect()
}

pub fn zero(t: &OpTable) -> Option<usize> {
    let n = t.order();
    (0..n).find(|&z| (0..n).all(|a| t.get(z, a) == z && t.get(a, z) == z))
}

pub fn is_right_commutative(t: &OpTable) -> bool {
    scan(t.order(), |s, x, y| t.get(t.get(s, x), y) == t.get(t.get(s, y), x)).is_none()
}

pub fn is_left_zero(t: &OpTable) -> bool {
    left_zeros(t).len() == t.order()
}

pub fn is_right_zero(t: &OpTable) -> bool {
    right_zeros(t).len() == t.order()
}

pub fn is_semilattice(t: &OpTable) -> bool {
    let n = t.order();
    t.is_commutative() && (0..n).all(|e| t.get(e, e) == e) && is_associative(t)
}

/// The zero of a null table (all products equal), if `t` is null.
pub fn null_zero(t: &OpTable) -> Option<usize> {
    let first = t.get(0, 0);
    t.entries()
        .iter()
        .all(|&v| v as usize == first)
        .then_some(first)
}

/// The set `S * S * S` of all triple products.
pub fn triple_products(t: &OpTable) -> BTreeSet<usize> {
    let n = t.order();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            let xy = t.get(x, y);
            for z in 0..n {
                out.insert(t.get(xy, z));
            }
        }
    }
    out
}

/// Index and period of `t` if some element generates the whole carrier.
/// The smallest such generator is reported.
pub fn monogenic(t: &OpTable) -> Option<Monogenic> {
    let n = t.order();
    'gen: for g in 0..n {
        // powers[k] = g^(k+1)
        let mut powers = vec![g];
        loop {
            let next = t.get(*powers.last().unwrap(), g);
            if let Some(pos) = powers.iter().position(|&p| p == next) {
                if powers.len() != n {
                    continue 'gen;
                }
                // g^(len+1) = g^(pos+1): index pos+1, period len-pos
                return Some(Monogenic {
                    generator: g,
                    index: pos + 1,
                    period: powers.len() - pos,
                });
            }
            powers.push(next);
        }
    }
    None
}

/// Flags of a pair of tables regarded as a dimonoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimonoidProfile {
    /// Left table equals right table.
    pub trivial: bool,
    /// Both tables commutative.
    pub commutative: bool,
    /// `x ⊣ y = y ⊢ x` for all `x, y`.
    pub abelian: bool,
    /// The pair equals its dual, table for table.
    pub self_dual: bool,
}

pub fn dimonoid_profile(d: &DiStructure) -> DimonoidProfile {
    let n = d.order();
    let (l, r) = (d.left(), d.right());
    let abelian = (0..n).all(|x| (0..n).all(|y| l.get(x, y) == r.get(y, x)));
    let self_dual = crate::catalog::dual_dimonoid(d) == *d;
    debug_assert_eq!(abelian, self_dual);
    DimonoidProfile {
        trivial: d.is_trivial(),
        commutative: l.is_commutative() && r.is_commutative(),
        abelian,
        self_dual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> OpTable {
        OpTable::parse(s).unwrap()
    }

    fn pair(a: &str, b: &str) -> DiStructure {
        DiStructure::new(t(a), t(b)).unwrap()
    }

    const LO2: &str = "0 0\n1 1";
    const RO2: &str = "0 1\n0 1";
    const O2: &str = "0 0\n0 0";

    #[test]
    fn cyclic_and_left_zero_are_associative() {
        assert!(is_associative(&t("0 1 2\n1 2 0\n2 0 1")));
        assert!(is_associative(&t("0 0 0\n1 1 1\n2 2 2")));
    }

    #[test]
    fn nor_fails_at_001() {
        // Hand scan: (0*0)*0 = 1*0 = 0, 0*(0*0) = 0*1 = 0 holds;
        // (0*0)*1 = 1*1 = 0, 0*(0*1) = 0*0 = 1 fails.
        assert_eq!(associativity_failure(&t("1 0\n0 0")), Some([0, 0, 1]));
    }

    #[test]
    fn left_and_right_zero_form_an_abelian_dimonoid() {
        let d = pair(LO2, RO2);
        let v = check_dimonoid(&d);
        assert!(v.passes(), "{v:?}");
        let p = dimonoid_profile(&d);
        assert!(p.abelian && p.self_dual && !p.commutative && !p.trivial);
    }

    #[test]
    fn doubled_null_and_left_zero_null() {
        let p = dimonoid_profile(&pair(O2, O2));
        assert!(p.trivial && p.commutative && p.abelian);
        let d = pair(LO2, O2);
        assert!(is_dimonoid(&d));
        let p = dimonoid_profile(&d);
        assert!(!p.abelian && !p.commutative);
    }

    #[test]
    fn doubled_associative_table_passes_both_modes() {
        let c3 = t("0 1 2\n1 2 0\n2 0 1");
        let d = DiStructure::doubled(c3);
        assert!(check_dimonoid(&d).passes());
        assert!(check_doppelsemigroup(&d).passes());
    }

    #[test]
    fn verdict_flags_match_witnesses() {
        let d = pair("1 0\n0 0", RO2);
        let v = check_dimonoid(&d);
        assert!(!v.passes());
        assert!(!v.left_associative);
        assert_eq!(v.first_failure.left_associative, Some([0, 0, 1]));
        for a in Axiom::ALL {
            assert_eq!(v.holds(a), v.first_failure.get(a).is_none());
        }
        let js = serde_json::to_value(&v).unwrap();
        assert_eq!(js["first_failure"]["left_associative"], serde_json::json!([0, 0, 1]));
    }

    #[test]
    fn profile_of_min_table() {
        let l3 = t("0 0 0\n0 1 1\n0 1 2");
        let p = semigroup_profile(&l3).unwrap();
        assert!(p.semilattice && p.band && p.commutative);
        assert_eq!(p.identity, Some(2));
        assert_eq!(p.zero, Some(0));
        assert_eq!(p.monogenic, None);
    }

    #[test]
    fn profile_refuses_non_associative() {
        assert!(matches!(
            semigroup_profile(&t("1 0\n0 0")),
            Err(Error::NotAssociative([0, 0, 1]))
        ));
    }

    #[test]
    fn monogenic_index_and_period() {
        // a, a^2, a^3 with a^4 = a^3
        let m31 = t("1 2 2\n2 2 2\n2 2 2");
        let m = monogenic(&m31).unwrap();
        assert_eq!((m.generator, m.index, m.period), (0, 3, 1));
        // cyclic group of order 3 is generated by 1: index 1, period 3
        let m = monogenic(&t("0 1 2\n1 2 0\n2 0 1")).unwrap();
        assert_eq!((m.generator, m.index, m.period), (1, 1, 3));
        assert_eq!(monogenic(&t(LO2)), None);
    }

    #[test]
    fn null_zero_and_triples() {
        assert_eq!(null_zero(&t("1 1\n1 1")), Some(1));
        assert_eq!(null_zero(&t(LO2)), None);
        let m31 = t("1 2 2\n2 2 2\n2 2 2");
        assert_eq!(triple_products(&m31).into_iter().collect::<Vec<_>>(), vec![2]);
    }
}
