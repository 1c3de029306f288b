//! Property checks and the pairwise-dedup oracle, shared by the property
//! tests and the acceptance run.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dimonoid::axioms::{self, StructureKind};
use dimonoid::catalog::{adjoin_zero_dimonoid, dual_dimonoid};
use dimonoid::enumerate::{enumerate, enumerate_associative_tables, labeled_pairs, Limits};
use dimonoid::iso::{automorphisms, canonical_form, dedup_pairwise};
use dimonoid::tables::{DiStructure, OpTable, Permutation};

pub const SEED: u64 = 0x5eed_d1a0;
pub const ORDER_FOUR_SAMPLE: usize = 300;

/// Property name to the structures that break it (at most a few kept).
#[derive(Debug, Default)]
pub struct Violations {
    checked: BTreeMap<&'static str, usize>,
    failed: BTreeMap<&'static str, Vec<String>>,
}

impl Violations {
    pub fn record(&mut self, property: &'static str, ok: bool, subject: impl FnOnce() -> String) {
        *self.checked.entry(property).or_default() += 1;
        if !ok {
            let list = self.failed.entry(property).or_default();
            if list.len() < 3 {
                list.push(subject());
            } else {
                list.push(String::new());
            }
        }
    }

    pub fn total(&self) -> usize {
        self.failed.values().map(Vec::len).sum()
    }

    pub fn checked(&self, property: &str) -> usize {
        self.checked.get(property).copied().unwrap_or(0)
    }

    pub fn report(&self) -> String {
        let mut s = String::new();
        for (p, n) in &self.checked {
            let bad = self.failed.get(p).map_or(0, Vec::len);
            s.push_str(&format!("  {p}: {n} checked, {bad} violations\n"));
            for ex in self.failed.get(p).into_iter().flatten().filter(|e| !e.is_empty()) {
                s.push_str(&format!("    {}\n", ex.replace('\n', " / ")));
            }
        }
        s
    }
}

fn show(d: &DiStructure) -> String {
    format!("{} | {}", d.left(), d.right())
}

fn perm_set(d: &DiStructure) -> BTreeSet<Permutation> {
    automorphisms(d).into_iter().collect()
}

/// Checks every dimonoid property on one labeled dimonoid.
pub fn check_dimonoid_properties(d: &DiStructure, v: &mut Violations) {
    let (l, r) = (d.left(), d.right());
    let dual = dual_dimonoid(d);
    v.record("duality is an involution", dual_dimonoid(&dual) == *d, || show(d));
    let p = axioms::dimonoid_profile(d);
    v.record("abelian iff self-dual", p.abelian == (dual == *d), || show(d));
    v.record("dual is a dimonoid", axioms::is_dimonoid(&dual), || show(d));

    let lz = axioms::left_zeros(r).iter().all(|z| axioms::left_zeros(l).contains(z));
    v.record("left zeros of ⊢ are left zeros of ⊣", lz, || show(d));
    let rz = axioms::right_zeros(l).iter().all(|z| axioms::right_zeros(r).contains(z));
    v.record("right zeros of ⊣ are right zeros of ⊢", rz, || show(d));

    if !axioms::left_identities(l).is_empty() || !axioms::right_identities(r).is_empty() {
        v.record("a left identity of ⊣ or right identity of ⊢ forces ⊣ = ⊢", l == r, || show(d));
    }
    if axioms::is_right_zero(l) || axioms::is_left_zero(r) {
        v.record("right zero ⊣ or left zero ⊢ forces ⊣ = ⊢", l == r, || show(d));
    }
    if p.commutative {
        v.record("commutative: zeros of ⊣ and ⊢ agree", axioms::zero(l) == axioms::zero(r), || show(d));
    }
    if axioms::is_semilattice(l) {
        v.record("semilattice ⊣ forces ⊣ = ⊢", l == r, || show(d));
    }

    v.record("Aut(d) = Aut(dual d)", perm_set(d) == perm_set(&dual), || show(d));
    let plus = adjoin_zero_dimonoid(d);
    v.record(
        "|Aut(d+0)| = |Aut(d)|",
        automorphisms(&plus).len() == automorphisms(d).len(),
        || show(d),
    );
}

/// Null-coordinate criteria on one labeled doppelsemigroup.
pub fn check_doppelsemigroup_properties(d: &DiStructure, v: &mut Violations) {
    if let Some(z) = axioms::null_zero(d.left()) {
        let cubed = axioms::triple_products(d.right()) == BTreeSet::from([z]);
        v.record("null ⊣: dimonoid iff D⊢D⊢D = {0}", axioms::is_dimonoid(d) == cubed, || show(d));
    }
    if let Some(z) = axioms::null_zero(d.right()) {
        let cubed = axioms::triple_products(d.left()) == BTreeSet::from([z]);
        v.record("null ⊢: dimonoid iff D⊣D⊣D = {0}", axioms::is_dimonoid(d) == cubed, || show(d));
    }
    v.record("dual is a doppelsemigroup", axioms::is_doppelsemigroup(&dual_dimonoid(d)), || show(d));
}

/// `(t, dual t)` is a dimonoid exactly when `t` is right commutative.
pub fn check_right_commutative_criterion(t: &OpTable, v: &mut Violations) {
    let d = DiStructure::new(t.clone(), t.transpose()).expect("same order");
    v.record(
        "(t, dual t) dimonoid iff t right commutative",
        axioms::is_dimonoid(&d) == axioms::is_right_commutative(t),
        || t.to_string(),
    );
}

fn sample<T: Clone>(items: &[T], k: usize, rng: &mut ChaCha8Rng) -> Vec<T> {
    items.choose_multiple(rng, k.min(items.len())).cloned().collect()
}

/// The whole property suite: every labeled structure of order at most 3
/// and a seeded sample at order 4.
pub fn property_suite() -> Violations {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut v = Violations::default();
    for n in 1..=4 {
        let mut dims = labeled_pairs(n, StructureKind::Dimonoid, limits).unwrap();
        let mut dops = labeled_pairs(n, StructureKind::Doppelsemigroup, limits).unwrap();
        let mut tables = enumerate_associative_tables(n, limits).unwrap();
        if n == 4 {
            dims = sample(&dims, ORDER_FOUR_SAMPLE, &mut rng);
            dops = sample(&dops, ORDER_FOUR_SAMPLE, &mut rng);
            tables = sample(&tables, ORDER_FOUR_SAMPLE, &mut rng);
        }
        for d in &dims {
            check_dimonoid_properties(d, &mut v);
        }
        for d in &dops {
            check_doppelsemigroup_properties(d, &mut v);
        }
        for t in &tables {
            check_right_commutative_criterion(t, &mut v);
        }
    }
    v
}

/// Disagreements between key-based and pairwise deduplication of `items`.
pub fn dedup_disagreements(items: &[DiStructure]) -> usize {
    let reps = dedup_pairwise(items);
    let rep_keys: BTreeSet<Vec<u8>> = reps.iter().map(|d| canonical_form(d).key).collect();
    let item_keys: BTreeSet<Vec<u8>> = items.iter().map(|d| canonical_form(d).key).collect();
    let mut bad = rep_keys.symmetric_difference(&item_keys).count();
    bad += reps.len().abs_diff(item_keys.len());
    bad
}

/// Disagreements over every order-≤3 enumeration, comparing both the
/// labeled structures and the enumerated class keys.
pub fn small_order_disagreements() -> BTreeMap<String, usize> {
    let limits = Limits::default();
    let mut out = BTreeMap::new();
    for n in 1..=3 {
        for kind in [
            StructureKind::Semigroup,
            StructureKind::Dimonoid,
            StructureKind::Doppelsemigroup,
        ] {
            let labeled = match kind {
                StructureKind::Semigroup => enumerate_associative_tables(n, limits)
                    .unwrap()
                    .into_iter()
                    .map(DiStructure::doubled)
                    .collect(),
                _ => labeled_pairs(n, kind, limits).unwrap(),
            };
            let classes = enumerate(n, kind, limits).unwrap();
            let reps = dedup_pairwise(&labeled);
            let mut bad = dedup_disagreements(&labeled);
            bad += reps.len().abs_diff(classes.class_count());
            let enumerated: BTreeSet<Vec<u8>> =
                classes.classes.iter().map(|c| c.key.key.clone()).collect();
            let pairwise: BTreeSet<Vec<u8>> = reps.iter().map(|d| canonical_form(d).key).collect();
            bad += enumerated.symmetric_difference(&pairwise).count();
            out.insert(format!("order {n} {kind}"), bad);
        }
    }
    out
}

/// `count` random order-4 pairs of associative tables: half drawn fresh,
/// half relabeled copies of earlier draws, so classes repeat.
pub fn random_order_four_pairs(count: usize, seed: u64) -> Vec<DiStructure> {
    let tables = enumerate_associative_tables(4, Limits::default()).unwrap();
    let perms: Vec<Permutation> = Permutation::all(4).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<DiStructure> = Vec::with_capacity(count);
    while out.len() < count {
        if out.is_empty() || rng.gen_bool(0.5) {
            let l = tables.choose(&mut rng).unwrap().clone();
            let r = tables.choose(&mut rng).unwrap().clone();
            out.push(DiStructure::new(l, r).unwrap());
        } else {
            let d = out.choose(&mut rng).unwrap();
            let p = perms.choose(&mut rng).unwrap();
            out.push(d.permuted(p).unwrap());
        }
    }
    out
}
