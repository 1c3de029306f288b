//! Named semigroup families, the adjunction and duality constructions, and
//! the pairing of two tables into a dimonoid or doppelsemigroup.
//!
//! Index conventions (the carrier is always `0..n`):
//!
//! * `C_n`: index `i` is the `i`-th power of the generator, so the table is
//!   addition modulo `n` and `0` is the identity.
//! * `L_n`: minimum on `0..n`; `0` is the zero and `n-1` the identity.
//! * `O_n`: null table whose zero is `n-1` (it coincides with `O_n^0`).
//! * `O_n^m`: `A = {0, …, m-1}`, zero `n-1`; `x*y = x` when `x = y ∈ A`,
//!   otherwise the zero.
//! * `M_{r,m}`: index `i` is `a^(i+1)`, with `a^(r+m) = a^r`.
//! * `LO_{m←n}`: `A = {0, …, m-1}`, distinguished element `0`;
//!   `x*y = x` for `x ∈ A`, otherwise `0`.
//! * `LO^{~0}_{m←n}`: carrier `0..=n` with zero `n`, `A = {0, …, m-1}`;
//!   `x*y = x` for `y ∈ A`, otherwise the zero.
//! * `LOB_n`: the band `⊣_c^a` with `a = 0`, `c = 1`.
//! * `RO…` families are the transposes of the `LO…` ones.
//! * `+0`, `+1`, `~1` adjoin their new element at index `n`.

mod grammar;
mod named;

pub use grammar::{parse_dimonoid_name, parse_name, DimonoidName, Family, Modifier, StructureName};
pub use named::{
    dimonoid_names, doppelsemigroup_names, semigroup_names, NamedStructure,
};

use serde::{Deserialize, Serialize};

use crate::axioms::{self, StructureKind};
use crate::error::{Error, Result};
use crate::tables::{DiStructure, OpTable};

fn param_error(family: &str, msg: impl Into<String>) -> Error {
    Error::Parameter {
        family: family.into(),
        msg: msg.into(),
    }
}

fn need(family: &str, ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(param_error(family, msg))
    }
}

/// Cyclic group of order `n`.
pub fn cyclic(n: usize) -> Result<OpTable> {
    need("C", n >= 1, "requires n >= 1")?;
    OpTable::from_fn(n, |x, y| (x + y) % n)
}

/// Linear semilattice: minimum on `0..n`.
pub fn linear_semilattice(n: usize) -> Result<OpTable> {
    need("L", n >= 1, "requires n >= 1")?;
    OpTable::from_fn(n, |x, y| x.min(y))
}

/// Null semigroup with zero `n-1`.
pub fn null(n: usize) -> Result<OpTable> {
    need("O", n >= 1, "requires n >= 1")?;
    OpTable::from_fn(n, |_, _| n - 1)
}

/// `O_n^m`.
pub fn null_with_idempotents(n: usize, m: usize) -> Result<OpTable> {
    need("O(n,m)", n >= 1, "requires n >= 1")?;
    need("O(n,m)", m < n, "requires m <= n-1")?;
    OpTable::from_fn(n, |x, y| if x == y && x < m { x } else { n - 1 })
}

/// Monogenic semigroup of index `r` and period `m`, order `r + m - 1`.
pub fn monogenic(r: usize, m: usize) -> Result<OpTable> {
    need("M", r >= 1 && m >= 1, "requires r >= 1 and m >= 1")?;
    let n = r + m - 1;
    OpTable::from_fn(n, |x, y| {
        let mut e = x + y + 2;
        while e > n {
            e -= m;
        }
        e - 1
    })
}

pub fn left_zero(n: usize) -> Result<OpTable> {
    need("LO", n >= 1, "requires n >= 1")?;
    OpTable::from_fn(n, |x, _| x)
}

pub fn right_zero(n: usize) -> Result<OpTable> {
    need("RO", n >= 1, "requires n >= 1")?;
    OpTable::from_fn(n, |_, y| y)
}

/// `LO_{m←n}`.
pub fn left_zero_onto(m: usize, n: usize) -> Result<OpTable> {
    need("LO(m<-n)", 1 <= m && m <= n, "requires 1 <= m <= n")?;
    OpTable::from_fn(n, |x, _| if x < m { x } else { 0 })
}

/// `LO^{~0}_{m←n}`, of order `n + 1`.
pub fn left_zero_tilde_zero(m: usize, n: usize) -> Result<OpTable> {
    need("LOt0(m<-n)", n >= 1 && m <= n, "requires n >= 1 and 0 <= m <= n")?;
    OpTable::from_fn(n + 1, |x, y| if y < m { x } else { n })
}

/// `LOB_n`, the operation `⊣_c^a` with `a = 0` and `c = 1`.
pub fn left_zero_band(n: usize) -> Result<OpTable> {
    need("LOB", n >= 2, "requires n >= 2")?;
    lob_with(n, 0, 1)
}

/// `⊣_c^a` on `0..n` for distinct `a`, `c`.
pub fn lob_with(n: usize, a: usize, c: usize) -> Result<OpTable> {
    need("LOB", a < n && c < n && a != c, "requires distinct a, c < n")?;
    OpTable::from_fn(n, |x, y| match (x == a, y == a) {
        (true, true) => a,
        (true, false) => c,
        (false, _) => x,
    })
}

/// Constructions deriving one semigroup from another.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Construction {
    /// Adjoin a new zero.
    AdjoinZero,
    /// Adjoin a new identity.
    AdjoinIdentity,
    /// Adjoin `1̃` to a monoid: it acts as identity on the old elements and
    /// squares to the old identity.
    AdjoinTilde,
    /// Transpose.
    Dual,
}

pub fn derive_semigroup(t: &OpTable, construction: Construction) -> Result<OpTable> {
    let n = t.order();
    let out = match construction {
        Construction::Dual => t.transpose(),
        Construction::AdjoinZero => OpTable::from_fn(n + 1, |x, y| {
            if x == n || y == n {
                n
            } else {
                t.get(x, y)
            }
        })?,
        Construction::AdjoinIdentity => OpTable::from_fn(n + 1, |x, y| match (x == n, y == n) {
            (true, _) => y,
            (false, true) => x,
            _ => t.get(x, y),
        })?,
        Construction::AdjoinTilde => {
            let e = axioms::identity(t).ok_or(Error::NotMonoid)?;
            OpTable::from_fn(n + 1, |x, y| match (x == n, y == n) {
                (true, true) => e,
                (true, false) => y,
                (false, true) => x,
                _ => t.get(x, y),
            })?
        }
    };
    debug_assert_eq!(axioms::is_associative(t), axioms::is_associative(&out));
    Ok(out)
}

/// How [`pair_dimonoid`] validates its result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    Dimonoid,
    Doppelsemigroup,
    Unchecked,
}

/// Pairs `left` (`⊣`) with `right` (`⊢`), refusing pairs that fail the
/// axioms of `mode`.
pub fn pair_dimonoid(left: OpTable, right: OpTable, mode: PairMode) -> Result<DiStructure> {
    let d = DiStructure::new(left, right)?;
    let kind = match mode {
        PairMode::Unchecked => return Ok(d),
        PairMode::Dimonoid => StructureKind::Dimonoid,
        PairMode::Doppelsemigroup => StructureKind::Doppelsemigroup,
    };
    let verdict = axioms::check(&d, kind);
    if verdict.passes() {
        Ok(d)
    } else {
        Err(Error::Axioms {
            mode: kind.as_str(),
            verdict: Box::new(verdict),
        })
    }
}

/// The semigroup `t` regarded as the dimonoid `(t, t)`.
pub fn trivial_dimonoid(t: &OpTable) -> Result<DiStructure> {
    if let Some(w) = axioms::associativity_failure(t) {
        return Err(Error::NotAssociative(w));
    }
    Ok(DiStructure::doubled(t.clone()))
}

/// `x ⊣ᵈ y = y ⊢ x`, `x ⊢ᵈ y = y ⊣ x`.
pub fn dual_dimonoid(d: &DiStructure) -> DiStructure {
    d.dual()
}

/// Adjoins a new element `n` that is a zero of both tables.
pub fn adjoin_zero_dimonoid(d: &DiStructure) -> DiStructure {
    let l = derive_semigroup(d.left(), Construction::AdjoinZero).expect("order fits");
    let r = derive_semigroup(d.right(), Construction::AdjoinZero).expect("order fits");
    DiStructure::new(l, r).expect("equal orders")
}

/// Builds the table named by `name`.
pub fn build_semigroup(name: &StructureName) -> Result<OpTable> {
    name.build()
}

/// Parses and builds a semigroup name such as `M(3,1)` or `dual(LOB3)`.
pub fn build(name: &str) -> Result<OpTable> {
    parse_name(name)?.build()
}

/// Parses and builds a pair name such as `LO3|RO3` or `plus0(LO2|O2)`.
pub fn build_pair(name: &str) -> Result<DiStructure> {
    parse_dimonoid_name(name)?.build()
}
