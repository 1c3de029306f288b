//! Flat string names for catalog structures.
//!
//! ```text
//! pair     := "triv(" name ")" | "plus0(" pair ")" | "dual(" pair ")"
//!           | name "|" name
//! name     := ( "dual(" name ")" | atom ) postfix*
//! atom     := "C" n | "L" n | "O" n | "LO" n | "RO" n | "LOB" n | "ROB" n
//!           | "O(" n "," m ")" | "M(" r "," m ")"
//!           | "LO(" m "<-" n ")" | "RO(" m "<-" n ")"
//!           | "LOt0(" m "<-" n ")" | "ROt0(" m "<-" n ")"
//! postfix  := "+0" | "+1" | "~1" | "@[" i ("," i)* "]"
//! ```
//!
//! Single-parameter atoms also accept the parenthesised form `C(3)`.
//! The `@[…]` postfix relabels the table built so far by the given
//! permutation. Whitespace is ignored.

use std::fmt;

use crate::error::{Error, Result};
use crate::tables::{DiStructure, OpTable, Permutation};

use super::{
    adjoin_zero_dimonoid, cyclic, derive_semigroup, left_zero, left_zero_band, left_zero_onto,
    left_zero_tilde_zero, linear_semilattice, monogenic, null, null_with_idempotents, right_zero,
    Construction,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `C_n`
    C,
    /// `L_n`
    L,
    /// `O_n`
    O,
    /// `O_n^m`
    Omn,
    /// `M_{r,m}`
    M,
    LO,
    RO,
    /// `LO_{m←n}`
    LOmn,
    /// `RO_{m←n}`
    ROmn,
    /// `LO^{~0}_{m←n}`
    LOtilde0,
    /// `RO^{~0}_{m←n}`
    ROtilde0,
    LOB,
    ROB,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Modifier {
    /// `+0`
    AdjoinZero,
    /// `+1`
    AdjoinIdentity,
    /// `~1`
    AdjoinTilde,
    Dual,
    /// `@[…]`
    Relabel(Permutation),
}

/// A parsed semigroup name: a family with parameters and an ordered list of
/// modifiers applied left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureName {
    pub family: Family,
    pub params: Vec<usize>,
    pub modifiers: Vec<Modifier>,
}

impl StructureName {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        Self {
            family,
            params,
            modifiers: Vec::new(),
        }
    }

    pub fn with(mut self, m: Modifier) -> Self {
        self.modifiers.push(m);
        self
    }

    pub fn build(&self) -> Result<OpTable> {
        let p = &self.params;
        let transpose = |t: OpTable| t.transpose();
        let mut t = match self.family {
            Family::C => cyclic(p[0])?,
            Family::L => linear_semilattice(p[0])?,
            Family::O => null(p[0])?,
            Family::Omn => null_with_idempotents(p[0], p[1])?,
            Family::M => monogenic(p[0], p[1])?,
            Family::LO => left_zero(p[0])?,
            Family::RO => right_zero(p[0])?,
            Family::LOmn => left_zero_onto(p[0], p[1])?,
            Family::ROmn => transpose(left_zero_onto(p[0], p[1])?),
            Family::LOtilde0 => left_zero_tilde_zero(p[0], p[1])?,
            Family::ROtilde0 => transpose(left_zero_tilde_zero(p[0], p[1])?),
            Family::LOB => left_zero_band(p[0])?,
            Family::ROB => transpose(left_zero_band(p[0])?),
        };
        for m in &self.modifiers {
            t = match m {
                Modifier::AdjoinZero => derive_semigroup(&t, Construction::AdjoinZero)?,
                Modifier::AdjoinIdentity => derive_semigroup(&t, Construction::AdjoinIdentity)?,
                Modifier::AdjoinTilde => derive_semigroup(&t, Construction::AdjoinTilde)?,
                Modifier::Dual => derive_semigroup(&t, Construction::Dual)?,
                Modifier::Relabel(perm) => t.permuted(perm)?,
            };
        }
        Ok(t)
    }
}

impl fmt::Display for StructureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        let mut base = match self.family {
            Family::C => format!("C{}", p[0]),
            Family::L => format!("L{}", p[0]),
            Family::O => format!("O{}", p[0]),
            Family::Omn => format!("O({},{})", p[0], p[1]),
            Family::M => format!("M({},{})", p[0], p[1]),
            Family::LO => format!("LO{}", p[0]),
            Family::RO => format!("RO{}", p[0]),
            Family::LOmn => format!("LO({}<-{})", p[0], p[1]),
            Family::ROmn => format!("RO({}<-{})", p[0], p[1]),
            Family::LOtilde0 => format!("LOt0({}<-{})", p[0], p[1]),
            Family::ROtilde0 => format!("ROt0({}<-{})", p[0], p[1]),
            Family::LOB => format!("LOB{}", p[0]),
            Family::ROB => format!("ROB{}", p[0]),
        };
        for m in &self.modifiers {
            match m {
                Modifier::AdjoinZero => base.push_str("+0"),
                Modifier::AdjoinIdentity => base.push_str("+1"),
                Modifier::AdjoinTilde => base.push_str("~1"),
                Modifier::Dual => base = format!("dual({base})"),
                Modifier::Relabel(perm) => base.push_str(&format!("@{perm}")),
            }
        }
        f.write_str(&base)
    }
}

/// A parsed pair name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimonoidName {
    Pair(StructureName, StructureName),
    Trivial(StructureName),
    PlusZero(Box<DimonoidName>),
    Dual(Box<DimonoidName>),
}

impl DimonoidName {
    /// Builds the pair without checking any axioms.
    pub fn build(&self) -> Result<DiStructure> {
        match self {
            DimonoidName::Pair(l, r) => DiStructure::new(l.build()?, r.build()?),
            DimonoidName::Trivial(s) => Ok(DiStructure::doubled(s.build()?)),
            DimonoidName::PlusZero(d) => Ok(adjoin_zero_dimonoid(&d.build()?)),
            DimonoidName::Dual(d) => Ok(d.build()?.dual()),
        }
    }
}

impl fmt::Display for DimonoidName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimonoidName::Pair(l, r) => write!(f, "{l}|{r}"),
            DimonoidName::Trivial(s) => write!(f, "triv({s})"),
            DimonoidName::PlusZero(d) => write!(f, "plus0({d})"),
            DimonoidName::Dual(d) => write!(f, "dual({d})"),
        }
    }
}

pub fn parse_name(input: &str) -> Result<StructureName> {
    let mut p = Parser::new(input);
    let name = p.name()?;
    p.end()?;
    Ok(name)
}

pub fn parse_dimonoid_name(input: &str) -> Result<DimonoidName> {
    let mut p = Parser::new(input);
    let name = p.pair()?;
    p.end()?;
    Ok(name)
}

struct Parser<'a> {
    input: &'a str,
    src: Vec<u8>,
    pos: usize,
}

const ATOMS: &[(&str, Family)] = &[
    ("LOt0", Family::LOtilde0),
    ("ROt0", Family::ROtilde0),
    ("LOB", Family::LOB),
    ("ROB", Family::ROB),
    ("LO", Family::LO),
    ("RO", Family::RO),
    ("C", Family::C),
    ("L", Family::L),
    ("O", Family::O),
    ("M", Family::M),
];

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            input,
            src: input.bytes().filter(|b| !b.is_ascii_whitespace()).collect(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Name {
            name: self.input.to_string(),
            msg: format!("{} (at offset {})", msg.into(), self.pos),
        })
    }

    fn rest(&self) -> &[u8] {
        &self.src[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    fn end(&self) -> Result<()> {
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.rest().iter().take_while(|b| b.is_ascii_digit()).count();
        if digits == 0 {
            return self.err("expected a number");
        }
        let s = std::str::from_utf8(&self.rest()[..digits]).unwrap();
        let v = s.parse().or_else(|_| self.err("number too large"))?;
        self.pos += digits;
        Ok(v)
    }

    fn pair(&mut self) -> Result<DimonoidName> {
        if self.eat("triv(") {
            let s = self.name()?;
            self.expect(")")?;
            return Ok(DimonoidName::Trivial(s));
        }
        if self.eat("plus0(") {
            let d = self.pair()?;
            self.expect(")")?;
            return Ok(DimonoidName::PlusZero(Box::new(d)));
        }
        let start = self.pos;
        if self.eat("dual(") {
            if let Ok(d) = self.pair() {
                if self.eat(")") && !self.rest().starts_with(b"|") && !self.at_postfix() {
                    return Ok(DimonoidName::Dual(Box::new(d)));
                }
            }
            // `dual(X)|Y` is a pair whose left side is a dual semigroup
            self.pos = start;
        }
        let l = self.name()?;
        self.expect("|")?;
        let r = self.name()?;
        Ok(DimonoidName::Pair(l, r))
    }

    fn at_postfix(&self) -> bool {
        let r = self.rest();
        r.starts_with(b"+") || r.starts_with(b"~") || r.starts_with(b"@")
    }

    fn name(&mut self) -> Result<StructureName> {
        let mut name = if self.eat("dual(") {
            let inner = self.name()?;
            self.expect(")")?;
            inner.with(Modifier::Dual)
        } else {
            self.atom()?
        };
        loop {
            if self.eat("+0") {
                name.modifiers.push(Modifier::AdjoinZero);
            } else if self.eat("+1") {
                name.modifiers.push(Modifier::AdjoinIdentity);
            } else if self.eat("~1") {
                name.modifiers.push(Modifier::AdjoinTilde);
            } else if self.eat("@[") {
                let mut images = vec![self.number()?];
                while self.eat(",") {
                    images.push(self.number()?);
                }
                self.expect("]")?;
                match Permutation::new(images) {
                    Ok(p) => name.modifiers.push(Modifier::Relabel(p)),
                    Err(e) => return self.err(e.to_string()),
                }
            } else {
                return Ok(name);
            }
        }
    }

    fn atom(&mut self) -> Result<StructureName> {
        let Some(&(kw, family)) = ATOMS
            .iter()
            .find(|(kw, _)| self.rest().starts_with(kw.as_bytes()))
        else {
            return self.err("expected a family name");
        };
        self.pos += kw.len();
        let params = match family {
            Family::LOtilde0 | Family::ROtilde0 => self.arrow_params()?,
            Family::LO | Family::RO if self.rest().starts_with(b"(") && self.arrow_ahead() => {
                let p = self.arrow_params()?;
                return Ok(StructureName::new(
                    if family == Family::LO {
                        Family::LOmn
                    } else {
                        Family::ROmn
                    },
                    p,
                ));
            }
            Family::M => self.two_params()?,
            Family::O if self.rest().starts_with(b"(") && self.comma_ahead() => {
                return Ok(StructureName::new(Family::Omn, self.two_params()?));
            }
            _ => {
                if self.eat("(") {
                    let n = self.number()?;
                    self.expect(")")?;
                    vec![n]
                } else {
                    vec![self.number()?]
                }
            }
        };
        Ok(StructureName::new(family, params))
    }

    fn group_ahead(&self) -> &[u8] {
        let r = self.rest();
        let close = r.iter().position(|&b| b == b')').unwrap_or(r.len());
        &r[..close]
    }

    fn arrow_ahead(&self) -> bool {
        self.group_ahead().windows(2).any(|w| w == b"<-")
    }

    fn comma_ahead(&self) -> bool {
        self.group_ahead().contains(&b',')
    }

    fn arrow_params(&mut self) -> Result<Vec<usize>> {
        self.expect("(")?;
        let m = self.number()?;
        self.expect("<-")?;
        let n = self.number()?;
        self.expect(")")?;
        Ok(vec![m, n])
    }

    fn two_params(&mut self) -> Result<Vec<usize>> {
        self.expect("(")?;
        let a = self.number()?;
        self.expect(",")?;
        let b = self.number()?;
        self.expect(")")?;
        Ok(vec![a, b])
    }
}
