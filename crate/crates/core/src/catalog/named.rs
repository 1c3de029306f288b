//! Structures named in the classification tables, each with the display
//! name used in reports and a grammar string that builds a member of its
//! isomorphism class.

use crate::axioms::StructureKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedStructure {
    pub display: &'static str,
    pub grammar: &'static str,
    pub kind: StructureKind,
}

const fn sg(display: &'static str, grammar: &'static str) -> NamedStructure {
    NamedStructure {
        display,
        grammar,
        kind: StructureKind::Semigroup,
    }
}

const fn dim(display: &'static str, grammar: &'static str) -> NamedStructure {
    NamedStructure {
        display,
        grammar,
        kind: StructureKind::Dimonoid,
    }
}

const fn dop(display: &'static str, grammar: &'static str) -> NamedStructure {
    NamedStructure {
        display,
        grammar,
        kind: StructureKind::Doppelsemigroup,
    }
}

const SEMIGROUPS: &[NamedStructure] = &[
    sg("C_2", "C2"),
    sg("L_2", "L2"),
    sg("O_2", "O2"),
    sg("LO_2", "LO2"),
    sg("RO_2", "RO2"),
    sg("C_3", "C3"),
    sg("O_3", "O3"),
    sg("M_{2,2}", "M(2,2)"),
    sg("C_2^{+1}", "C2+1"),
    sg("C_2^{~1}", "C2~1"),
    sg("M_{3,1}", "M(3,1)"),
    sg("O_2^{+1}", "O2+1"),
    sg("O_2^{+0}", "O2+0"),
    sg("L_3", "L3"),
    sg("C_2^{+0}", "C2+0"),
    sg("O_3^2", "O(3,2)"),
    sg("O_3^1", "O(3,1)"),
    sg("LO_3", "LO3"),
    sg("RO_3", "RO3"),
    sg("LO_2^{+0}", "LO2+0"),
    sg("RO_2^{+0}", "RO2+0"),
    sg("LO^{~0}_{1←2}", "LOt0(1<-2)"),
    sg("RO^{~0}_{1←2}", "ROt0(1<-2)"),
    sg("LO_2^{+1}", "LO2+1"),
    sg("RO_2^{+1}", "RO2+1"),
    sg("LOB_3", "LOB3"),
    sg("ROB_3", "ROB3"),
    sg("LO_{2←3}", "LO(2<-3)"),
    sg("RO_{2←3}", "RO(2<-3)"),
];

/// Named semigroups of orders 2 and 3.
pub fn semigroup_names() -> &'static [NamedStructure] {
    SEMIGROUPS
}

// Nontrivial dimonoids only; a trivial class takes the name of its semigroup.
const DIMONOIDS: &[NamedStructure] = &[
    dim("LO_2⊣⊢RO_2", "LO2|RO2"),
    dim("LO_2⊣⊢O_2", "LO2|O2"),
    dim("O_2⊣⊢RO_2", "O2|RO2"),
    dim("M_{3,1}⊣⊢O_3", "M(3,1)|O3"),
    dim("O_3⊣⊢M_{3,1}", "O3|M(3,1)"),
    dim("LO_3⊣⊢RO_3", "LO3|RO3"),
    dim("LO_{2←3}⊣⊢RO_{2←3}", "LO(2<-3)|RO(2<-3)"),
    dim("LOB_3⊣⊢ROB_3", "LOB3|ROB3"),
    dim("LO^{~0}_{1←2}⊣⊢RO^{~0}_{1←2}", "LOt0(1<-2)|ROt0(1<-2)"),
    dim("(LO_2⊣⊢RO_2)^{+0}", "plus0(LO2|RO2)"),
    dim("LO_3⊣⊢O_3", "LO3|O3"),
    dim("LO_{2←3}⊣⊢O_3", "LO(2<-3)|O3@[1,2,0]"),
    dim("LO_3⊣⊢RO_{2←3}", "LO3|RO(2<-3)"),
    dim("LO_3⊣⊢LO_{2←3}", "LO3|LO(2<-3)"),
    dim("LOB_3⊣⊢O_3^1", "LOB3|O(3,1)@[0,2,1]"),
    dim("LO^{~0}_{1←2}⊣⊢O_3^1", "LOt0(1<-2)|O(3,1)"),
    dim("(LO_2⊣⊢O_2)^{+0}", "plus0(LO2|O2)"),
    dim("O_3⊣⊢RO_3", "dual(LO3|O3)"),
    dim("O_3⊣⊢RO_{2←3}", "dual(LO(2<-3)|O3@[1,2,0])"),
    dim("LO_{2←3}⊣⊢RO_3", "dual(LO3|RO(2<-3))"),
    dim("RO_{2←3}⊣⊢RO_3", "dual(LO3|LO(2<-3))"),
    dim("O_3^1⊣⊢ROB_3", "dual(LOB3|O(3,1)@[0,2,1])"),
    dim("O_3^1⊣⊢RO^{~0}_{1←2}", "dual(LOt0(1<-2)|O(3,1))"),
    dim("(O_2⊣⊢RO_2)^{+0}", "dual(plus0(LO2|O2))"),
];

// Nontrivial commutative doppelsemigroups of order 3.
const DOPPELSEMIGROUPS: &[NamedStructure] = &[
    dop("C_3≬C_3^{-1}", "C3|C3@[1,0,2]"),
    dop("O_3≬M_{3,1}", "O3|M(3,1)"),
    dop("O_3≬O_2^{+1}", "O3|O2+1@[0,2,1]"),
    dop("O_3≬O_2^{+0}", "O3|O2+0"),
    dop("O_3≬L_3", "O3|L3@[2,0,1]"),
    dop("O_3≬C_2^{+0}", "O3|C2+0"),
    dop("O_3≬O_3^2", "O3|O(3,2)"),
    dop("O_3≬O_3^1", "O3|O(3,1)"),
    dop("M_{2,2}≬C_2^{+1}", "M(2,2)|C2+1@[2,1,0]"),
    dop("M_{2,2}≬C_2^{~1}", "M(2,2)|C2~1@[2,1,0]"),
    dop("C_2^{+1}≬C_2^{~1}", "C2+1|C2~1"),
    dop("C_2^{+1}≬M_{2,2}", "C2+1|M(2,2)@[2,1,0]"),
    dop("C_2^{~1}≬M_{2,2}", "C2~1|M(2,2)@[2,1,0]"),
    dop("C_2^{~1}≬C_2^{+1}", "C2~1|C2+1"),
    dop("M_{3,1}≬O_2^{+1}", "M(3,1)|O2+1@[1,2,0]"),
    dop("M_{3,1}≬O_3", "M(3,1)|O3"),
    dop("O_2^{+1}≬M_{3,1}", "O2+1|M(3,1)@[2,0,1]"),
    dop("O_2^{+1}≬O_3", "O2+1|O3@[0,2,1]"),
    dop("(O_2≬L_2)^{+0}", "plus0(O2|L2@[1,0])"),
    dop("O_2^{+0}≬O_3", "O2+0|O3"),
    dop("L_3≬O_3", "L3|O3@[1,2,0]"),
    dop("(L_2≬O_2)^{+0}", "plus0(L2|O2@[1,0])"),
    dop("(C_2≬C_2^{-1})^{+0}", "plus0(C2|C2@[1,0])"),
    dop("C_2^{+0}≬O_3", "C2+0|O3"),
    dop("O_3^2≬O_3^1", "O(3,2)|O(3,1)"),
    dop("O_3^2≬O_3", "O(3,2)|O3"),
    dop("O_3^a≬O_3^b", "O(3,1)|O(3,1)@[1,0,2]"),
    dop("O_3^1≬O_3^2", "O(3,1)|O(3,2)"),
    dop("O_3^1≬O_3", "O(3,1)|O3"),
];

/// Named nontrivial dimonoids of orders 2 and 3.
pub fn dimonoid_names() -> &'static [NamedStructure] {
    DIMONOIDS
}

/// Named nontrivial commutative doppelsemigroups of order 3.
pub fn doppelsemigroup_names() -> &'static [NamedStructure] {
    DOPPELSEMIGROUPS
}
