pub mod axioms;
pub mod catalog;
pub mod classify;
pub mod enumerate;
mod error;
pub mod iso;
pub mod tables;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/axioms.md")]
    mod axioms {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/iso.md")]
    mod iso {}
    #[doc = include_str!("../../../book/src/enumerate.md")]
    mod enumerate {}
    #[doc = include_str!("../../../book/src/classify.md")]
    mod classify {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
