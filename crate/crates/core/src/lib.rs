//! Von Neumann regularity of cellular automata.
//!
//! A cellular automaton `t` is *regular* when some cellular automaton `s`
//! satisfies `t s t = t`. This crate decides, certifies and counts regular
//! automata in three settings:
//!
//! * one-dimensional CA over `Z` given by explicit rule tables
//!   ([`rule`], [`symbolic`], [`elementary`], [`cert`]);
//! * CA over finite groups, as equivariant maps of `A^G` ([`group`], [`finite`]);
//! * linear CA over `Z_n` with a prime field alphabet, as elements of
//!   `F_p[x]/(x^n - 1)` ([`poly`], [`linear`]).
//!
//! Composition is written left to right throughout: `a.compose(&b)` applies
//! `a` first.

pub mod cert;
pub mod config;
pub mod elementary;
pub mod error;
pub mod finite;
pub mod group;
pub mod linear;
pub mod poly;
pub mod rule;
pub mod symbolic;

pub use config::PeriodicConfig;
pub use elementary::{Bounds, Certificate, EquivalenceClass, Status};
pub use error::{Error, Result};
pub use rule::RuleTable;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rules.md")]
    mod rules {}
    #[doc = include_str!("../../../book/src/elementary.md")]
    mod elementary {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/finite.md")]
    mod finite {}
    #[doc = include_str!("../../../book/src/linear.md")]
    mod linear {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
