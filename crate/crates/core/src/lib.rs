//! Solid and rigid monoids in computable closed symmetric monoidal
//! categories.
//!
//! The workhorse is [`fgab::FgAb`], finitely generated abelian groups with
//! exact tensor and hom. Generic deciders in [`monoid`] and
//! [`localization`] run over any [`category::ClosedMonoidal`] instance.

pub mod arith;
pub mod catalog;
pub mod category;
pub mod document;
pub mod error;
pub mod fgab;
pub mod finmodels;
pub mod intlinalg;
pub mod localization;
pub mod monoid;
pub mod verdict;

pub use error::{Error, Result};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/monoids.md")]
    mod monoids {}
    #[doc = include_str!("../../../book/src/localizations.md")]
    mod localizations {}
    #[doc = include_str!("../../../book/src/finite-models.md")]
    mod finite_models {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
