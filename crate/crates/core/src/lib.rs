//! Crossed semi-bimodules over finite monoids and the internal categories they
//! induce in the category of monoids.
//!
//! The crate validates crossed modules, crossed semi-modules and crossed
//! semi-bimodules given as multiplication and action tables, builds the
//! associated internal categories and machine-checks every structural claim
//! about them, enumerates all structures on small monoids, and instantiates
//! the rank-two-algebra example `Qu(ℤ/n)`.

pub mod action;
pub mod catalog;
pub mod cli;
pub mod crossed;
pub mod format;
pub mod internal;
pub mod monoid;
pub mod quadratic;
pub mod search;
pub mod witness;

pub use action::{validate_monoid_action, validate_set_action, MonoidAction, SetAction, Side};
pub use monoid::{validate_hom, validate_monoid, FiniteMonoid, Monoid, MonoidHom};
pub use witness::Witness;
