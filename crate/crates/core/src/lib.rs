//! Finite-group engine for crossed modules: Higgins commutators, internal
//! actions and semidirect products, crossed modules over a fixed base,
//! non-abelian tensor products and universal central extensions, together
//! with brute-force oracles (free-product word enumeration, coset
//! enumeration, Smith normal form) used to cross-check the main routines.
//!
//! Everything is exact and deterministic: groups are enumerated breadth-first
//! with a configurable cap, subgroups are sorted index sets, and all derived
//! orderings are reproducible bit for bit.

pub mod action;
pub mod coset;
pub mod error;
pub mod exec;
pub mod group;
pub mod hom;
pub mod perm;
pub mod snf;
pub mod tensor;
pub mod words;
pub mod xmod;

pub use error::{Error, Result};
pub use group::{PermGroup, Subgroup};
pub use hom::GroupHom;
pub use perm::Perm;
