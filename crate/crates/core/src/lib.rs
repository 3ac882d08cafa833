//! Finite permutation group invariants: order equations, element-order
//! spectra, cyclic subgroup classes, subgroup lattices and tables of marks,
//! together with comparators for "same order type", "same two orders type" and
//! Burnside-ring obstructions.

pub mod cli;
pub mod burnside;
pub mod constructions;
pub mod error;
pub mod group;
pub mod perm;
pub mod spectrum;
pub mod subgroups;
mod util;

pub use error::{Error, Result};
pub use group::{ConjClass, ElementSet, Group, Subgroup};
pub use perm::{format_cycles, parse_cycles, Perm, Point};
