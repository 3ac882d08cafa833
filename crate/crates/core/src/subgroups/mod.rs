//! Subgroup classes: cyclic subgroups up to conjugacy, full lattices of
//! small groups, and exhaustive search for a subgroup of given order.

pub mod cyclic;
pub mod lattice;
pub mod search;

pub use cyclic::{
    cyclic_count_identity, cyclic_subgroup_classes, verify_cyclic_count_identity, CyclicClassRow, CyclicClassTable, IdentityCheck,
    IdentityReport,
};
pub use lattice::{subgroup_lattice, SubgroupClassRow, SubgroupLattice, DEFAULT_LATTICE_CAP};
pub use search::{
    find_subgroup_of_order, find_subgroup_of_order_with_cap, FoundSubgroup, SearchCertificate, SearchOutcome,
    SearchStrategy,
};

use crate::util::factorize;

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    factorize(n as u128).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}
