//! Exhaustive search for a subgroup of a given order.
//!
//! Two strategies give answers that are proofs either way:
//!
//! * small groups consult the full subgroup lattice;
//! * if for some prime `p` the `p`-part of `m` equals the `p`-part of `|G|`,
//!   every subgroup `H` of order `m` contains a Sylow `p`-subgroup of `G`.
//!   Sylow subgroups are conjugate and conjugation preserves order, so it is
//!   enough to look for `H` containing one fixed Sylow subgroup `P`. Such an
//!   `H` is generated by `P` together with `q`-elements (`q != p`) of order
//!   dividing the `q`-part of `m`, and adding them one at a time passes only
//!   through subgroups whose order divides `m`. The search therefore explores
//!   overgroups of `P` level by level, closing with one candidate element at a
//!   time and discarding closures that grow past `m` or whose order does not
//!   divide `m`. At the first level candidates are taken up to conjugacy under
//!   `N_G(P)`, which fixes `P`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::lattice::{Bits, SubgroupLattice, DEFAULT_LATTICE_CAP};
use crate::error::{Error, Result};
use crate::group::{ElementSet, Group};
use crate::perm::Perm;
use crate::util::{factorize, p_part, prime_power_base};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStrategy {
    /// Answered without search: `m` does not divide `|G|`, or `m` is `1` or `|G|`.
    Trivial,
    Lattice,
    SylowOvergroups,
}

/// Audit trail of an overgroup search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCertificate {
    pub target_order: u64,
    pub group_order: u64,
    pub prime: u64,
    pub sylow_order: u64,
    /// Generators of the fixed Sylow subgroup, in cycle notation.
    pub sylow_generators: Vec<String>,
    pub sylow_normalizer_order: u64,
    /// Number of `q`-elements eligible as extra generators.
    pub candidate_elements: u64,
    /// Candidate classes under conjugation by the Sylow normalizer.
    pub first_level_representatives: u64,
    /// Closures computed at each level (level 1 = `<P, x>`, level 2 = `<P, x, y>`, ...).
    pub closures_per_level: Vec<u64>,
    /// Distinct proper overgroups of order dividing `m` found at each level.
    pub subgroups_per_level: Vec<u64>,
    /// Closure outcomes: order -> count, with `"exceeded"` for closures larger than `m`.
    pub closure_orders: BTreeMap<String, u64>,
    pub found: bool,
}

#[derive(Clone, Debug)]
pub struct FoundSubgroup {
    pub group: Group,
    pub is_solvable: bool,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub target_order: u64,
    pub strategy: SearchStrategy,
    pub found: Option<FoundSubgroup>,
    pub certificate: Option<SearchCertificate>,
}

/// A subgroup of order exactly `m`, or a proof that none exists.
pub fn find_subgroup_of_order(group: &Group, m: u64) -> Result<SearchOutcome> {
    find_subgroup_of_order_with_cap(group, m, DEFAULT_LATTICE_CAP)
}

pub fn find_subgroup_of_order_with_cap(group: &Group, m: u64, lattice_cap: usize) -> Result<SearchOutcome> {
    let set = group.enumerate()?;
    let order = set.len() as u64;
    let trivial = |found: Option<Group>| -> Result<SearchOutcome> {
        let found = found.map(|g| Ok::<_, Error>(FoundSubgroup { is_solvable: g.is_solvable()?, group: g })).transpose()?;
        Ok(SearchOutcome { target_order: m, strategy: SearchStrategy::Trivial, found, certificate: None })
    };
    if m == 0 || order % m != 0 {
        return trivial(None);
    }
    if m == 1 {
        return trivial(Some(Group::trivial(group.degree())));
    }
    if m == order {
        return trivial(Some(group.clone()));
    }
    if set.len() <= lattice_cap {
        let lattice = SubgroupLattice::compute_with_cap(group, lattice_cap)?;
        let found = lattice
            .rows()
            .iter()
            .find(|r| r.order == m)
            .map(|r| FoundSubgroup { group: Group::new(group.degree(), r.generators.clone()).unwrap(), is_solvable: r.is_solvable });
        return Ok(SearchOutcome { target_order: m, strategy: SearchStrategy::Lattice, found, certificate: None });
    }
    let prime = factorize(m as u128)
        .into_iter()
        .filter(|&(p, _)| p_part(m as u128, p) == p_part(order as u128, p))
        .max_by_key(|&(p, _)| (p_part(m as u128, p), std::cmp::Reverse(p)))
        .map(|(p, _)| p)
        .ok_or(Error::UnsupportedSearch { order: m, group_order: order as u128 })?;
    sylow_overgroup_search(group, set, m, prime)
}

struct Sub {
    bits: Bits,
    elements: Vec<u32>,
}

enum Closure {
    Exceeded,
    Sub(Sub),
}

/// `<base, x>` as a union of right cosets of `base`, abandoned once it would exceed `cap`.
fn close_with(set: &ElementSet, base: &Sub, base_gens: &[Perm], x: &Perm, cap: usize) -> Closure {
    let mut bits = base.bits.clone();
    let mut elements = base.elements.clone();
    let mut reps = vec![Perm::identity(x.degree())];
    let gens: Vec<&Perm> = base_gens.iter().chain(std::iter::once(x)).collect();
    let mut next = 0;
    while next < reps.len() {
        let r = reps[next].clone();
        next += 1;
        for s in &gens {
            let t = r.then(s);
            let ti = set.index_of(&t).expect("closed under products");
            if bits.get(ti) {
                continue;
            }
            if elements.len() + base.elements.len() > cap {
                return Closure::Exceeded;
            }
            for &b in &base.elements {
                let bi = set.index_of(&set.get(b as usize).then(&t)).unwrap();
                bits.set(bi);
                elements.push(bi as u32);
            }
            reps.push(t);
        }
    }
    elements.sort_unstable();
    Closure::Sub(Sub { bits, elements })
}

fn sub_of(set: &ElementSet, group: &Group) -> Result<Sub> {
    let sub_set = group.enumerate()?;
    let mut bits = Bits::new(set.len());
    let mut elements: Vec<u32> = sub_set.iter().map(|p| set.index_of(p).expect("subgroup member") as u32).collect();
    elements.sort_unstable();
    elements.iter().for_each(|&i| bits.set(i as usize));
    Ok(Sub { bits, elements })
}

fn to_group(set: &ElementSet, degree: usize, sub: &Sub) -> Group {
    Group::from_sorted_elements(degree, sub.elements.iter().map(|&i| set.get(i as usize).clone()).collect())
}

fn sylow_overgroup_search(group: &Group, set: &ElementSet, m: u64, prime: u64) -> Result<SearchOutcome> {
    let order = set.len() as u64;
    let sylow = group.sylow(prime)?;
    let normalizer = group.normalizer(&sylow)?;
    let orders = set.orders();

    let candidates: Vec<usize> = (0..set.len())
        .filter(|&i| {
            let o = orders[i] as u64;
            match prime_power_base(o) {
                Some(q) => q != prime && p_part(m as u128, q) % o as u128 == 0,
                None => false,
            }
        })
        .collect();

    // Orbit representatives of N_G(P) acting on the candidates by conjugation.
    let mut first_level = Vec::new();
    let mut seen = vec![false; set.len()];
    for &c in &candidates {
        if seen[c] {
            continue;
        }
        first_level.push(c);
        seen[c] = true;
        let mut queue = vec![c];
        while let Some(x) = queue.pop() {
            for g in normalizer.generators() {
                let y = set.index_of(&set.get(x).conj(g)).unwrap();
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
    }

    let mut cert = SearchCertificate {
        target_order: m,
        group_order: order,
        prime,
        sylow_order: sylow.order() as u64,
        sylow_generators: sylow.generators().iter().map(|g| g.to_string()).collect(),
        sylow_normalizer_order: normalizer.order() as u64,
        candidate_elements: candidates.len() as u64,
        first_level_representatives: first_level.len() as u64,
        closures_per_level: Vec::new(),
        subgroups_per_level: Vec::new(),
        closure_orders: BTreeMap::new(),
        found: false,
    };

    if sylow.order() as u64 == m {
        cert.found = true;
        let is_solvable = sylow.is_solvable()?;
        return Ok(SearchOutcome {
            target_order: m,
            strategy: SearchStrategy::SylowOvergroups,
            found: Some(FoundSubgroup { group: sylow, is_solvable }),
            certificate: Some(cert),
        });
    }
    let start = sub_of(set, &sylow)?;
    let mut visited: FxHashSet<Bits> = FxHashSet::default();
    visited.insert(start.bits.clone());
    let mut current: Vec<(Sub, Vec<Perm>)> = vec![(start, sylow.generators().to_vec())];
    let mut level = 0;
    while !current.is_empty() {
        let pool = if level == 0 { &first_level } else { &candidates };
        let mut next_level = Vec::new();
        let mut closures = 0u64;
        for (base, gens) in &current {
            let xs: Vec<usize> = pool.iter().copied().filter(|&x| !base.bits.get(x)).collect();
            let results: Vec<Closure> =
                xs.par_iter().map(|&x| close_with(set, base, gens, set.get(x), m as usize)).collect();
            closures += results.len() as u64;
            for (x, result) in xs.into_iter().zip(results) {
                let sub = match result {
                    Closure::Exceeded => {
                        *cert.closure_orders.entry("exceeded".to_string()).or_insert(0) += 1;
                        continue;
                    }
                    Closure::Sub(sub) => sub,
                };
                let size = sub.elements.len() as u64;
                *cert.closure_orders.entry(size.to_string()).or_insert(0) += 1;
                if m % size != 0 || !visited.insert(sub.bits.clone()) {
                    continue;
                }
                if size == m {
                    cert.closures_per_level.push(closures);
                    cert.subgroups_per_level.push(next_level.len() as u64 + 1);
                    cert.found = true;
                    let found = to_group(set, group.degree(), &sub);
                    let is_solvable = found.is_solvable()?;
                    return Ok(SearchOutcome {
                        target_order: m,
                        strategy: SearchStrategy::SylowOvergroups,
                        found: Some(FoundSubgroup { group: found, is_solvable }),
                        certificate: Some(cert),
                    });
                }
                let mut next_gens = gens.clone();
                next_gens.push(set.get(x).clone());
                next_level.push((sub, next_gens));
            }
        }
        cert.closures_per_level.push(closures);
        cert.subgroups_per_level.push(next_level.len() as u64);
        current = next_level;
        level += 1;
    }
    Ok(SearchOutcome { target_order: m, strategy: SearchStrategy::SylowOvergroups, found: None, certificate: Some(cert) })
}
