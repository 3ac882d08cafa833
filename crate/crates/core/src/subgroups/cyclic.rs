//! Conjugacy classes of cyclic subgroups.

use std::collections::{BTreeMap, BTreeSet};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::euler_phi;
use crate::error::Result;
use crate::group::Group;
use crate::perm::Perm;
use crate::spectrum::{order_equation, OrderEquation};
use crate::util::gcd;

/// One conjugacy class of cyclic subgroups of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicClassRow {
    pub n: u64,
    /// Canonical minimum among the generators of every subgroup in the class.
    pub representative: Perm,
    /// Number of conjugates, `|G : N_G(C)|`.
    pub class_size: u64,
    pub normalizer_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicClassTable {
    /// Sorted by `(n, representative)`.
    pub rows: Vec<CyclicClassRow>,
}

impl CyclicClassTable {
    pub fn rows_of_order(&self, n: u64) -> impl Iterator<Item = &CyclicClassRow> + '_ {
        self.rows.iter().filter(move |r| r.n == n)
    }

    /// Sorted multiset of `(subgroup order, class size)`.
    pub fn multiset(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = self.rows.iter().map(|r| (r.n, r.class_size)).collect();
        out.sort_unstable();
        out
    }
}

/// Every cyclic subgroup up to conjugacy.
///
/// Each cyclic subgroup is keyed by its least generator. The conjugation
/// action of `G`'s generators on these keys is explored orbit by orbit; the
/// orbit length is the class size, and the normalizer order follows by
/// orbit-stabilizer.
pub fn cyclic_subgroup_classes(group: &Group) -> Result<CyclicClassTable> {
    let set = group.enumerate()?;
    let order = set.len() as u64;
    let orders = set.orders();
    let n = set.len();

    // key[x] = least element index generating <x>.
    let mut key = vec![u32::MAX; n];
    let mut powers: Vec<usize> = Vec::new();
    for i in 0..n {
        if key[i] != u32::MAX {
            continue;
        }
        let x = set.get(i);
        let m = orders[i] as u64;
        powers.clear();
        let mut cur = x.clone();
        for k in 1..=m {
            if gcd(k, m) == 1 {
                powers.push(set.index_of(&cur).expect("closed under powers"));
            }
            cur = cur.then(x);
        }
        let least = *powers.iter().min().unwrap() as u32;
        for &p in &powers {
            key[p] = least;
        }
    }

    let mut visited: FxHashMap<u32, ()> = FxHashMap::default();
    let mut rows = Vec::new();
    let mut queue: Vec<u32> = Vec::new();
    for i in 0..n {
        if key[i] != i as u32 || visited.contains_key(&(i as u32)) {
            continue;
        }
        visited.insert(i as u32, ());
        queue.clear();
        queue.push(i as u32);
        let mut next = 0;
        while next < queue.len() {
            let x = set.get(queue[next] as usize);
            next += 1;
            for g in group.generators() {
                let y = set.index_of(&x.conj(g)).expect("closed under conjugation");
                let k = key[y];
                if visited.insert(k, ()).is_none() {
                    queue.push(k);
                }
            }
        }
        let class_size = queue.len() as u64;
        rows.push(CyclicClassRow {
            n: orders[i] as u64,
            representative: set.get(i).clone(),
            class_size,
            normalizer_order: order / class_size,
        });
    }
    rows.sort_by(|a, b| (a.n, &a.representative).cmp(&(b.n, &b.representative)));
    Ok(CyclicClassTable { rows })
}

/// Per element order `n`: `lhs = sum of class_size * phi(n)` over the
/// order-`n` cyclic classes, `rhs = number of elements of order n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub n: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub ok: bool,
}

/// Checks that cyclic class sizes weighted by `phi(n)` reproduce the order equation.
pub fn verify_cyclic_count_identity(group: &Group) -> Result<IdentityReport> {
    let table = cyclic_subgroup_classes(group)?;
    let eq = order_equation(group)?;
    Ok(cyclic_count_identity(table.rows.iter().map(|r| (r.n, r.class_size)), &eq))
}

/// The identity check from `(n, class size)` pairs of the cyclic classes.
pub fn cyclic_count_identity(classes: impl IntoIterator<Item = (u64, u64)>, eq: &OrderEquation) -> IdentityReport {
    let mut lhs: BTreeMap<u64, u64> = BTreeMap::new();
    for (n, class_size) in classes {
        *lhs.entry(n).or_insert(0) += class_size * euler_phi(n);
    }
    let keys: BTreeSet<u64> = lhs.keys().chain(eq.counts.keys()).copied().collect();
    let checks: Vec<IdentityCheck> = keys
        .into_iter()
        .map(|n| {
            let l = lhs.get(&n).copied().unwrap_or(0);
            let r = eq.count(n);
            IdentityCheck { n, lhs: l, rhs: r, ok: l == r }
        })
        .collect();
    let ok = checks.iter().all(|c| c.ok);
    IdentityReport { checks, ok }
}
