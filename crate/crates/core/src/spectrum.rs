//! Order equations, `|G(d)|` counts, element-order spectra and the two
//! equivalence comparators built on them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::Group;
use crate::util::lcm;

/// Number of elements of each order: `|G| = n_1 + n_2 + ... + n_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderEquation {
    /// Element order -> number of elements of that order. Zero counts are omitted.
    pub counts: BTreeMap<u64, u64>,
    pub total: u64,
}

impl OrderEquation {
    pub fn from_counts(counts: BTreeMap<u64, u64>) -> Self {
        let counts: BTreeMap<u64, u64> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        let total = counts.values().sum();
        OrderEquation { counts, total }
    }

    pub fn count(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// `|G(d)| = sum of n_i over i | d`.
    pub fn g_of_d(&self, d: u64) -> u64 {
        assert!(d >= 1, "d must be positive");
        self.counts.iter().filter(|(&i, _)| d % i == 0).map(|(_, &c)| c).sum()
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum { orders: self.counts.keys().copied().collect() }
    }

    pub fn exponent(&self) -> u64 {
        self.counts.keys().fold(1, |acc, &k| lcm(acc, k))
    }

    /// Renders as `40320 = 1 + 435 + ...`, terms in ascending order of element order.
    pub fn equation_string(&self) -> String {
        let terms: Vec<String> = self.counts.values().map(|c| c.to_string()).collect();
        format!("{} = {}", self.total, terms.join(" + "))
    }
}

/// The set of element orders, `pi_e(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub orders: BTreeSet<u64>,
}

impl Spectrum {
    pub fn contains(&self, n: u64) -> bool {
        self.orders.contains(&n)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.orders.iter().copied().collect()
    }
}

/// Why two groups failed a comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Least `d` with `|A(d)| != |B(d)|`.
    OrderType { d: u64, count_a: u64, count_b: u64 },
    /// Group orders differ.
    Order { order_a: u64, order_b: u64 },
    /// Spectra differ.
    Spectrum { only_in_a: Vec<u64>, only_in_b: Vec<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeVerdict {
    pub equal: bool,
    pub witnesses: Vec<Witness>,
}

impl TypeVerdict {
    fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        TypeVerdict { equal: witnesses.is_empty(), witnesses }
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

pub fn order_equation(group: &Group) -> Result<OrderEquation> {
    let set = group.enumerate()?;
    let mut counts = BTreeMap::new();
    for &o in set.orders() {
        *counts.entry(o as u64).or_insert(0) += 1;
    }
    Ok(OrderEquation::from_counts(counts))
}

/// `|{x in G : x^d = 1}|`.
pub fn g_of_d(group: &Group, d: u64) -> Result<u64> {
    Ok(order_equation(group)?.g_of_d(d))
}

pub fn spectrum(group: &Group) -> Result<Spectrum> {
    Ok(order_equation(group)?.spectrum())
}

pub fn same_order_type(a: &Group, b: &Group) -> Result<TypeVerdict> {
    Ok(compare_order_type(&order_equation(a)?, &order_equation(b)?))
}

/// Equal iff the order equations agree. On failure the witness is the least
/// `d` where `|A(d)|` and `|B(d)|` differ; that `d` is at most the least
/// element order whose counts differ, so the scan is finite.
pub fn compare_order_type(a: &OrderEquation, b: &OrderEquation) -> TypeVerdict {
    if a == b {
        return TypeVerdict::from_witnesses(Vec::new());
    }
    let bound = a
        .counts
        .keys()
        .chain(b.counts.keys())
        .copied()
        .filter(|&n| a.count(n) != b.count(n))
        .min()
        .expect("unequal equations differ at some order");
    let witness = (1..=bound)
        .map(|d| (d, a.g_of_d(d), b.g_of_d(d)))
        .find(|(_, ca, cb)| ca != cb)
        .map(|(d, count_a, count_b)| Witness::OrderType { d, count_a, count_b })
        .expect("counts differ at the bound");
    TypeVerdict::from_witnesses(vec![witness])
}

pub fn same_two_orders_type(a: &Group, b: &Group) -> Result<TypeVerdict> {
    Ok(compare_two_orders(&order_equation(a)?, &order_equation(b)?))
}

/// Equal iff `|A| = |B|` and `pi_e(A) = pi_e(B)`.
pub fn compare_two_orders(a: &OrderEquation, b: &OrderEquation) -> TypeVerdict {
    let mut witnesses = Vec::new();
    if a.total != b.total {
        witnesses.push(Witness::Order { order_a: a.total, order_b: b.total });
    }
    let (sa, sb) = (a.spectrum(), b.spectrum());
    if sa != sb {
        witnesses.push(Witness::Spectrum {
            only_in_a: sa.orders.difference(&sb.orders).copied().collect(),
            only_in_b: sb.orders.difference(&sa.orders).copied().collect(),
        });
    }
    TypeVerdict::from_witnesses(witnesses)
}
