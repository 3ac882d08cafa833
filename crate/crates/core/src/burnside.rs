//! Tables of marks and necessary conditions for two groups to have
//! isomorphic Burnside rings.
//!
//! A COMPATIBLE verdict only means that every implemented check passed; it
//! never asserts that the rings are isomorphic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::Group;
use crate::spectrum::{compare_order_type, order_equation, OrderEquation, Witness};
use crate::subgroups::lattice::{Bits, SubgroupLattice, DEFAULT_LATTICE_CAP};
use crate::subgroups::{cyclic_subgroup_classes, find_subgroup_of_order};

/// One subgroup class heading a row and column of a [`MarksTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksClass {
    /// Order followed by a letter per class of that order: `1a`, `2a`, `2b`, ...
    pub label: String,
    pub order: u64,
    pub class_size: u64,
    pub generators: Vec<String>,
}

/// `marks[h][k]` is the number of fixed points of class `k` on the cosets of class `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksTable {
    pub class_order: Vec<MarksClass>,
    pub marks: Vec<Vec<u64>>,
}

impl MarksTable {
    pub fn dim(&self) -> usize {
        self.marks.len()
    }
}

fn class_label(order: u64, index: usize) -> String {
    if index < 26 {
        format!("{order}{}", (b'a' + index as u8) as char)
    } else {
        format!("{order}_{}", index + 1)
    }
}

pub fn table_of_marks(group: &Group) -> Result<MarksTable> {
    table_of_marks_with_cap(group, DEFAULT_LATTICE_CAP)
}

pub fn table_of_marks_with_cap(group: &Group, cap: usize) -> Result<MarksTable> {
    Ok(marks_from_lattice(&SubgroupLattice::compute_with_cap(group, cap)?))
}

/// A coset `Hg` is fixed by `K` iff `g k g^-1` lies in `H` for each generator `k` of `K`.
pub fn marks_from_lattice(lattice: &SubgroupLattice) -> MarksTable {
    let n = lattice.n();
    let classes = &lattice.classes;
    let rows: Vec<Vec<u64>> = classes
        .iter()
        .map(|h| {
            let mut covered = Bits::new(n);
            let mut reps = Vec::new();
            for g in 0..n {
                if covered.get(g) {
                    continue;
                }
                reps.push(g);
                for &x in &h.elements {
                    covered.set(lattice.mul(x, g));
                }
            }
            classes
                .iter()
                .map(|k| {
                    reps.iter()
                        .filter(|&&g| {
                            let g_inv = lattice.inverse[g] as usize;
                            k.generators.iter().all(|&y| h.bits.get(lattice.mul(lattice.mul(g, y), g_inv)))
                        })
                        .count() as u64
                })
                .collect()
        })
        .collect();
    let mut seen_per_order: BTreeMap<u64, usize> = BTreeMap::new();
    let class_order = lattice
        .rows()
        .iter()
        .map(|r| {
            let idx = seen_per_order.entry(r.order).or_insert(0);
            let label = class_label(r.order, *idx);
            *idx += 1;
            MarksClass {
                label,
                order: r.order,
                class_size: r.class_size,
                generators: r.generators.iter().map(|g| g.to_string()).collect(),
            }
        })
        .collect();
    MarksTable { class_order, marks: rows }
}

/// Whether a solvable subgroup of a probed order exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeResult {
    /// A solvable subgroup of this order exists.
    Present,
    /// No subgroup of this order exists at all.
    Absent,
    /// Subgroups of this order exist, but the one found is not solvable and no
    /// full classification is available.
    Undecided,
}

/// Sorted `(order, class size)` multisets of solvable and nilpotent subgroup classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeMultisets {
    pub solvable: Vec<(u64, u64)>,
    pub nilpotent: Vec<(u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideInvariant {
    pub group_order: u64,
    pub spectrum: Vec<u64>,
    pub order_equation: OrderEquation,
    pub cyclic_class_multiset: Vec<(u64, u64)>,
    pub solvable_probe_results: BTreeMap<u64, ProbeResult>,
    /// Present only when the full subgroup lattice is within the cap.
    pub lattice_multisets: Option<LatticeMultisets>,
}

pub fn burnside_invariants(group: &Group) -> Result<BurnsideInvariant> {
    burnside_invariants_with_probes(group, &[])
}

pub fn burnside_invariants_with_probes(group: &Group, probes: &[u64]) -> Result<BurnsideInvariant> {
    let eq = order_equation(group)?;
    let cyclic_class_multiset = cyclic_subgroup_classes(group)?.multiset();
    let lattice = if eq.total <= DEFAULT_LATTICE_CAP as u64 { Some(SubgroupLattice::compute(group)?) } else { None };
    let lattice_multisets = lattice.as_ref().map(|l| {
        let collect = |keep: &dyn Fn(&crate::subgroups::SubgroupClassRow) -> bool| {
            let mut v: Vec<(u64, u64)> = l.rows().iter().filter(|r| keep(r)).map(|r| (r.order, r.class_size)).collect();
            v.sort_unstable();
            v
        };
        LatticeMultisets { solvable: collect(&|r| r.is_solvable), nilpotent: collect(&|r| r.is_nilpotent) }
    });
    let mut solvable_probe_results = BTreeMap::new();
    for &m in probes {
        let result = match &lattice {
            Some(l) => {
                if l.rows().iter().any(|r| r.order == m && r.is_solvable) {
                    ProbeResult::Present
                } else if l.rows().iter().any(|r| r.order == m) {
                    ProbeResult::Undecided
                } else {
                    ProbeResult::Absent
                }
            }
            None => match find_subgroup_of_order(group, m)?.found {
                None => ProbeResult::Absent,
                Some(f) if f.is_solvable => ProbeResult::Present,
                Some(_) => ProbeResult::Undecided,
            },
        };
        solvable_probe_results.insert(m, result);
    }
    Ok(BurnsideInvariant {
        group_order: eq.total,
        spectrum: eq.spectrum().to_vec(),
        order_equation: eq,
        cyclic_class_multiset,
        solvable_probe_results,
        lattice_multisets,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Obstructed,
    /// No implemented necessary condition failed.
    Compatible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Compatible => "COMPATIBLE",
        })
    }
}

/// A failed necessary condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Obstruction {
    Order { order_a: u64, order_b: u64 },
    Spectrum { only_in_a: Vec<u64>, only_in_b: Vec<u64> },
    OrderType { d: u64, count_a: u64, count_b: u64 },
    /// Multiset difference of `(order, class size)` over cyclic subgroup classes.
    CyclicClasses { only_in_a: Vec<(u64, u64)>, only_in_b: Vec<(u64, u64)> },
    SolvableClasses { only_in_a: Vec<(u64, u64)>, only_in_b: Vec<(u64, u64)> },
    NilpotentClasses { only_in_a: Vec<(u64, u64)>, only_in_b: Vec<(u64, u64)> },
    /// A solvable subgroup of order `m` exists in exactly one group.
    SolvableProbe { m: u64, a: ProbeResult, b: ProbeResult },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub witnesses: Vec<Obstruction>,
}

/// `(a - b, b - a)` for sorted multisets.
fn multiset_difference(a: &[(u64, u64)], b: &[(u64, u64)]) -> (Vec<(u64, u64)>, Vec<(u64, u64)>) {
    let (mut i, mut j) = (0, 0);
    let (mut only_a, mut only_b) = (Vec::new(), Vec::new());
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                only_a.push(*x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                only_b.push(*y);
                j += 1;
            }
            (Some(x), None) => {
                only_a.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                only_b.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    (only_a, only_b)
}

/// Compares two groups on every implemented Burnside-ring invariant.
pub fn burnside_obstruction(a: &Group, b: &Group, probes: &[u64]) -> Result<ObstructionReport> {
    let ia = burnside_invariants_with_probes(a, probes)?;
    let ib = burnside_invariants_with_probes(b, probes)?;
    Ok(compare_invariants(&ia, &ib))
}

/// Checks run in a fixed order and every failure is reported.
pub fn compare_invariants(a: &BurnsideInvariant, b: &BurnsideInvariant) -> ObstructionReport {
    let mut witnesses = Vec::new();
    if a.group_order != b.group_order {
        witnesses.push(Obstruction::Order { order_a: a.group_order, order_b: b.group_order });
    }
    if a.spectrum != b.spectrum {
        witnesses.push(Obstruction::Spectrum {
            only_in_a: a.spectrum.iter().filter(|n| !b.spectrum.contains(n)).copied().collect(),
            only_in_b: b.spectrum.iter().filter(|n| !a.spectrum.contains(n)).copied().collect(),
        });
    }
    for w in compare_order_type(&a.order_equation, &b.order_equation).witnesses {
        if let Witness::OrderType { d, count_a, count_b } = w {
            witnesses.push(Obstruction::OrderType { d, count_a, count_b });
        }
    }
    let (only_in_a, only_in_b) = multiset_difference(&a.cyclic_class_multiset, &b.cyclic_class_multiset);
    if !only_in_a.is_empty() || !only_in_b.is_empty() {
        witnesses.push(Obstruction::CyclicClasses { only_in_a, only_in_b });
    }
    if let (Some(la), Some(lb)) = (&a.lattice_multisets, &b.lattice_multisets) {
        let (only_in_a, only_in_b) = multiset_difference(&la.solvable, &lb.solvable);
        if !only_in_a.is_empty() || !only_in_b.is_empty() {
            witnesses.push(Obstruction::SolvableClasses { only_in_a, only_in_b });
        }
        let (only_in_a, only_in_b) = multiset_difference(&la.nilpotent, &lb.nilpotent);
        if !only_in_a.is_empty() || !only_in_b.is_empty() {
            witnesses.push(Obstruction::NilpotentClasses { only_in_a, only_in_b });
        }
    }
    for (&m, &ra) in &a.solvable_probe_results {
        let Some(&rb) = b.solvable_probe_results.get(&m) else { continue };
        let decisive = matches!(
            (ra, rb),
            (ProbeResult::Present, ProbeResult::Absent) | (ProbeResult::Absent, ProbeResult::Present)
        );
        if decisive {
            witnesses.push(Obstruction::SolvableProbe { m, a: ra, b: rb });
        }
    }
    let verdict = if witnesses.is_empty() { Verdict::Compatible } else { Verdict::Obstructed };
    ObstructionReport { verdict, witnesses }
}
