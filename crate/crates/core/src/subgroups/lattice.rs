//! Subgroup lattices of small groups, up to conjugacy.
//!
//! Subgroups are bitsets over the sorted element list of the ambient group and
//! products come from a precomputed multiplication table, so the whole
//! computation stays in index space.

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

/// Default bound on `|G|` for lattice and table-of-marks computations.
pub const DEFAULT_LATTICE_CAP: usize = 500;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupClassRow {
    pub order: u64,
    pub class_size: u64,
    pub is_cyclic: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    /// Generators of the canonical representative.
    #[serde(serialize_with = "serialize_perms")]
    pub generators: Vec<Perm>,
}

fn serialize_perms<S: serde::Serializer>(perms: &[Perm], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(perms.iter().map(|p| p.to_string()))
}

pub(crate) struct LatticeClass {
    /// Sorted element indices of the canonical representative.
    pub(crate) elements: Vec<usize>,
    pub(crate) bits: Bits,
    pub(crate) generators: Vec<usize>,
    pub(crate) class_size: usize,
}

/// All subgroup classes of a small group, sorted by (order, class size,
/// canonical representative). The canonical representative of a class is the
/// conjugate whose sorted element list is least.
pub struct SubgroupLattice {
    pub(crate) group: Group,
    pub(crate) mult: Vec<u32>,
    pub(crate) inverse: Vec<u32>,
    pub(crate) classes: Vec<LatticeClass>,
    rows: Vec<SubgroupClassRow>,
}

impl SubgroupLattice {
    pub fn compute(group: &Group) -> Result<Self> {
        Self::compute_with_cap(group, DEFAULT_LATTICE_CAP)
    }

    pub fn compute_with_cap(group: &Group, cap: usize) -> Result<Self> {
        let order = group.try_order()?;
        if order > cap as u128 {
            return Err(Error::LatticeCapExceeded { order, cap });
        }
        let set = group.enumerate()?;
        let n = set.len();
        let mut mult = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mult[a * n + b] = set.index_of(&set.get(a).then(set.get(b))).unwrap() as u32;
            }
        }
        let inverse: Vec<u32> = (0..n).map(|a| set.index_of(&set.get(a).inverse()).unwrap() as u32).collect();
        let mut builder = Builder { n, mult: &mult, inverse: &inverse, seen: FxHashMap::default(), classes: Vec::new() };

        let mut cyclic: Vec<(Bits, usize)> = Vec::new();
        let mut cyclic_seen = FxHashMap::default();
        for x in 0..n {
            let (bits, _) = builder.closure(&[x]);
            if cyclic_seen.insert(bits.clone(), ()).is_none() {
                cyclic.push((bits, x));
            }
            builder.register(&[x]);
        }
        let mut next = 0;
        while next < builder.classes.len() {
            let gens = builder.classes[next].generators.clone();
            let rep_bits = builder.classes[next].bits.clone();
            next += 1;
            for (c_bits, c_gen) in &cyclic {
                if c_bits.ones().all(|i| rep_bits.get(i)) {
                    continue;
                }
                let mut joined = gens.clone();
                joined.push(*c_gen);
                builder.register(&joined);
            }
        }

        let mut classes = builder.classes;
        classes.sort_by(|a, b| {
            (a.elements.len(), a.class_size, &a.elements).cmp(&(b.elements.len(), b.class_size, &b.elements))
        });
        let orders = set.orders();
        let rows = classes
            .iter()
            .map(|c| {
                let generators: Vec<Perm> = c.generators.iter().map(|&i| set.get(i).clone()).collect();
                let sub = if generators.is_empty() {
                    Group::trivial(group.degree())
                } else {
                    Group::new(group.degree(), generators.clone())?
                };
                Ok(SubgroupClassRow {
                    order: c.elements.len() as u64,
                    class_size: c.class_size as u64,
                    is_cyclic: c.elements.iter().any(|&i| orders[i] as usize == c.elements.len()),
                    is_nilpotent: sub.is_nilpotent()?,
                    is_solvable: sub.is_solvable()?,
                    generators,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SubgroupLattice { group: group.clone(), mult, inverse, classes, rows })
    }

    pub fn rows(&self) -> &[SubgroupClassRow] {
        &self.rows
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Total number of subgroups, summed over classes.
    pub fn subgroup_count(&self) -> u64 {
        self.rows.iter().map(|r| r.class_size).sum()
    }

    /// Sorted element list of the canonical representative of class `i`.
    pub fn representative_elements(&self, i: usize) -> Vec<Perm> {
        let set = self.group.enumerate().expect("enumerated at construction");
        self.classes[i].elements.iter().map(|&e| set.get(e).clone()).collect()
    }

    pub(crate) fn n(&self) -> usize {
        self.inverse.len()
    }

    #[inline]
    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.n() + b] as usize
    }
}

struct Builder<'a> {
    n: usize,
    mult: &'a [u32],
    inverse: &'a [u32],
    seen: FxHashMap<Bits, usize>,
    classes: Vec<LatticeClass>,
}

impl Builder<'_> {
    fn closure(&self, gens: &[usize]) -> (Bits, Vec<usize>) {
        let mut bits = Bits::new(self.n);
        let mut list = vec![0usize];
        bits.set(0);
        let mut next = 0;
        while next < list.len() {
            let x = list[next];
            next += 1;
            for &g in gens {
                let y = self.mult[x * self.n + g] as usize;
                if !bits.get(y) {
                    bits.set(y);
                    list.push(y);
                }
            }
        }
        (bits, list)
    }

    fn conjugate(&self, elements: &[usize], g: usize) -> Bits {
        let g_inv = self.inverse[g] as usize;
        let mut bits = Bits::new(self.n);
        for &x in elements {
            let y = self.mult[self.mult[g_inv * self.n + x] as usize * self.n + g] as usize;
            bits.set(y);
        }
        bits
    }

    /// Records `<gens>` and its whole conjugacy class if not seen before.
    fn register(&mut self, gens: &[usize]) {
        let (bits, _) = self.closure(gens);
        if self.seen.contains_key(&bits) {
            return;
        }
        let id = self.classes.len();
        let elements: Vec<usize> = bits.ones().collect();
        let mut conjugates: Vec<Bits> = Vec::new();
        for g in 0..self.n {
            let c = self.conjugate(&elements, g);
            if let std::collections::hash_map::Entry::Vacant(e) = self.seen.entry(c.clone()) {
                e.insert(id);
                conjugates.push(c);
            }
        }
        let canonical = conjugates
            .iter()
            .map(|b| b.ones().collect::<Vec<usize>>())
            .min()
            .expect("a subgroup is its own conjugate");
        let generators = self.greedy_generators(&canonical);
        let mut canonical_bits = Bits::new(self.n);
        canonical.iter().for_each(|&i| canonical_bits.set(i));
        self.classes.push(LatticeClass {
            elements: canonical,
            bits: canonical_bits,
            generators,
            class_size: conjugates.len(),
        });
    }

    fn greedy_generators(&self, elements: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let (mut current, _) = self.closure(&gens);
        for &x in elements {
            if !current.get(x) {
                gens.push(x);
                current = self.closure(&gens).0;
            }
        }
        gens
    }
}

/// Every subgroup class of a group of order at most [`DEFAULT_LATTICE_CAP`].
pub fn subgroup_lattice(group: &Group) -> Result<Vec<SubgroupClassRow>> {
    Ok(SubgroupLattice::compute(group)?.rows)
}
