//! Permutation groups given by generators.
//!
//! A [`Group`] is a cheap handle (`Arc`) over immutable generator data plus
//! lazily filled caches: the stabilizer chain, the sorted element list and the
//! conjugacy classes. Each cache is filled at most once and its contents do not
//! depend on which thread filled it.

mod chain;
mod classes;
mod elements;
mod series;

use std::sync::{Arc, OnceLock};

pub use classes::ConjClass;
pub use elements::ElementSet;

use crate::error::{Error, Result};
use crate::perm::Perm;
use chain::StabChain;
use classes::ClassData;

/// Default bound on the number of elements a group may enumerate.
pub const DEFAULT_ENUMERATION_CAP: usize = 2_000_000;

/// Subgroups are ordinary groups whose generators lie in a parent group.
pub type Subgroup = Group;

#[derive(Clone)]
pub struct Group {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Perm>,
    cap: usize,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Arc<ElementSet>>,
    classes: OnceLock<Arc<ClassData>>,
}

impl Group {
    /// `<gens>`. Identity generators are dropped; duplicates are kept once.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: bad.degree() });
        }
        let mut pruned: Vec<Perm> = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_identity() && !pruned.contains(&g) {
                pruned.push(g);
            }
        }
        Ok(Self::from_parts(degree, pruned, DEFAULT_ENUMERATION_CAP))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), DEFAULT_ENUMERATION_CAP)
    }

    fn from_parts(degree: usize, generators: Vec<Perm>, cap: usize) -> Self {
        Group {
            inner: Arc::new(Inner {
                degree,
                generators,
                cap,
                chain: OnceLock::new(),
                elements: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        }
    }

    /// Same group with a different enumeration cap. Already computed caches are kept.
    pub fn with_enumeration_cap(&self, cap: usize) -> Self {
        let inner = &self.inner;
        let fresh = Inner {
            degree: inner.degree,
            generators: inner.generators.clone(),
            cap,
            chain: inner.chain.clone(),
            elements: inner.elements.clone(),
            classes: inner.classes.clone(),
        };
        Group { inner: Arc::new(fresh) }
    }

    /// A group whose full, sorted element list is already known.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Perm>) -> Self {
        let set = ElementSet::from_sorted(elements);
        let mut gens: Vec<Perm> = Vec::new();
        let mut chain = StabChain::new(degree, &[]);
        for g in set.iter() {
            if chain.add_generator(g) {
                gens.push(g.clone());
            }
        }
        let group = Self::from_parts(degree, gens, DEFAULT_ENUMERATION_CAP);
        let _ = group.inner.chain.set(chain);
        let _ = group.inner.elements.set(Arc::new(set));
        group
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// Generators after pruning identities; empty for the trivial group.
    pub fn generators(&self) -> &[Perm] {
        &self.inner.generators
    }

    pub fn enumeration_cap(&self) -> usize {
        self.inner.cap
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    fn chain(&self) -> &StabChain {
        self.inner.chain.get_or_init(|| StabChain::new(self.degree(), self.generators()))
    }

    /// Exact order from the stabilizer chain.
    pub fn try_order(&self) -> Result<u128> {
        self.chain().order().ok_or(Error::OrderOverflow)
    }

    /// Exact order from the stabilizer chain.
    ///
    /// Panics if the order does not fit in a `u128`; use [`Group::try_order`]
    /// for groups of unknown size.
    pub fn order(&self) -> u128 {
        self.try_order().expect("group order overflows u128")
    }

    /// Base points of the stabilizer chain, 1-based.
    pub fn base(&self) -> Vec<u32> {
        self.chain().base().into_iter().map(|b| b as u32 + 1).collect()
    }

    /// Orbit lengths along the stabilizer chain; their product is the order.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain().orbit_lengths()
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: p.degree() });
        }
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &Perm) -> bool {
        match self.inner.elements.get() {
            Some(set) => set.contains(p),
            None => self.chain().contains(p),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.generators().is_empty()
    }

    /// All elements in canonical order.
    pub fn enumerate(&self) -> Result<&ElementSet> {
        if let Some(set) = self.inner.elements.get() {
            return Ok(set);
        }
        let order = self.try_order()?;
        if order > self.enumeration_cap() as u128 {
            return Err(Error::EnumerationCapExceeded { order, cap: self.enumeration_cap() });
        }
        let set = self
            .inner
            .elements
            .get_or_init(|| Arc::new(ElementSet::from_unsorted(self.chain().all_elements())));
        Ok(set)
    }

    /// Order as a `usize`, failing if the group cannot be enumerated.
    pub(crate) fn enumerable_order(&self) -> Result<usize> {
        Ok(self.enumerate()?.len())
    }

    /// The subgroup generated by `gens`, each of which must lie in `self`.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<Group> {
        for g in &gens {
            if !self.contains(g)? {
                return Err(Error::NotAMember { element: g.to_string() });
            }
        }
        if gens.is_empty() {
            return Ok(Group::trivial(self.degree()));
        }
        Group::new(self.degree(), gens)
    }

    /// `<self, extra>`.
    pub fn join(&self, extra: &Perm) -> Result<Group> {
        let mut gens = self.generators().to_vec();
        gens.push(extra.clone());
        Group::new(self.degree(), gens)
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains_unchecked(g))
    }

    /// Whether `self` is normalized by every generator of `parent`.
    pub fn is_normal_in(&self, parent: &Group) -> bool {
        self.is_subgroup_of(parent)
            && parent
                .generators()
                .iter()
                .all(|g| self.generators().iter().all(|h| self.contains_unchecked(&h.conj(g))))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> Result<u64> {
        let set = self.enumerate()?;
        Ok(set.orders().iter().fold(1u64, |acc, &o| crate::util::lcm(acc, o as u64)))
    }

    /// Canonical generator text, used for content-addressed caching.
    pub fn canonical_key(&self) -> String {
        let mut gens: Vec<&Perm> = self.generators().iter().collect();
        gens.sort();
        let mut out = format!("degree {}", self.degree());
        for g in gens {
            out.push('\n');
            out.push_str(&g.to_string());
        }
        out
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree())
            .field("generators", &self.generators())
            .finish()
    }
}
