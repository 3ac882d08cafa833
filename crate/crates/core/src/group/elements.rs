use std::sync::OnceLock;

use indexmap::IndexSet;
use rayon::prelude::*;
use rustc_hash::FxBuildHasher;

use crate::perm::Perm;

/// The enumerated elements of a group, sorted by the canonical (lexicographic
/// image-array) order and indexed for constant-time lookup.
pub struct ElementSet {
    set: IndexSet<Perm, FxBuildHasher>,
    orders: OnceLock<Vec<u32>>,
}

impl ElementSet {
    pub(crate) fn from_unsorted(mut elements: Vec<Perm>) -> Self {
        elements.par_sort_unstable();
        elements.dedup();
        Self::from_sorted(elements)
    }

    pub(crate) fn from_sorted(elements: Vec<Perm>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut set = IndexSet::with_capacity_and_hasher(elements.len(), FxBuildHasher);
        set.extend(elements);
        ElementSet { set, orders: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn get(&self, index: usize) -> &Perm {
        &self.set[index]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.set.get_index_of(p.as_slice())
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.set.contains(p.as_slice())
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Perm> + '_ {
        self.set.iter()
    }

    pub fn to_vec(&self) -> Vec<Perm> {
        self.set.iter().cloned().collect()
    }

    /// Element order of every element, by index.
    pub fn orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            (0..self.len()).into_par_iter().map(|i| self.set[i].element_order() as u32).collect()
        })
    }
}

impl std::fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ElementSet").field("len", &self.len()).finish()
    }
}
