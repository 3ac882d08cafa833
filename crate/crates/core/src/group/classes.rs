use std::sync::Arc;

use rayon::prelude::*;

use super::Group;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// A conjugacy class of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Canonical minimum of the class.
    pub representative: Perm,
    pub size: usize,
    pub element_order: u64,
}

pub(crate) struct ClassData {
    pub(crate) classes: Vec<ConjClass>,
    /// Class id of every element, by element index.
    pub(crate) class_of: Vec<u32>,
}

impl Group {
    fn class_data(&self) -> Result<&ClassData> {
        if let Some(data) = self.inner.classes.get() {
            return Ok(data);
        }
        let set = self.enumerate()?;
        let data = self.inner.classes.get_or_init(|| {
            let n = set.len();
            let orders = set.orders();
            let mut raw_class = vec![u32::MAX; n];
            let mut raw: Vec<(usize, usize)> = Vec::new(); // (min index, size)
            let mut queue = Vec::new();
            for start in 0..n {
                if raw_class[start] != u32::MAX {
                    continue;
                }
                let id = raw.len() as u32;
                raw_class[start] = id;
                queue.clear();
                queue.push(start);
                let mut next = 0;
                while next < queue.len() {
                    let x = set.get(queue[next]);
                    next += 1;
                    for g in self.generators() {
                        let y = set.index_of(&x.conj(g)).expect("group closed under conjugation");
                        if raw_class[y] == u32::MAX {
                            raw_class[y] = id;
                            queue.push(y);
                        }
                    }
                }
                raw.push((start, queue.len()));
            }
            let mut order: Vec<usize> = (0..raw.len()).collect();
            order.sort_by_key(|&c| (orders[raw[c].0], raw[c].0));
            let mut rank = vec![0u32; raw.len()];
            for (new, &old) in order.iter().enumerate() {
                rank[old] = new as u32;
            }
            let classes = order
                .iter()
                .map(|&c| ConjClass {
                    representative: set.get(raw[c].0).clone(),
                    size: raw[c].1,
                    element_order: orders[raw[c].0] as u64,
                })
                .collect();
            let class_of = raw_class.into_iter().map(|c| rank[c as usize]).collect();
            Arc::new(ClassData { classes, class_of })
        });
        Ok(data)
    }

    /// Conjugacy classes sorted by (element order, representative).
    pub fn conjugacy_classes(&self) -> Result<&[ConjClass]> {
        Ok(&self.class_data()?.classes)
    }

    /// Index into [`Group::conjugacy_classes`] of the class containing `x`.
    pub fn class_index(&self, x: &Perm) -> Result<usize> {
        let data = self.class_data()?;
        let idx = self.enumerate()?.index_of(x).ok_or_else(|| Error::NotAMember { element: x.to_string() })?;
        Ok(data.class_of[idx] as usize)
    }

    /// `C_G(x)`, by scanning the element list.
    pub fn centralizer(&self, x: &Perm) -> Result<Group> {
        if !self.contains(x)? {
            return Err(Error::NotAMember { element: x.to_string() });
        }
        let set = self.enumerate()?;
        let members: Vec<Perm> = (0..set.len())
            .into_par_iter()
            .filter_map(|i| {
                let g = set.get(i);
                (x.then(g) == g.then(x)).then(|| g.clone())
            })
            .collect();
        Ok(Group::from_sorted_elements(self.degree(), members))
    }

    /// `N_G(H)`. Each `g` is tested by conjugating the generators of `H` and
    /// checking membership.
    pub fn normalizer(&self, h: &Group) -> Result<Group> {
        if h.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: h.degree() });
        }
        if let Some(bad) = h.generators().iter().find(|g| !self.contains_unchecked(g)) {
            return Err(Error::NotASubgroup { generator: bad.to_string() });
        }
        let set = self.enumerate()?;
        if h.is_trivial() {
            return Ok(self.clone());
        }
        // Fill H's caches before the parallel scan.
        h.try_order()?;
        let members: Vec<Perm> = (0..set.len())
            .into_par_iter()
            .filter_map(|i| {
                let g = set.get(i);
                h.generators().iter().all(|x| h.contains_unchecked(&x.conj(g))).then(|| g.clone())
            })
            .collect();
        Ok(Group::from_sorted_elements(self.degree(), members))
    }
}
