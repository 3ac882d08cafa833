//! Base and strong generating set via the deterministic Schreier–Sims algorithm.

use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[pt] = Some((u, u^-1))` with `base^u = pt`.
    transversal: Vec<Option<(Perm, Perm)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level { base, gens: Vec::new(), orbit: Vec::new(), transversal: vec![None; degree] };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        let id = Perm::identity(degree);
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.transversal[self.base] = Some((id.clone(), id));
        self.orbit.clear();
        self.orbit.push(self.base);
        let mut next = 0;
        while next < self.orbit.len() {
            let pt = self.orbit[next];
            next += 1;
            for s in &self.gens {
                let img = s.apply(pt);
                if self.transversal[img].is_none() {
                    let u = self.transversal[pt].as_ref().unwrap().0.then(s);
                    let inv = u.inverse();
                    self.transversal[img] = Some((u, inv));
                    self.orbit.push(img);
                }
            }
        }
    }
}

/// Stabilizer chain `G = G0 >= G1 >= ... >= Gk = 1`.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    /// Adds `g` to the strong generating set unless it is already a member.
    /// Returns whether the group grew.
    pub(crate) fn add_generator(&mut self, g: &Perm) -> bool {
        if self.contains(g) {
            return false;
        }
        let level = self.levels.iter().position(|l| g.apply(l.base) != l.base);
        let level = match level {
            Some(l) => l,
            None => {
                let base = g.first_moved().expect("non-member cannot be the identity");
                self.levels.push(Level::new(base, self.degree));
                self.levels.len() - 1
            }
        };
        for l in 0..=level {
            self.levels[l].gens.push(g.clone());
            self.levels[l].rebuild_orbit(self.degree);
        }
        self.complete(level);
        true
    }

    /// Runs the Schreier–Sims verification loop downward from level `top`.
    fn complete(&mut self, top: usize) {
        let mut i = top as isize;
        while i >= 0 {
            let iu = i as usize;
            match self.find_missing_schreier_generator(iu) {
                None => i -= 1,
                Some((residue, drop_level)) => {
                    if drop_level == self.levels.len() {
                        let base = residue.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(base, self.degree));
                    }
                    for l in iu + 1..=drop_level {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = drop_level as isize;
                }
            }
        }
    }

    fn find_missing_schreier_generator(&self, i: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[i];
        for &beta in &level.orbit {
            let u_beta = &level.transversal[beta].as_ref().unwrap().0;
            for s in &level.gens {
                let img = s.apply(beta);
                let u_img_inv = &level.transversal[img].as_ref().unwrap().1;
                let h = u_beta.then(s).then(u_img_inv);
                if h.is_identity() {
                    continue;
                }
                let (residue, drop) = self.strip(h, i + 1);
                if drop < self.levels.len() || !residue.is_identity() {
                    return Some((residue, drop));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base);
            match &level.transversal[beta] {
                None => return (g, l),
                Some((_, u_inv)) => g = g.then(u_inv),
            }
        }
        (g, self.levels.len())
    }

    pub(crate) fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, drop) = self.strip(g.clone(), 0);
        drop == self.levels.len() && residue.is_identity()
    }

    pub(crate) fn order(&self) -> Option<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    /// Base points, 0-based.
    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Every element, as products of transversal elements (unsorted).
    pub(crate) fn all_elements(&self) -> Vec<Perm> {
        let mut list = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(list.len() * level.orbit.len());
            for h in &list {
                for &pt in &level.orbit {
                    next.push(h.then(&level.transversal[pt].as_ref().unwrap().0));
                }
            }
            list = next;
        }
        list
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn chain(degree: usize, gens: &[&str]) -> StabChain {
        let gens: Vec<Perm> = gens.iter().map(|g| parse_cycles(g, degree).unwrap()).collect();
        StabChain::new(degree, &gens)
    }

    #[test]
    fn small_orders() {
        assert_eq!(chain(3, &["(1,2,3)", "(1,2)"]).order(), Some(6));
        assert_eq!(chain(4, &["(1,2,3,4)", "(1,2)"]).order(), Some(24));
        assert_eq!(chain(5, &["(1,2,3,4,5)", "(3,4,5)"]).order(), Some(60));
        assert_eq!(chain(4, &["()"]).order(), Some(1));
        assert_eq!(chain(8, &["(1,2,3,4,5,6,7,8)", "(1,2)"]).order(), Some(40320));
    }

    #[test]
    fn membership_and_enumeration() {
        let a4 = chain(4, &["(1,2,3)", "(2,3,4)"]);
        assert!(!a4.contains(&parse_cycles("(1,2)", 4).unwrap()));
        assert!(a4.contains(&parse_cycles("(1,2)(3,4)", 4).unwrap()));
        let mut all = a4.all_elements();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 12);
        assert!(all.iter().all(|g| a4.contains(g)));
    }

    #[test]
    fn base_uses_first_moved_points() {
        let c = chain(6, &["(3,4,5)", "(5,6)"]);
        assert_eq!(c.base()[0], 2);
        assert_eq!(c.order(), Some(24));
        assert_eq!(c.orbit_lengths().iter().product::<usize>(), 24);
    }
}
