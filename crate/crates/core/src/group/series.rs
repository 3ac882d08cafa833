use super::chain::StabChain;
use super::Group;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::util::{factorize, is_prime, p_part, prime_power_base};

impl Group {
    /// Normal closure of `<seeds>` under conjugation by the generators of `self`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> Result<Group> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut chain = StabChain::new(self.degree(), &[]);
        for s in seeds {
            if s.degree() != self.degree() {
                return Err(Error::DegreeMismatch { left: self.degree(), right: s.degree() });
            }
            if chain.add_generator(s) {
                gens.push(s.clone());
            }
        }
        let mut next = 0;
        while next < gens.len() {
            let n = gens[next].clone();
            next += 1;
            for g in self.generators() {
                let c = n.conj(g);
                if chain.add_generator(&c) {
                    gens.push(c);
                }
            }
        }
        if gens.is_empty() {
            return Ok(Group::trivial(self.degree()));
        }
        let group = Group::new(self.degree(), gens)?;
        let _ = group.inner.chain.set(chain);
        Ok(group)
    }

    /// Commutator subgroup: normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Result<Group> {
        let gens = self.generators();
        let mut seeds = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = Perm::commutator(a, b);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    /// `G = G(0) >= G(1) >= ...`, ending at the first term equal to its
    /// predecessor's order or at the trivial group.
    pub fn derived_series(&self) -> Result<Vec<Group>> {
        self.enumerate()?;
        let mut series = vec![self.clone()];
        if self.is_trivial() {
            return Ok(series);
        }
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup()?;
            let stable = next.order() == last.order();
            let trivial = next.order() == 1;
            series.push(next);
            if stable || trivial {
                return Ok(series);
            }
        }
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.last().unwrap().order() == 1)
    }

    /// Nilpotent iff every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let order = self.enumerable_order()? as u128;
        for (p, _) in factorize(order) {
            if !self.sylow(p)?.is_normal_in(self) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A Sylow `p`-subgroup. Starts from the cyclic group of a `p`-element of
    /// maximal order, then repeatedly adjoins a `p`-element of the normalizer
    /// lying outside the current subgroup.
    pub fn sylow(&self, p: u64) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let set = self.enumerate()?;
        let target = p_part(set.len() as u128, p);
        if target == 1 {
            return Ok(Group::trivial(self.degree()));
        }
        let orders = set.orders();
        let is_p_element = |o: u32| o > 1 && prime_power_base(o as u64) == Some(p);
        let start = (0..set.len())
            .filter(|&i| is_p_element(orders[i]))
            .max_by_key(|&i| (orders[i], std::cmp::Reverse(i)))
            .expect("Cauchy: a p-element exists");
        let mut sylow = Group::new(self.degree(), vec![set.get(start).clone()])?;
        while sylow.order() < target {
            let normalizer = self.normalizer(&sylow)?;
            let nset = normalizer.enumerate()?;
            let y = nset
                .iter()
                .find(|y| {
                    let o = y.element_order();
                    o > 1 && prime_power_base(o) == Some(p) && !sylow.contains_unchecked(y)
                })
                .expect("a non-Sylow p-subgroup has a larger p-overgroup in its normalizer")
                .clone();
            sylow = sylow.join(&y)?;
        }
        Ok(sylow)
    }
}

#[cfg(test)]
mod tests {
    use crate::group::Group;
    use crate::perm::parse_cycles;

    fn group(degree: usize, gens: &[&str]) -> Group {
        Group::new(degree, gens.iter().map(|g| parse_cycles(g, degree).unwrap()).collect()).unwrap()
    }

    #[test]
    fn derived_series_orders() {
        let s4 = group(4, &["(1,2,3,4)", "(1,2)"]);
        let orders: Vec<u128> = s4.derived_series().unwrap().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        let a5 = group(5, &["(1,2,3,4,5)", "(3,4,5)"]);
        let orders: Vec<u128> = a5.derived_series().unwrap().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![60, 60]);
        let c6 = group(6, &["(1,2,3,4,5,6)"]);
        let orders: Vec<u128> = c6.derived_series().unwrap().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![6, 1]);
    }

    #[test]
    fn solvable_and_nilpotent() {
        let s3 = group(3, &["(1,2,3)", "(1,2)"]);
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        let a5 = group(5, &["(1,2,3,4,5)", "(3,4,5)"]);
        assert!(s3.is_solvable().unwrap());
        assert!(!s3.is_nilpotent().unwrap());
        assert!(d8.is_nilpotent().unwrap());
        assert!(!a5.is_solvable().unwrap());
        assert!(Group::trivial(2).is_nilpotent().unwrap());
    }

    #[test]
    fn sylow_orders() {
        let s4 = group(4, &["(1,2,3,4)", "(1,2)"]);
        assert_eq!(s4.sylow(2).unwrap().order(), 8);
        assert_eq!(s4.sylow(3).unwrap().order(), 3);
        assert_eq!(s4.sylow(5).unwrap().order(), 1);
        assert!(s4.sylow(4).is_err());
        let a5 = group(5, &["(1,2,3,4,5)", "(3,4,5)"]);
        assert_eq!(a5.sylow(5).unwrap().order(), 5);
        assert_eq!(a5.sylow(2).unwrap().order(), 4);
    }
}
