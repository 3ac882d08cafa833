mod common;

use std::collections::HashSet;

use common::{all_subgroups, closure, elements, mul, inv, perm, random_raw, random_subgroups, raw, Raw};
use ordtype::constructions::{alternating, cyclic, dihedral, direct_product, quaternion8, symmetric};
use ordtype::spectrum::order_equation;
use ordtype::subgroups::{
    cyclic_subgroup_classes, euler_phi, find_subgroup_of_order, find_subgroup_of_order_with_cap,
    verify_cyclic_count_identity, SubgroupLattice,
};
use ordtype::Group;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_groups() -> Vec<Group> {
    vec![
        symmetric(3).unwrap(),
        symmetric(4).unwrap(),
        alternating(4).unwrap(),
        dihedral(8).unwrap(),
        dihedral(12).unwrap(),
        quaternion8().unwrap(),
        cyclic(12).unwrap(),
        direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap(),
        direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap()).unwrap(),
        direct_product(&cyclic(2).unwrap(), &dihedral(8).unwrap()).unwrap(),
    ]
}

#[test]
fn totient_matches_gcd_count() {
    for n in 1..200u64 {
        let brute = (1..=n).filter(|&k| common::lcm(k, n) == k * n).count() as u64;
        assert_eq!(euler_phi(n), brute, "n = {n}");
    }
}

#[test]
fn cyclic_count_identity_on_random_subgroups() {
    let mut groups = random_subgroups(6, 15, 1);
    groups.extend(random_subgroups(7, 10, 2));
    groups.extend(small_groups());
    for g in groups {
        let report = verify_cyclic_count_identity(&g).unwrap();
        assert!(report.ok, "{:?}", report.checks);
        let eq = order_equation(&g).unwrap();
        assert_eq!(report.checks.len(), eq.counts.len());
    }
}

#[test]
fn cyclic_rows_are_consistent() {
    for g in small_groups().into_iter().chain(random_subgroups(6, 5, 3)) {
        let table = cyclic_subgroup_classes(&g).unwrap();
        let order = g.order() as u64;
        let mut seen_subgroups: HashSet<Vec<Raw>> = HashSet::new();
        for row in &table.rows {
            assert_eq!(row.class_size * row.normalizer_order, order);
            assert_eq!(row.representative.element_order(), row.n);
            let mut c: Vec<Raw> = closure(g.degree(), &[raw(&row.representative)]).into_iter().collect();
            c.sort();
            let generators = c.iter().filter(|x| common::raw_order(x) == row.n).count() as u64;
            assert_eq!(generators, euler_phi(row.n));
            // Conjugates of this subgroup, counted independently.
            let mut conjugates: HashSet<Vec<Raw>> = HashSet::new();
            for x in elements(&g) {
                let xi = inv(&x);
                let mut conj: Vec<Raw> = c.iter().map(|y| mul(&mul(&xi, y), &x)).collect();
                conj.sort();
                conjugates.insert(conj);
            }
            assert_eq!(conjugates.len() as u64, row.class_size);
            for s in conjugates {
                assert!(seen_subgroups.insert(s), "two rows share a class");
            }
        }
    }
}

#[test]
fn cyclic_table_is_invariant_under_inner_automorphisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in random_subgroups(6, 6, 4) {
        let set = g.enumerate().unwrap();
        let x = set.get(set.len() / 2).clone();
        let conj = Group::new(g.degree(), g.generators().iter().map(|p| p.conjugate_by(&x).unwrap()).collect()).unwrap();
        let summary = |g: &Group| {
            let mut v: Vec<(u64, u64, u64)> =
                cyclic_subgroup_classes(g).unwrap().rows.iter().map(|r| (r.n, r.class_size, r.normalizer_order)).collect();
            v.sort();
            v
        };
        assert_eq!(summary(&g), summary(&conj));
        // Relabeling the points by an outer permutation changes nothing either.
        let sigma = perm(&random_raw(&mut rng, g.degree()));
        let relabeled = Group::new(g.degree(), g.generators().iter().map(|p| p.conjugate_by(&sigma).unwrap()).collect()).unwrap();
        assert_eq!(summary(&g), summary(&relabeled));
    }
}

#[test]
fn lattice_matches_brute_force_enumeration() {
    for g in small_groups().into_iter().filter(|g| g.order() <= 24) {
        let brute = all_subgroups(&g);
        let lattice = SubgroupLattice::compute(&g).unwrap();
        assert_eq!(lattice.subgroup_count(), brute.len() as u64, "order {}", g.order());
        let mut by_order: Vec<u64> = brute.iter().map(|s| s.len() as u64).collect();
        by_order.sort();
        let mut from_rows: Vec<u64> =
            lattice.rows().iter().flat_map(|r| std::iter::repeat(r.order).take(r.class_size as usize)).collect();
        from_rows.sort();
        assert_eq!(by_order, from_rows);
        for (i, row) in lattice.rows().iter().enumerate() {
            let mut rep: Vec<Raw> = lattice.representative_elements(i).iter().map(raw).collect();
            rep.sort();
            assert!(brute.contains(&rep));
            assert_eq!(rep.len() as u64, row.order);
            assert!(!row.is_cyclic || row.is_nilpotent);
            assert!(!row.is_nilpotent || row.is_solvable);
            assert_eq!(g.order() as u64 % row.class_size, 0);
        }
    }
}

#[test]
fn search_agrees_with_lattice() {
    let groups = [symmetric(4).unwrap(), alternating(5).unwrap(), symmetric(5).unwrap(), dihedral(12).unwrap()];
    for g in groups {
        let lattice = SubgroupLattice::compute(&g).unwrap();
        let order = g.order() as u64;
        for m in (1..=order).filter(|m| order % m == 0) {
            let exists = lattice.rows().iter().any(|r| r.order == m);
            let outcome = find_subgroup_of_order(&g, m).unwrap();
            assert_eq!(outcome.found.is_some(), exists, "m = {m}");
            if let Some(f) = outcome.found {
                assert_eq!(f.group.order() as u64, m);
                assert!(f.group.generators().iter().all(|x| g.contains(x).unwrap()));
            }
            // The overgroup search, where it applies, agrees too.
            if let Ok(o) = find_subgroup_of_order_with_cap(&g, m, 0) {
                assert_eq!(o.found.is_some(), exists, "overgroup search, m = {m}");
            }
        }
    }
}
