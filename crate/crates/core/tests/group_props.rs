mod common;

use std::collections::BTreeMap;

use common::{closure, elements, lcm, order_counts, power_is_identity, random_subgroups, raw};
use ordtype::constructions::{alternating, cyclic, dihedral, direct_product, quaternion8, symmetric};
use ordtype::spectrum::{g_of_d, order_equation, same_order_type, same_two_orders_type};
use ordtype::Group;

fn corpus() -> Vec<Group> {
    let mut groups = vec![
        symmetric(3).unwrap(),
        symmetric(4).unwrap(),
        alternating(5).unwrap(),
        dihedral(8).unwrap(),
        dihedral(10).unwrap(),
        quaternion8().unwrap(),
        cyclic(12).unwrap(),
    ];
    groups.extend(random_subgroups(6, 12, 11));
    groups.extend(random_subgroups(7, 8, 12));
    groups
}

#[test]
fn chain_order_matches_independent_closure() {
    for g in corpus() {
        let elems = elements(&g);
        assert_eq!(g.order(), elems.len() as u128);
        let set = g.enumerate().unwrap();
        assert_eq!(set.len(), elems.len());
        assert!(set.iter().all(|p| elems.contains(&raw(p))));
    }
}

#[test]
fn order_equation_matches_independent_count() {
    for g in corpus() {
        let eq = order_equation(&g).unwrap();
        assert_eq!(eq.counts, order_counts(&g));
        assert_eq!(eq.total as u128, g.order());
        assert_eq!(eq.counts.values().sum::<u64>(), eq.total);
    }
}

#[test]
fn g_of_d_matches_direct_power_count() {
    for g in corpus() {
        let elems = elements(&g);
        let exponent = g.exponent().unwrap();
        for d in 1..=exponent {
            let direct = elems.iter().filter(|x| power_is_identity(x, d)).count() as u64;
            assert_eq!(g_of_d(&g, d).unwrap(), direct, "d = {d}");
        }
        assert_eq!(g_of_d(&g, exponent).unwrap() as u128, g.order());
    }
}

#[test]
fn lagrange_and_class_equation() {
    for g in corpus().into_iter().filter(|g| g.order() <= 720) {
        let order = g.order();
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(classes.iter().map(|c| c.size as u128).sum::<u128>(), order);
        for c in classes {
            let cent = g.centralizer(&c.representative).unwrap();
            assert_eq!(cent.order() * c.size as u128, order);
            assert_eq!(order % cent.order(), 0);
        }
    }
}

/// Number of elements of order n in A x B is the sum over lcm(a, b) = n of
/// count_A(a) * count_B(b).
#[test]
fn product_order_equation_is_lcm_convolution() {
    let small = [cyclic(4).unwrap(), symmetric(3).unwrap(), quaternion8().unwrap(), cyclic(6).unwrap(), dihedral(10).unwrap()];
    for a in &small {
        for b in &small {
            let (ea, eb) = (order_equation(a).unwrap(), order_equation(b).unwrap());
            let mut expected: BTreeMap<u64, u64> = BTreeMap::new();
            for (&oa, &ca) in &ea.counts {
                for (&ob, &cb) in &eb.counts {
                    *expected.entry(lcm(oa, ob)).or_insert(0) += ca * cb;
                }
            }
            let product = direct_product(a, b).unwrap();
            assert_eq!(order_equation(&product).unwrap().counts, expected);
        }
    }
}

#[test]
fn order_type_implies_two_orders_type() {
    let groups = corpus();
    for a in &groups {
        for b in &groups {
            if same_order_type(a, b).unwrap().equal {
                assert!(same_two_orders_type(a, b).unwrap().equal);
            }
        }
    }
}

#[test]
fn subgroup_membership_and_normality() {
    let s4 = symmetric(4).unwrap();
    let a4 = alternating(4).unwrap();
    assert!(a4.is_subgroup_of(&s4));
    assert!(a4.is_normal_in(&s4));
    for g in random_subgroups(6, 6, 99) {
        let derived = g.derived_subgroup().unwrap();
        assert!(derived.is_normal_in(&g));
        let raw_elems = elements(&g);
        let d_elems = closure(6, &derived.generators().iter().map(raw).collect::<Vec<_>>());
        assert!(d_elems.iter().all(|x| raw_elems.contains(x)));
        assert_eq!(g.order() % derived.order(), 0);
    }
}
