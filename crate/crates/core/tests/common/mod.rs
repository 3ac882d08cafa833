//! Test helpers. The oracles here work on raw image vectors and share no code
//! with the library beyond `Perm::as_slice` and construction.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use ordtype::{Group, Perm};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Raw = Vec<u16>;

pub fn raw(p: &Perm) -> Raw {
    p.as_slice().to_vec()
}

/// `a` then `b`.
pub fn mul(a: &Raw, b: &Raw) -> Raw {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inv(a: &Raw) -> Raw {
    let mut out = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u16;
    }
    out
}

pub fn identity(n: usize) -> Raw {
    (0..n as u16).collect()
}

pub fn cycle_lengths(a: &Raw) -> Vec<u64> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for start in 0..a.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = a[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn raw_order(a: &Raw) -> u64 {
    cycle_lengths(a).into_iter().fold(1, lcm)
}

/// `a^d = 1` iff every cycle length divides `d`.
pub fn power_is_identity(a: &Raw, d: u64) -> bool {
    cycle_lengths(a).into_iter().all(|l| d % l == 0)
}

/// Breadth-first closure of `gens` under right multiplication.
pub fn closure(n: usize, gens: &[Raw]) -> HashSet<Raw> {
    let mut seen: HashSet<Raw> = HashSet::new();
    let id = identity(n);
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

pub fn elements(g: &Group) -> HashSet<Raw> {
    closure(g.degree(), &g.generators().iter().map(raw).collect::<Vec<_>>())
}

pub fn order_counts(g: &Group) -> BTreeMap<u64, u64> {
    let mut counts = BTreeMap::new();
    for x in elements(g) {
        *counts.entry(raw_order(&x)).or_insert(0) += 1;
    }
    counts
}

/// Every subgroup, as a sorted element list: start from the trivial group and
/// adjoin one element at a time until nothing new appears.
pub fn all_subgroups(g: &Group) -> BTreeSet<Vec<Raw>> {
    let n = g.degree();
    let all: Vec<Raw> = elements(g).into_iter().collect();
    let trivial = vec![identity(n)];
    let mut found: BTreeSet<Vec<Raw>> = BTreeSet::new();
    found.insert(trivial.clone());
    let mut queue = vec![trivial];
    while let Some(h) = queue.pop() {
        let members: HashSet<&Raw> = h.iter().collect();
        for x in &all {
            if members.contains(x) {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x.clone());
            let mut sub: Vec<Raw> = closure(n, &gens).into_iter().collect();
            sub.sort();
            if found.insert(sub.clone()) {
                queue.push(sub);
            }
        }
    }
    found
}

pub fn perm(images: &Raw) -> Perm {
    Perm::from_zero_based(&images.iter().map(|&x| x as usize).collect::<Vec<_>>()).unwrap()
}

pub fn random_raw(rng: &mut ChaCha8Rng, n: usize) -> Raw {
    let mut v = identity(n);
    v.shuffle(rng);
    v
}

/// Subgroups of `S_n` generated by seeded random pairs of elements.
pub fn random_subgroups(n: usize, count: usize, seed: u64) -> Vec<Group> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = perm(&random_raw(&mut rng, n));
            let b = perm(&random_raw(&mut rng, n));
            Group::new(n, vec![a, b]).unwrap_or_else(|_| Group::trivial(n))
        })
        .collect()
}
