//! Standard permutation models of small group families.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::{Perm, MAX_DEGREE};

/// Degree limit for symmetric and alternating groups, so orders fit in a `u128`.
pub const MAX_SYMMETRIC_DEGREE: usize = 34;

fn check_degree(family: &'static str, degree: usize, limit: usize) -> Result<()> {
    if degree == 0 || degree > limit {
        return Err(Error::DegreeLimitExceeded { family, degree, limit });
    }
    Ok(())
}

fn cycle(degree: usize, points: &[usize]) -> Perm {
    let mut images: Vec<usize> = (0..degree).collect();
    for (j, &p) in points.iter().enumerate() {
        images[p] = points[(j + 1) % points.len()];
    }
    Perm::from_zero_based(&images).expect("valid cycle")
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<Group> {
    check_degree("cyclic", n, MAX_DEGREE)?;
    let points: Vec<usize> = (0..n).collect();
    Group::new(n, vec![cycle(n, &points)])
}

/// `S_n` on `n` points.
pub fn symmetric(n: usize) -> Result<Group> {
    check_degree("symmetric", n, MAX_SYMMETRIC_DEGREE)?;
    let points: Vec<usize> = (0..n).collect();
    let mut gens = vec![cycle(n, &points)];
    if n >= 2 {
        gens.push(cycle(n, &[0, 1]));
    }
    Group::new(n, gens)
}

/// `A_n` on `n` points, generated by the 3-cycles `(1,2,i)`.
pub fn alternating(n: usize) -> Result<Group> {
    check_degree("alternating", n, MAX_SYMMETRIC_DEGREE)?;
    if n < 3 {
        return Ok(Group::trivial(n));
    }
    Group::new(n, (2..n).map(|i| cycle(n, &[0, 1, i])).collect())
}

/// Dihedral group of the given `order` (`2m`), acting on the `m` vertices of an `m`-gon.
pub fn dihedral(order: usize) -> Result<Group> {
    if order < 6 || order % 2 != 0 {
        return Err(Error::DegreeLimitExceeded { family: "dihedral (even order >= 6)", degree: order, limit: 2 * MAX_DEGREE });
    }
    let m = order / 2;
    check_degree("dihedral", m, MAX_DEGREE)?;
    let points: Vec<usize> = (0..m).collect();
    let rotation = cycle(m, &points);
    let reflection = Perm::from_fn(m, |i| (m - i) % m).expect("reflection");
    Group::new(m, vec![rotation, reflection])
}

/// Quaternion group of order 8 in its regular representation on 8 points.
///
/// Element `(-1)^s * u` with `u` in `1, i, j, k` is point `2u + s`; the
/// generators are right multiplication by `i` and by `j`.
pub fn quaternion8() -> Result<Group> {
    // Unit products u * v = sign * w, with units indexed 1, i, j, k.
    const TABLE: [[(u8, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let right_mul = |unit: usize| {
        Perm::from_fn(8, |x| {
            let (u, s) = (x / 2, x % 2);
            let (sign, w) = TABLE[u][unit];
            2 * w + (s ^ sign as usize)
        })
        .expect("regular action")
    };
    let a = right_mul(1);
    let b = right_mul(2);
    debug_assert!(a.pow(4).is_identity());
    debug_assert_eq!(a.pow(2), b.pow(2));
    debug_assert_eq!(b.then(&a).then(&b.inverse()), a.inverse());
    Group::new(8, vec![a, b])
}

/// `A x B` on the disjoint union of the domains; `B`'s points are shifted by `A`'s degree.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let (da, db) = (a.degree(), b.degree());
    if da + db > MAX_DEGREE {
        return Err(Error::DegreeLimitExceeded { family: "direct product", degree: da + db, limit: MAX_DEGREE });
    }
    let mut gens: Vec<Perm> = a
        .generators()
        .iter()
        .map(|g| Perm::from_fn(da + db, |i| if i < da { g.apply(i) } else { i }).unwrap())
        .collect();
    gens.extend(
        b.generators()
            .iter()
            .map(|g| Perm::from_fn(da + db, |i| if i < da { i } else { da + g.apply(i - da) }).unwrap()),
    );
    if gens.is_empty() {
        return Ok(Group::trivial(da + db));
    }
    Group::new(da + db, gens)
}

/// Left-nested product of all factors.
pub fn direct_product_all(factors: &[Group]) -> Result<Group> {
    let (first, rest) = factors.split_first().ok_or(Error::EmptyGeneratorList)?;
    rest.iter().try_fold(first.clone(), |acc, g| direct_product(&acc, g))
}
