//! Permutations of a finite domain `{1..degree}`.
//!
//! Points are 1-based at every public boundary (cycle notation, [`Point`]),
//! and stored 0-based internally. Products are read left to right: in
//! `a.compose(&b)` the permutation `a` acts first.

use std::borrow::Borrow;
use std::fmt;

use crate::error::{Error, Result};
use crate::util::lcm;

/// Largest supported degree. Images are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A point of the domain `{1..degree}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(u32);

impl Point {
    pub fn new(value: u32, degree: usize) -> Result<Self> {
        if value == 0 || value as usize > degree {
            return Err(Error::PointOutOfRange { point: value as u64, degree });
        }
        Ok(Point(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn index(self) -> usize {
        self.0 as usize - 1
    }
}

/// A permutation stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Borrow<[u16]> for Perm {
    fn borrow(&self) -> &[u16] {
        &self.images
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1 && degree <= MAX_DEGREE, "unsupported degree {degree}");
        Perm { images: (0..degree as u16).collect() }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let degree = images.len();
        let zero_based = images
            .iter()
            .map(|&v| {
                if v == 0 || v as usize > degree {
                    Err(Error::PointOutOfRange { point: v as u64, degree })
                } else {
                    Ok((v - 1) as usize)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_zero_based(&zero_based)
    }

    /// Builds a permutation from 0-based images.
    pub fn from_zero_based(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::NotABijection { degree });
        }
        let mut seen = vec![false; degree];
        for &v in images {
            if v >= degree || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection { degree });
            }
        }
        Ok(Perm { images: images.iter().map(|&v| v as u16).collect() })
    }

    /// Builds a permutation from a 0-based point map.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        let images: Vec<usize> = (0..degree).map(f).collect();
        Self::from_zero_based(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image array.
    pub fn as_slice(&self) -> &[u16] {
        &self.images
    }

    /// 1-based images, in point order.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|&v| v as u32 + 1).collect()
    }

    pub fn image(&self, point: Point) -> Point {
        Point(self.images[point.index()] as u32 + 1)
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// First (0-based) point moved by the permutation.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &v)| *i != v as usize).map(|(i, _)| i)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition for callers that already guarantee equal degrees.
    #[inline]
    pub(crate) fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.degree()].into_boxed_slice();
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Perm { images: inv }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Result<Perm> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: g.degree() });
        }
        Ok(self.conj(g))
    }

    #[inline]
    pub(crate) fn conj(&self, g: &Perm) -> Perm {
        // x -> g^-1 -> self -> g, written pointwise as g(x) -> g(self(x)).
        let mut out = vec![0u16; self.degree()].into_boxed_slice();
        for (x, &y) in self.images.iter().enumerate() {
            out[g.images[x] as usize] = g.images[y as usize];
        }
        Perm { images: out }
    }

    /// Commutator `a^-1 b^-1 a b`.
    pub(crate) fn commutator(a: &Perm, b: &Perm) -> Perm {
        a.inverse().then(&b.inverse()).then(a).then(b)
    }

    /// Cycles of length at least two, each starting at its smallest point (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `k >= 1` with `self^k = 1`.
    pub fn element_order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.apply(cur);
            }
            order = lcm(order, len);
        }
        order
    }

    /// `self^k`, computed cycle by cycle.
    pub fn pow(&self, k: u64) -> Perm {
        let mut out = vec![0u16; self.degree()].into_boxed_slice();
        let mut seen = vec![false; self.degree()];
        let mut cycle = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            cycle.clear();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            let len = cycle.len();
            let shift = (k % len as u64) as usize;
            for (j, &p) in cycle.iter().enumerate() {
                out[p] = cycle[(j + shift) % len] as u16;
            }
        }
        Perm { images: out }
    }

    /// Parses a product of disjoint cycles such as `(1,2)(3,4,5)`, or `()`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        parse_cycles(text, degree)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

/// Formats `p` in cycle notation; identical to its `Display` output.
pub fn format_cycles(p: &Perm) -> String {
    p.to_string()
}

/// Parses cycle notation over `{1..degree}`.
///
/// Grammar: `perm := "()" | cycle+`, `cycle := "(" int ("," int)+ ")"`, with no
/// whitespace anywhere.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::DegreeLimitExceeded { family: "permutation", degree, limit: MAX_DEGREE });
    }
    let malformed = |column: usize, reason: &str| Error::MalformedCycle { column, reason: reason.to_string() };
    if text == "()" {
        return Ok(Perm::identity(degree));
    }
    if text.is_empty() {
        return Err(malformed(1, "empty input"));
    }
    let bytes = text.as_bytes();
    let mut images: Vec<u16> = (0..degree as u16).collect();
    let mut used = vec![false; degree];
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(malformed(pos + 1, "expected '('"));
        }
        pos += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(malformed(pos + 1, "expected a point"));
            }
            let point: u64 = text[start..pos]
                .parse()
                .map_err(|_| malformed(start + 1, "point does not fit in 64 bits"))?;
            if point == 0 || point > degree as u64 {
                return Err(Error::PointOutOfRange { point, degree });
            }
            let idx = point as usize - 1;
            if std::mem::replace(&mut used[idx], true) {
                return Err(Error::RepeatedPoint { point });
            }
            cycle.push(idx);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(_) => return Err(malformed(pos + 1, "expected ',' or ')'")),
                None => return Err(malformed(pos + 1, "unterminated cycle")),
            }
        }
        if cycle.len() < 2 {
            return Err(malformed(pos, "a cycle needs at least two points"));
        }
        for (j, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(j + 1) % cycle.len()] as u16;
        }
    }
    Ok(Perm { images: images.into_boxed_slice() })
}
