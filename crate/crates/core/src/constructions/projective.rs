//! The projective plane PG(2,4): 21 points, 21 lines.
//!
//! Points are the 1-dimensional subspaces of GF(4)^3, each represented by its
//! vector whose first nonzero coordinate is 1, listed in lexicographic order of
//! coordinates. Lines are the 2-dimensional subspaces, listed in order of their
//! sorted point sets. As a permutation domain, points take positions 1..21 and
//! lines 22..42.

use std::collections::HashMap;

use super::gf4::{dot, MatGF4, Vec3, FF4};
use crate::perm::Perm;

pub const POINTS: usize = 21;
pub const POINTS_PER_LINE: usize = 5;

/// Normalizes a nonzero vector so that its first nonzero coordinate is 1.
pub fn normalize(v: &Vec3) -> Vec3 {
    let lead = v.iter().find(|x| !x.is_zero()).expect("zero vector has no projective point");
    let inv = lead.inverse().unwrap();
    [v[0] * inv, v[1] * inv, v[2] * inv]
}

#[derive(Clone, Debug)]
pub struct ProjLabeling {
    points: Vec<Vec3>,
    point_index: HashMap<Vec3, usize>,
    lines: Vec<[usize; POINTS_PER_LINE]>,
    line_index: HashMap<[usize; POINTS_PER_LINE], usize>,
}

impl Default for ProjLabeling {
    fn default() -> Self {
        Self::new()
    }
}

impl ProjLabeling {
    pub fn new() -> Self {
        let mut points = Vec::new();
        for a in FF4::ALL {
            for b in FF4::ALL {
                for c in FF4::ALL {
                    let v = [a, b, c];
                    if v.iter().any(|x| !x.is_zero()) && normalize(&v) == v {
                        points.push(v);
                    }
                }
            }
        }
        let point_index: HashMap<Vec3, usize> = points.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut lines: Vec<[usize; POINTS_PER_LINE]> = points
            .iter()
            .map(|normal| {
                let members: Vec<usize> = (0..points.len()).filter(|&q| dot(normal, &points[q]).is_zero()).collect();
                members.try_into().expect("every line has five points")
            })
            .collect();
        lines.sort();
        let line_index = lines.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        ProjLabeling { points, point_index, lines, line_index }
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn lines(&self) -> &[[usize; POINTS_PER_LINE]] {
        &self.lines
    }

    /// 0-based index of the point spanned by `v`.
    pub fn point_of(&self, v: &Vec3) -> usize {
        self.point_index[&normalize(v)]
    }

    /// 0-based index of the line with the given (unsorted) point set.
    pub fn line_of(&self, pts: &[usize]) -> usize {
        let mut key: [usize; POINTS_PER_LINE] = pts.try_into().expect("five points");
        key.sort_unstable();
        self.line_index[&key]
    }

    /// The line `p^perp` for point index `p`, under the standard dot product.
    pub fn polar_line(&self, p: usize) -> usize {
        let v = &self.points[p];
        let members: Vec<usize> = (0..POINTS).filter(|&q| dot(v, &self.points[q]).is_zero()).collect();
        self.line_of(&members)
    }

    /// The point `L^perp` for line index `l`.
    pub fn polar_point(&self, l: usize) -> usize {
        (0..POINTS).find(|&p| self.polar_line(p) == l).expect("polarity is a bijection")
    }

    /// Action of a point map on the 21 points.
    fn point_images(&self, f: impl Fn(&Vec3) -> Vec3) -> Vec<usize> {
        self.points.iter().map(|v| self.point_of(&f(v))).collect()
    }

    /// Action of `M` (on row vectors) on the 21 points.
    pub fn matrix_on_points(&self, m: &MatGF4) -> Perm {
        Perm::from_zero_based(&self.point_images(|v| m.apply(v))).expect("invertible matrix")
    }

    /// Action of a collineation, given by its point images, on points and lines (degree 42).
    fn collineation_on_flags(&self, point_images: &[usize]) -> Perm {
        let mut images: Vec<usize> = point_images.to_vec();
        for line in &self.lines {
            let moved: Vec<usize> = line.iter().map(|&p| point_images[p]).collect();
            images.push(POINTS + self.line_of(&moved));
        }
        Perm::from_zero_based(&images).expect("collineation permutes lines")
    }

    /// Action of `M` on points and lines.
    pub fn matrix_on_flags(&self, m: &MatGF4) -> Perm {
        self.collineation_on_flags(&self.point_images(|v| m.apply(v)))
    }

    /// Entrywise Frobenius on points and lines.
    pub fn frobenius_on_flags(&self) -> Perm {
        self.collineation_on_flags(&self.point_images(|v| v.map(FF4::frobenius)))
    }

    /// The polarity `U -> U^perp`, exchanging points and lines.
    pub fn polarity_on_flags(&self) -> Perm {
        let mut images = vec![0usize; 2 * POINTS];
        for p in 0..POINTS {
            let l = self.polar_line(p);
            images[p] = POINTS + l;
            images[POINTS + l] = p;
        }
        Perm::from_zero_based(&images).expect("polarity is an involution")
    }
}
