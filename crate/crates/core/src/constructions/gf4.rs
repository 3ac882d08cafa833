//! The field with four elements and 3x3 matrices over it.

use std::fmt;
use std::ops::{Add, Mul};

/// An element `a + b*w` of GF(4), stored as `a | b << 1`, where `w^2 = w + 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FF4(u8);

impl FF4 {
    pub const ZERO: FF4 = FF4(0);
    pub const ONE: FF4 = FF4(1);
    pub const OMEGA: FF4 = FF4(2);
    pub const OMEGA2: FF4 = FF4(3);

    pub const ALL: [FF4; 4] = [FF4::ZERO, FF4::ONE, FF4::OMEGA, FF4::OMEGA2];

    pub fn new(bits: u8) -> FF4 {
        assert!(bits < 4, "GF(4) element out of range");
        FF4(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inverse(self) -> Option<FF4> {
        match self {
            FF4::ZERO => None,
            FF4::ONE => Some(FF4::ONE),
            FF4::OMEGA => Some(FF4::OMEGA2),
            _ => Some(FF4::OMEGA),
        }
    }

    /// `x -> x^2`.
    pub fn frobenius(self) -> FF4 {
        self * self
    }
}

impl Add for FF4 {
    type Output = FF4;
    fn add(self, rhs: FF4) -> FF4 {
        FF4(self.0 ^ rhs.0)
    }
}

impl Mul for FF4 {
    type Output = FF4;
    fn mul(self, rhs: FF4) -> FF4 {
        let (a, b) = (self.0 & 1, self.0 >> 1);
        let (c, d) = (rhs.0 & 1, rhs.0 >> 1);
        // (a + bw)(c + dw) = ac + bd + (ad + bc + bd)w
        let constant = (a & c) ^ (b & d);
        let linear = (a & d) ^ (b & c) ^ (b & d);
        FF4(constant | linear << 1)
    }
}

impl fmt::Debug for FF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "w", "w^2"][self.0 as usize])
    }
}

pub type Vec3 = [FF4; 3];

pub fn dot(u: &Vec3, v: &Vec3) -> FF4 {
    u.iter().zip(v).fold(FF4::ZERO, |acc, (&a, &b)| acc + a * b)
}

/// A 3x3 matrix over GF(4), acting on row vectors from the right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MatGF4(pub [[FF4; 3]; 3]);

impl MatGF4 {
    pub fn identity() -> Self {
        let mut m = [[FF4::ZERO; 3]; 3];
        (0..3).for_each(|i| m[i][i] = FF4::ONE);
        MatGF4(m)
    }

    pub fn scalar(s: FF4) -> Self {
        let mut m = [[FF4::ZERO; 3]; 3];
        (0..3).for_each(|i| m[i][i] = s);
        MatGF4(m)
    }

    /// Identity plus `lambda` in position `(i, j)`, `i != j`.
    pub fn transvection(i: usize, j: usize, lambda: FF4) -> Self {
        assert_ne!(i, j);
        let mut m = Self::identity();
        m.0[i][j] = lambda;
        m
    }

    /// `v * M`.
    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let mut out = [FF4::ZERO; 3];
        for (c, slot) in out.iter_mut().enumerate() {
            *slot = (0..3).fold(FF4::ZERO, |acc, r| acc + v[r] * self.0[r][c]);
        }
        out
    }

    pub fn mul(&self, other: &MatGF4) -> MatGF4 {
        let mut out = [[FF4::ZERO; 3]; 3];
        for (r, row) in out.iter_mut().enumerate() {
            *row = other.apply(&self.0[r]);
        }
        MatGF4(out)
    }

    pub fn det(&self) -> FF4 {
        let m = &self.0;
        // Characteristic 2: signs vanish.
        m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1])
            + m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold_exhaustively() {
        for a in FF4::ALL {
            assert_eq!(a + FF4::ZERO, a);
            assert_eq!(a * FF4::ONE, a);
            assert_eq!(a + a, FF4::ZERO);
            if !a.is_zero() {
                assert_eq!(a * a.inverse().unwrap(), FF4::ONE);
            }
            for b in FF4::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in FF4::ALL {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
        assert_eq!(FF4::OMEGA * FF4::OMEGA, FF4::OMEGA + FF4::ONE);
        assert_eq!(FF4::OMEGA * FF4::OMEGA2, FF4::ONE);
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        assert_eq!(FF4::ZERO.frobenius(), FF4::ZERO);
        assert_eq!(FF4::ONE.frobenius(), FF4::ONE);
        assert_eq!(FF4::OMEGA.frobenius(), FF4::OMEGA2);
        assert_eq!(FF4::OMEGA2.frobenius(), FF4::OMEGA);
        for a in FF4::ALL {
            for b in FF4::ALL {
                assert_eq!((a + b).frobenius(), a.frobenius() + b.frobenius());
                assert_eq!((a * b).frobenius(), a.frobenius() * b.frobenius());
            }
        }
    }

    #[test]
    fn matrices() {
        let t = MatGF4::transvection(0, 2, FF4::OMEGA);
        assert_eq!(t.det(), FF4::ONE);
        assert_eq!(t.mul(&MatGF4::transvection(0, 2, FF4::OMEGA)), MatGF4::identity());
        assert_eq!(MatGF4::scalar(FF4::OMEGA).det(), FF4::ONE);
        let v = [FF4::ONE, FF4::ZERO, FF4::OMEGA];
        assert_eq!(t.apply(&v), [FF4::ONE, FF4::ZERO, FF4::ZERO]);
    }
}
