//! 4x4 matrices over the two-element field, and a subgroup A7 of GL(4,2).
//!
//! A matrix is stored as 16 bits in row-major order, most significant bit
//! first, so the numeric order of the `u16` is the lexicographic order of its
//! bit string. Vectors are 4-bit integers with coordinate `c` at bit `3 - c`;
//! matrices act on row vectors from the right.

use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

pub const GL42_ORDER: usize = 20160;
pub const A7_ORDER: usize = 2520;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatGF2(pub u16);

impl MatGF2 {
    pub const IDENTITY: MatGF2 = MatGF2(0b1000_0100_0010_0001);

    pub fn row(self, r: usize) -> u8 {
        ((self.0 >> (12 - 4 * r)) & 0xF) as u8
    }

    pub fn from_rows(rows: [u8; 4]) -> Self {
        MatGF2(rows.iter().fold(0u16, |acc, &r| acc << 4 | (r & 0xF) as u16))
    }

    /// `v * M`.
    pub fn apply(self, v: u8) -> u8 {
        (0..4).filter(|r| v >> (3 - r) & 1 == 1).fold(0, |acc, r| acc ^ self.row(r))
    }

    pub fn mul(self, other: MatGF2) -> MatGF2 {
        Self::from_rows([0, 1, 2, 3].map(|r| other.apply(self.row(r))))
    }

    pub fn rank(self) -> usize {
        let mut rows: Vec<u8> = (0..4).map(|r| self.row(r)).collect();
        let mut rank = 0;
        for bit in (0..4).rev() {
            if let Some(pivot) = (rank..4).find(|&i| rows[i] >> bit & 1 == 1) {
                rows.swap(rank, pivot);
                for i in 0..4 {
                    if i != rank && rows[i] >> bit & 1 == 1 {
                        rows[i] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    pub fn is_invertible(self) -> bool {
        self.rank() == 4
    }

    /// Action on the 16 vectors; vector `v` is point `v + 1`.
    pub fn to_perm(self) -> Perm {
        Perm::from_fn(16, |v| self.apply(v as u8) as usize).expect("invertible matrix")
    }

    pub fn to_bit_string(self) -> String {
        format!("{:016b}", self.0)
    }

    pub fn parse_bit_string(s: &str) -> Option<MatGF2> {
        if s.len() != 16 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return None;
        }
        u16::from_str_radix(s, 2).ok().map(MatGF2)
    }
}

impl fmt::Debug for MatGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatGF2({})", self.to_bit_string())
    }
}

/// All invertible 4x4 matrices in canonical (bit string) order.
pub fn gl42_elements() -> Vec<MatGF2> {
    (0..=u16::MAX).map(MatGF2).filter(|m| m.is_invertible()).collect()
}

/// Size of `<g, h>`, or `None` once it exceeds `cap`.
fn closure_size(g: MatGF2, h: MatGF2, cap: usize) -> Option<usize> {
    let mut seen = vec![false; 1 << 16];
    let mut list = vec![MatGF2::IDENTITY];
    seen[MatGF2::IDENTITY.0 as usize] = true;
    let mut next = 0;
    while next < list.len() {
        let x = list[next];
        next += 1;
        for s in [g, h] {
            let y = x.mul(s);
            if !seen[y.0 as usize] {
                seen[y.0 as usize] = true;
                list.push(y);
                if list.len() > cap {
                    return None;
                }
            }
        }
    }
    Some(list.len())
}

fn is_perfect_a7(pair: [MatGF2; 2]) -> bool {
    let group = linear_group(&pair);
    group.order() == A7_ORDER as u128 && group.derived_subgroup().map(|d| d.order() == A7_ORDER as u128).unwrap_or(false)
}

/// The permutation group on 16 points generated by the given matrices.
pub fn linear_group(mats: &[MatGF2]) -> Group {
    Group::new(16, mats.iter().map(|m| m.to_perm()).collect()).expect("nonempty generator list")
}

/// First pair `(g, h)` of GL(4,2), in canonical order, generating a perfect
/// subgroup of order 2520.
pub fn search_a7_pair() -> Result<[MatGF2; 2]> {
    let elements = gl42_elements();
    for &g in &elements {
        if g == MatGF2::IDENTITY {
            continue;
        }
        for &h in &elements {
            if h == g || h == MatGF2::IDENTITY {
                continue;
            }
            if closure_size(g, h, A7_ORDER) == Some(A7_ORDER) && is_perfect_a7([g, h]) {
                return Ok([g, h]);
            }
        }
    }
    Err(Error::SearchExhausted("no pair of GL(4,2) generates a perfect subgroup of order 2520".into()))
}

/// Generators of A7 inside GL(4,2).
///
/// The pair is derived by [`search_a7_pair`] once per process. With a cache path, a
/// missing file is written atomically and an existing one must match the
/// derived pair exactly, else [`Error::CorruptCache`].
pub fn a7_in_gl42(cache: Option<&Path>) -> Result<[MatGF2; 2]> {
    static PAIR: OnceLock<[MatGF2; 2]> = OnceLock::new();
    let pair = match PAIR.get() {
        Some(p) => *p,
        None => {
            let found = search_a7_pair()?;
            *PAIR.get_or_init(|| found)
        }
    };
    let text = format!("{}\n{}\n", pair[0].to_bit_string(), pair[1].to_bit_string());
    if let Some(path) = cache {
        match std::fs::read_to_string(path) {
            Ok(existing) if existing == text => {}
            Ok(_) => {
                return Err(Error::CorruptCache {
                    path: path.to_path_buf(),
                    reason: "stored A7 generators differ from the derived pair".into(),
                })
            }
            Err(_) => crate::cli::cache::write_atomic(path, text.as_bytes())?,
        }
    }
    Ok(pair)
}
