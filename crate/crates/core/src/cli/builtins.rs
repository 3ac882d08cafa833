//! Named groups: `C<n>`, `S<n>`, `A<n>`, `D<n>`, `Q8`, `2_4_A7`, `L3_4_2_2`,
//! `PSL3_4`, and direct products such as `A5xA5xA5`.

use std::path::Path;

use crate::constructions::{
    affine_2_4_a7_with_cache, alternating, cyclic, dihedral, direct_product_all, l3_4_2_2, psl3_4, quaternion8,
    symmetric,
};
use crate::error::{Error, Result};
use crate::group::Group;

/// Resolves a builtin name. `a7_cache` is the file holding the derived A7 generators.
pub fn resolve_builtin(name: &str, a7_cache: Option<&Path>) -> Result<Group> {
    let factors = name.split('x').map(|f| resolve_factor(f, name, a7_cache)).collect::<Result<Vec<_>>>()?;
    if factors.len() == 1 {
        return Ok(factors.into_iter().next().unwrap());
    }
    direct_product_all(&factors)
}

fn resolve_factor(factor: &str, full: &str, a7_cache: Option<&Path>) -> Result<Group> {
    let unknown = || Error::UsageError(format!("unknown builtin group `{full}`"));
    match factor {
        "Q8" => return quaternion8(),
        "2_4_A7" => return affine_2_4_a7_with_cache(a7_cache),
        "L3_4_2_2" => return l3_4_2_2(),
        "PSL3_4" => return Ok(psl3_4()),
        _ => {}
    }
    let mut chars = factor.chars();
    let family = chars.next().ok_or_else(unknown)?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return Err(unknown());
    }
    let n: usize = digits.parse().map_err(|_| unknown())?;
    match family {
        'C' => cyclic(n),
        'S' => symmetric(n),
        'A' => alternating(n),
        'D' => dihedral(n),
        _ => Err(unknown()),
    }
}
