//! Built-in groups: small families, direct products, and the two groups of
//! order 40320 sharing one order equation, `L3(4):2_2` on the 42 points and
//! lines of PG(2,4) and the affine group `2^4:A7` on 16 points.

mod families;
pub mod gf2;
pub mod gf4;
pub mod projective;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

pub use families::{
    alternating, cyclic, dihedral, direct_product, direct_product_all, quaternion8, symmetric,
    MAX_SYMMETRIC_DEGREE,
};
pub use gf2::MatGF2;
pub use gf4::{MatGF4, FF4};
pub use projective::ProjLabeling;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::spectrum::{order_equation, OrderEquation};

/// Order equation shared by `L3(4):2_2` and `2^4:A7`:
/// `40320 = 1 + 435 + 2240 + 6300 + 8064 + 6720 + 5760 + 5040 + 5760`.
pub const REFERENCE_ORDER_EQUATION: [(u64, u64); 9] =
    [(1, 1), (2, 435), (3, 2240), (4, 6300), (5, 8064), (6, 6720), (7, 5760), (8, 5040), (14, 5760)];

pub fn reference_order_equation() -> OrderEquation {
    OrderEquation::from_counts(REFERENCE_ORDER_EQUATION.iter().copied().collect::<BTreeMap<_, _>>())
}

/// The 18 transvections `I + l*E_ij` with `i != j` and `l` nonzero.
pub fn sl3_4_transvections() -> Vec<MatGF4> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for lambda in [FF4::ONE, FF4::OMEGA, FF4::OMEGA2] {
                out.push(MatGF4::transvection(i, j, lambda));
            }
        }
    }
    out
}

/// `PSL(3,4)` acting on the 21 points of PG(2,4).
pub fn psl3_4() -> Group {
    let plane = ProjLabeling::new();
    let gens = sl3_4_transvections().iter().map(|m| plane.matrix_on_points(m)).collect();
    Group::new(projective::POINTS, gens).expect("nonempty generator list")
}

/// The outer involution adjoined to `PSL(3,4)` on points and lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtensionVariant {
    /// Entrywise Frobenius.
    Field,
    /// The polarity `U -> U^perp` for the standard bilinear form.
    Graph,
    /// Polarity composed with Frobenius.
    GraphField,
}

impl ExtensionVariant {
    pub const ALL: [ExtensionVariant; 3] = [ExtensionVariant::Field, ExtensionVariant::Graph, ExtensionVariant::GraphField];
}

impl fmt::Display for ExtensionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            ExtensionVariant::Field => "FIELD",
            ExtensionVariant::Graph => "GRAPH",
            ExtensionVariant::GraphField => "GRAPH_FIELD",
        })
    }
}

/// `PSL(3,4)` on the 42 points and lines of PG(2,4), extended by one outer involution.
pub fn l3_4_extension(variant: ExtensionVariant) -> Group {
    let plane = ProjLabeling::new();
    let mut gens: Vec<Perm> = sl3_4_transvections().iter().map(|m| plane.matrix_on_flags(m)).collect();
    let outer = match variant {
        ExtensionVariant::Field => plane.frobenius_on_flags(),
        ExtensionVariant::Graph => plane.polarity_on_flags(),
        ExtensionVariant::GraphField => plane.polarity_on_flags().then(&plane.frobenius_on_flags()),
    };
    gens.push(outer);
    Group::new(2 * projective::POINTS, gens).expect("nonempty generator list")
}

/// Outcome of matching the three extensions against the reference order equation.
#[derive(Clone, Debug)]
pub struct Identification {
    pub variant: ExtensionVariant,
    pub group: Group,
    /// Order equation of every variant, in [`ExtensionVariant::ALL`] order.
    pub candidates: Vec<(ExtensionVariant, OrderEquation)>,
}

/// Picks the unique extension whose order equation equals
/// [`REFERENCE_ORDER_EQUATION`]. The result is computed once per process.
pub fn identify_2_2() -> Result<&'static Identification> {
    static CELL: OnceLock<std::result::Result<Identification, usize>> = OnceLock::new();
    let outcome = CELL.get_or_init(|| {
        let reference = reference_order_equation();
        let mut candidates = Vec::new();
        let mut matches = Vec::new();
        for variant in ExtensionVariant::ALL {
            let group = l3_4_extension(variant);
            let eq = order_equation(&group).expect("order 40320 is enumerable");
            if eq == reference {
                matches.push((variant, group));
            }
            candidates.push((variant, eq));
        }
        match matches.len() {
            1 => {
                let (variant, group) = matches.pop().unwrap();
                Ok(Identification { variant, group, candidates })
            }
            n => Err(n),
        }
    });
    outcome.as_ref().map_err(|&matches| Error::AmbiguousIdentification { matches })
}

/// `L3(4):2_2` as selected by [`identify_2_2`].
pub fn l3_4_2_2() -> Result<Group> {
    Ok(identify_2_2()?.group.clone())
}

/// A7 generators inside GL(4,2); see [`gf2::a7_in_gl42`] for the cache contract.
pub fn a7_generators(cache: Option<&Path>) -> Result<[MatGF2; 2]> {
    gf2::a7_in_gl42(cache)
}

/// Translation by the first basis vector on the 16 points of GF(2)^4.
pub fn first_basis_translation() -> Perm {
    Perm::from_fn(16, |v| v ^ 0b1000).expect("translation")
}

/// `2^4:A7`: the A7 matrices acting linearly, plus translation by `e1`.
pub fn affine_2_4_a7_with_cache(cache: Option<&Path>) -> Result<Group> {
    let [g, h] = a7_generators(cache)?;
    Group::new(16, vec![g.to_perm(), h.to_perm(), first_basis_translation()])
}

pub fn affine_2_4_a7() -> Result<Group> {
    affine_2_4_a7_with_cache(None)
}

/// The normal subgroup of all 16 translations.
pub fn translation_subgroup() -> Group {
    let gens = (0..4).map(|c| Perm::from_fn(16, move |v| v ^ (0b1000 >> c)).unwrap()).collect();
    Group::new(16, gens).expect("nonempty generator list")
}
