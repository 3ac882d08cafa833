//! Searches both order-40320 groups for a subgroup of order 1152 = 2^7 * 3^2.
//! The search is exhaustive, so NONE is a proof of nonexistence; the
//! certificate records what was explored.

use ordtype::constructions::{affine_2_4_a7, l3_4_2_2};
use ordtype::subgroups::find_subgroup_of_order;

fn main() -> ordtype::Result<()> {
    for (name, g) in [("2^4:A7", affine_2_4_a7()?), ("L3(4):2_2", l3_4_2_2()?)] {
        let outcome = find_subgroup_of_order(&g, 1152)?;
        match &outcome.found {
            Some(f) => println!("{name}: order-1152 subgroup found, solvable = {}", f.is_solvable),
            None => println!("{name}: NONE"),
        }
        if let Some(cert) = &outcome.certificate {
            println!("  Sylow {}-subgroup of order {}, |N(P)| = {}", cert.prime, cert.sylow_order, cert.sylow_normalizer_order);
            println!("  closures per level {:?}, outcomes {:?}", cert.closures_per_level, cert.closure_orders);
        }
    }
    Ok(())
}
