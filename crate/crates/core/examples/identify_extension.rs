//! Builds the three extensions of PSL(3,4) by an outer involution on the 42
//! points and lines of PG(2,4), and picks the one whose order equation matches
//! `2^4:A7`.

use ordtype::constructions::{affine_2_4_a7, identify_2_2, reference_order_equation};
use ordtype::spectrum::{order_equation, same_order_type};

fn main() -> ordtype::Result<()> {
    let reference = reference_order_equation();
    println!("reference: {}", reference.equation_string());
    let id = identify_2_2()?;
    for (variant, eq) in &id.candidates {
        let mark = if *eq == reference { "match" } else { "" };
        println!("{variant:>12}: {} {mark}", eq.equation_string());
    }
    println!("selected {}", id.variant);

    let affine = affine_2_4_a7()?;
    assert_eq!(order_equation(&affine)?, reference);
    println!("2^4:A7 and L3(4):2_2 same order type: {}", same_order_type(&affine, &id.group)?.equal);
    Ok(())
}
