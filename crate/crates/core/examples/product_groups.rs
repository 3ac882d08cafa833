//! `A5 x A5 x A5` against `C30^3 x C2^3`: same order and spectrum, different
//! order type, and only the second is solvable.

use ordtype::cli::resolve_builtin;
use ordtype::spectrum::{order_equation, same_order_type, same_two_orders_type, Witness};

fn main() -> ordtype::Result<()> {
    let a = resolve_builtin("A5xA5xA5", None)?;
    let b = resolve_builtin("C30xC30xC30xC2xC2xC2", None)?;
    for (name, g) in [("A5^3", &a), ("C30^3 x C2^3", &b)] {
        let eq = order_equation(g)?;
        println!("{name}: order {}, spectrum {:?}, solvable {}", eq.total, eq.spectrum().to_vec(), g.is_solvable()?);
    }
    println!("same two orders type: {}", same_two_orders_type(&a, &b)?.equal);
    let verdict = same_order_type(&a, &b)?;
    println!("same order type: {}", verdict.equal);
    if let Some(Witness::OrderType { d, count_a, count_b }) = verdict.witness() {
        println!("  least d with |A(d)| != |B(d)|: d = {d}, {count_a} vs {count_b}");
    }
    Ok(())
}
