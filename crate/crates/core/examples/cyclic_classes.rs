//! Conjugacy classes of cyclic subgroups, and the check that
//! `sum of class_size * phi(n)` over order-`n` classes counts the elements of order `n`.

use ordtype::cli::resolve_builtin;
use ordtype::subgroups::{cyclic_subgroup_classes, verify_cyclic_count_identity};

fn main() -> ordtype::Result<()> {
    let a5 = resolve_builtin("A5", None)?;
    for row in cyclic_subgroup_classes(&a5)?.rows {
        println!("n = {}: {} conjugates, |N| = {}, generated by {}", row.n, row.class_size, row.normalizer_order, row.representative);
    }
    for name in ["S4", "Q8", "2_4_A7", "L3_4_2_2"] {
        let report = verify_cyclic_count_identity(&resolve_builtin(name, None)?)?;
        let terms: Vec<String> = report.checks.iter().map(|c| format!("{}:{}", c.n, c.lhs)).collect();
        println!("{name}: identity {} [{}]", if report.ok { "holds" } else { "FAILS" }, terms.join(" "));
    }
    Ok(())
}
