//! Subgroup lattices and tables of marks of small groups.

use ordtype::burnside::table_of_marks;
use ordtype::cli::resolve_builtin;
use ordtype::subgroups::SubgroupLattice;

fn main() -> ordtype::Result<()> {
    for name in ["S3", "D8", "Q8", "S4", "A5"] {
        let g = resolve_builtin(name, None)?;
        let lattice = SubgroupLattice::compute(&g)?;
        println!("{name}: {} classes, {} subgroups", lattice.rows().len(), lattice.subgroup_count());
    }
    let t = table_of_marks(&resolve_builtin("S4", None)?)?;
    let labels: Vec<&str> = t.class_order.iter().map(|c| c.label.as_str()).collect();
    println!("     {}", labels.iter().map(|l| format!("{l:>4}")).collect::<String>());
    for (label, row) in labels.iter().zip(&t.marks) {
        println!("{label:>4} {}", row.iter().map(|m| format!("{m:>4}")).collect::<String>());
    }
    Ok(())
}
