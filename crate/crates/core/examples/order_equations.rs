//! Order equations and element-order spectra of a few builtin groups.
//!
//! Run with `cargo run --example order_equations`.

use ordtype::cli::resolve_builtin;
use ordtype::spectrum::order_equation;

fn main() -> ordtype::Result<()> {
    for name in ["S3", "A5", "D8", "Q8", "S5", "PSL3_4", "2_4_A7"] {
        let g = resolve_builtin(name, None)?;
        let eq = order_equation(&g)?;
        println!("{name:>7}: {}", eq.equation_string());
        println!("{:>7}  spectrum {:?}, exponent {}", "", eq.spectrum().to_vec(), eq.exponent());
    }
    Ok(())
}
