//! Necessary conditions for isomorphic Burnside rings, on D8 vs Q8 and on
//! the two order-40320 groups with a probe at order 1152.

use ordtype::burnside::burnside_obstruction;
use ordtype::cli::resolve_builtin;

fn main() -> ordtype::Result<()> {
    let pairs: [(&str, &str, &[u64]); 3] =
        [("D8", "Q8", &[]), ("S4", "S4", &[12]), ("L3_4_2_2", "2_4_A7", &[1152])];
    for (a, b, probes) in pairs {
        let report = burnside_obstruction(&resolve_builtin(a, None)?, &resolve_builtin(b, None)?, probes)?;
        println!("{a} vs {b}: {}", report.verdict);
        for w in &report.witnesses {
            println!("  {}", serde_json::to_string(w).unwrap());
        }
    }
    Ok(())
}
