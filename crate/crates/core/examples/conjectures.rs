//! Empirical checks on minimal recurrences: alternating signs, order
//! 2^(k-1) for grids, order k for K_k x P_n.
//!
//! cargo run --release --example conjectures

use gridtrees::cli::{conjecture_families, ConjectureArgs, Format};
use gridtrees::recurrence::check_conjectures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args = ConjectureArgs {
        grid_max: 6,
        complete_max: 4,
        cylinders: true,
        format: Format::Text,
    };
    let results = conjecture_families(&args)?;
    for (family, r) in &results {
        println!("{family}: order {}", r.order());
    }
    println!();
    print!("{}", check_conjectures(&results));
    Ok(())
}
