//! Minimal recurrences and generating functions for the grid, complete
//! and cylinder families small enough to run in a few seconds.
//!
//! cargo run --release --example recurrences_and_gfs [max_k]

use gridtrees::cyl_transfer::build_cylinder_system;
use gridtrees::path_transfer::build_transfer_matrix;
use gridtrees::recurrence::{generating_function, minimal_recurrence_from_terms};
use gridtrees::{BaseGraph, BigInt};

fn report(name: &str, seq: Vec<gridtrees::BigUint>, max_order: usize) {
    let terms: Vec<BigInt> = seq.into_iter().map(BigInt::from).collect();
    match minimal_recurrence_from_terms(&terms, max_order) {
        Ok(r) => {
            println!("{name}: order {}", r.order());
            println!("  {r}");
            println!("  GF = {}", generating_function(&r));
        }
        Err(e) => println!("{name}: {e}"),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_k: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);

    for k in 2..=max_k {
        let sys = build_transfer_matrix(&BaseGraph::path(k)?)?;
        let order = 1 << (k - 1);
        report(
            &format!("P_{k} x P_n"),
            sys.tree_sequence(2 * order + 8),
            order + 2,
        );
    }
    for k in 2..=max_k.min(4) {
        let sys = build_transfer_matrix(&BaseGraph::complete(k)?)?;
        report(&format!("K_{k} x P_n"), sys.tree_sequence(2 * k + 8), k + 2);
    }
    let cylinders = [
        ("P_2 x C_n", BaseGraph::path(2)?, 8),
        ("P_3 x C_n", BaseGraph::path(3)?, 20),
        ("K_3 x C_n", BaseGraph::complete(3)?, 12),
    ];
    for (name, base, max_order) in cylinders {
        let sys = build_cylinder_system(&base)?;
        report(name, sys.tree_sequence(2 * max_order + 4), max_order);
    }
    Ok(())
}
