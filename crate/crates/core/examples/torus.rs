//! Tori C_k x C_n are cylinders over a cycle base. Counts are checked
//! against the Matrix-Tree theorem as they are printed.
//!
//! cargo run --release --example torus [k] [terms]

use gridtrees::cyl_transfer::build_cylinder_system;
use gridtrees::graphs::build_product;
use gridtrees::kirchhoff::spanning_tree_count;
use gridtrees::recurrence::minimal_recurrence_from_terms;
use gridtrees::{BaseGraph, BigInt, Topology};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let k: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let terms: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(40);

    let base = BaseGraph::cycle(k)?;
    let seq = build_cylinder_system(&base)?.tree_sequence(terms);
    for (n, t) in (1..).zip(seq.iter().take(8)) {
        let det = spanning_tree_count(&build_product(&base, n, Topology::Cycle)?);
        assert_eq!(*t, det);
        println!("C_{k} x C_{n}: {t}");
    }
    let signed: Vec<BigInt> = seq.into_iter().map(BigInt::from).collect();
    match minimal_recurrence_from_terms(&signed, (terms - 4) / 2) {
        Ok(r) => println!("minimal recurrence, order {}: {r}", r.order()),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
