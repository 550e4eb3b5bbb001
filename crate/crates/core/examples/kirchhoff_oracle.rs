//! Transfer-matrix counts next to Matrix-Tree determinants for a base
//! graph in both topologies.
//!
//! cargo run --release --example kirchhoff_oracle [base] [n_max]
//! e.g. `complete:3 6` or `file:my_graph.txt 4`

use gridtrees::cyl_transfer::build_cylinder_system;
use gridtrees::graphs::{build_product, make_base};
use gridtrees::kirchhoff::spanning_tree_count;
use gridtrees::path_transfer::build_transfer_matrix;
use gridtrees::{BaseSpec, Topology};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec: BaseSpec = args.next().as_deref().unwrap_or("complete:3").parse()?;
    let n_max: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(6);
    let base = make_base(&spec)?;

    let grid = build_transfer_matrix(&base)?.tree_sequence(n_max);
    let cyl = build_cylinder_system(&base)?.tree_sequence(n_max);
    println!(
        "{:>3} {:>24} {:>24}",
        "n",
        format!("{spec} x P_n"),
        format!("{spec} x C_n")
    );
    for n in 1..=n_max {
        let kp = spanning_tree_count(&build_product(&base, n, Topology::Path)?);
        let kc = spanning_tree_count(&build_product(&base, n, Topology::Cycle)?);
        let mark = |a: &gridtrees::BigUint, b: &gridtrees::BigUint| if a == b { ' ' } else { '!' };
        println!(
            "{n:>3} {:>23}{} {:>23}{}",
            grid[n - 1],
            mark(&grid[n - 1], &kp),
            cyl[n - 1],
            mark(&cyl[n - 1], &kc)
        );
    }
    Ok(())
}
