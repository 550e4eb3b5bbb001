//! Spanning-tree counts of the grids P_k x P_n.
//!
//! cargo run --release --example grid_sequences [max_k] [terms]

use gridtrees::path_transfer::build_transfer_matrix;
use gridtrees::BaseGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let max_k: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(6);
    let terms: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(8);

    for k in 1..=max_k {
        let sys = build_transfer_matrix(&BaseGraph::path(k)?)?;
        let seq: Vec<String> = sys
            .tree_sequence(terms)
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("k={k} ({} states): {}", sys.index().len(), seq.join(", "));
    }
    Ok(())
}
