//! Prints a transfer matrix with its partition labels, and the single-step
//! transitions that make up one column.
//!
//! cargo run --example transfer_matrices [k]

use gridtrees::path_transfer::{build_transfer_matrix, transfer_step};
use gridtrees::transfer::Step;
use gridtrees::BaseGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let sys = build_transfer_matrix(&BaseGraph::path(k)?)?;
    let labels = sys.index().labels();
    let width = labels.iter().map(String::len).max().unwrap_or(1);

    println!(
        "{:>width$}   {}",
        "",
        labels
            .iter()
            .map(|l| format!("{l:>width$}"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    for (label, row) in labels.iter().zip(sys.matrix().to_dense()) {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        println!("{label:>width$} | {}", cells.join(" "));
    }

    // column of the all-singletons partition, edge subset by edge subset
    let last = sys.index().get(sys.index().len()).expect("non-empty");
    let f = sys.frontier();
    println!("\nsteps out of {last} ({} frontier edges):", f.len());
    for mask in 0u32..1 << f.len() {
        let chosen: Vec<usize> = (0..f.len()).filter(|i| mask >> i & 1 == 1).collect();
        let edges: Vec<_> = chosen.iter().map(|&i| f.edges()[i]).collect();
        match transfer_step(f, last, &chosen)? {
            Step::To(q) => println!("  {edges:?} -> {q}"),
            Step::Rejected(why) => println!("  {edges:?} rejected ({why:?})"),
        }
    }
    Ok(())
}
