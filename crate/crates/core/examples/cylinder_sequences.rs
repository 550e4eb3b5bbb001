//! Spanning-tree counts of G x C_n for small bases, with the pieces the
//! count is assembled from: forest vectors and the tree-counting vector d.
//!
//! cargo run --release --example cylinder_sequences

use gridtrees::cyl_transfer::build_cylinder_system;
use gridtrees::BaseGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bases = [
        BaseGraph::path(2)?,
        BaseGraph::path(3)?,
        BaseGraph::complete(3)?,
        BaseGraph::cycle(4)?,
    ];
    for base in &bases {
        let sys = build_cylinder_system(base)?;
        let seq: Vec<String> = sys
            .tree_sequence(6)
            .iter()
            .map(ToString::to_string)
            .collect();
        println!(
            "{} x C_n ({} states): {}",
            base.name(),
            sys.index().len(),
            seq.join(", ")
        );
    }

    // where the k = 2 count for n = 3 comes from
    let sys = build_cylinder_system(&BaseGraph::path(2)?)?;
    let forests = sys.forest_counts(3);
    println!("\nP_2 x C_3 = sum over partitions of forests * d:");
    for ((p, f), d) in sys.index().iter().zip(&forests).zip(sys.d()) {
        if *d != 0 {
            println!("  {p:<8} {f:>4} * {d}");
        }
    }
    Ok(())
}
