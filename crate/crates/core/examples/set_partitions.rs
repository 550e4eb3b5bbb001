//! Canonical partition order, ranks and union-find merging.
//!
//! cargo run --example set_partitions [m]

use gridtrees::setpart::{
    bell_number, enumerate_partitions, merge_under_edges, Merge, SetPartition,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);
    let index = enumerate_partitions(m)?;
    println!("B_{m} = {} partitions:", bell_number(m));
    for (rank, p) in (1..).zip(index.iter()) {
        println!("  {rank:>3}  {p}");
    }

    let p: SetPartition = "1/2".parse()?;
    for edges in [
        vec![(1, 3), (2, 4)],
        vec![(1, 3), (2, 4), (3, 4)],
        vec![(1, 2), (1, 3), (2, 3)],
    ] {
        match merge_under_edges(&p, 2, &edges)? {
            Merge::Merged(q) => println!("{p} + {edges:?} -> {q}"),
            Merge::Cycle => println!("{p} + {edges:?} -> cycle"),
        }
    }
    Ok(())
}
