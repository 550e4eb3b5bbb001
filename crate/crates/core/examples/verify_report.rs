//! The report behind `gridtrees verify`, built through the library.
//!
//! cargo run --release --example verify_report [base] [n_max]

use gridtrees::cli::parse_base;
use gridtrees::system::{build_system, SizeLimits};
use gridtrees::verify::verify_family;
use gridtrees::Topology;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let base = args.next().unwrap_or_else(|| "path:2".into());
    let n_max: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(8);
    let (spec, graph) = parse_base(&base)?;
    for topology in [Topology::Path, Topology::Cycle] {
        let sys = build_system(&graph, topology, SizeLimits::default())?;
        print!("{}", verify_family(&spec, &sys, n_max)?);
        println!();
    }
    Ok(())
}
