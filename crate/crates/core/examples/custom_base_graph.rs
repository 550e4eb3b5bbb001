//! Any small base graph works. Reads the edge-list format
//!
//!     # comment
//!     4          <- vertex count
//!     1 2        <- one edge per line, 1-based
//!     ...
//!
//! from a file, or uses the "paw" (triangle plus pendant) when none is given.
//!
//! cargo run --release --example custom_base_graph [path]

use gridtrees::cli::bfile;
use gridtrees::recurrence::{generating_function, minimal_recurrence_from_terms};
use gridtrees::system::{build_system, SizeLimits};
use gridtrees::{BaseGraph, BigInt, Topology};

const PAW: &str = "# triangle with a pendant vertex\n4\n1 2\n2 3\n1 3\n3 4\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = match std::env::args().nth(1) {
        Some(path) => BaseGraph::from_file(path.as_ref())?,
        None => BaseGraph::parse(PAW)?.with_name("paw"),
    };
    for topology in [Topology::Path, Topology::Cycle] {
        let sys = build_system(&base, topology, SizeLimits::default())?;
        let seq = sys.tree_sequence(140);
        println!("{} x {topology}, first terms as a b-file:", base.name());
        print!("{}", bfile(&seq[..6]));
        let signed: Vec<BigInt> = seq.into_iter().map(BigInt::from).collect();
        match minimal_recurrence_from_terms(&signed, 64) {
            Ok(r) if r.order() <= 12 => {
                println!("order {}\nGF = {}\n", r.order(), generating_function(&r))
            }
            Ok(r) => {
                let c = r.polynomial();
                let palindromic = (0..=r.order()).all(|i| c.coeff(i) == c.coeff(r.order() - i));
                println!(
                    "order {}, palindromic characteristic polynomial: {palindromic}\n",
                    r.order()
                );
            }
            Err(e) => println!("{e}\n"),
        }
    }
    Ok(())
}
