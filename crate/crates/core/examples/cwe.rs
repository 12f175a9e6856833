//! Complete weight enumerator of a code read from a file, and its
//! invariance under the Clifford group.
//!
//!     cargo run --example cwe -- crates/core/examples/data/h8.txt 2

use bwlattice::cgroup::standard_generators;
use bwlattice::codes::BinaryCode;
use bwlattice::invariants::{cwe_tensor, is_invariant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/h8.txt").into());
    let m: usize = args.next().map_or(Ok(1), |s| s.parse())?;

    let code = BinaryCode::parse(&std::fs::read_to_string(&path)?)?;
    println!("{code}");
    let w = cwe_tensor(&code, m);
    if w.len() <= 12 {
        println!("cwe = {w}");
    } else {
        println!("cwe has {} terms", w.len());
    }
    println!("fixed by C_{m}: {}", is_invariant(&w, &standard_generators(m)?)?);
    Ok(())
}
