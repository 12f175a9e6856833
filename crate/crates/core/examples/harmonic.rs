//! The harmonic degree-8 invariant cwe(H_8) - c q^4, and the absence of
//! harmonic invariants in degree 10.

use bwlattice::cgroup::clifford_group;
use bwlattice::invariants::{harmonic_invariant_degree8, harmonic_invariant_dimension};

fn main() -> bwlattice::error::Result<()> {
    for m in 1..=2 {
        let h = harmonic_invariant_degree8(m)?;
        let g = clifford_group(m)?;
        println!(
            "m = {m}: c = {}, harmonic invariants in degree 8: {}, in degree 10: {}",
            h.c,
            harmonic_invariant_dimension(&g, 8)?,
            harmonic_invariant_dimension(&g, 10)?
        );
    }
    println!("{}", harmonic_invariant_degree8(1)?.poly);
    Ok(())
}
