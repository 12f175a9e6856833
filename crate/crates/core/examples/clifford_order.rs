//! Orders of the Clifford groups C_1, C_2, C_3, with two independent
//! computations of |C_2|.

use bwlattice::blattice::balanced_bw;
use bwlattice::cgroup::{aut_backtrack, clifford_group};

fn main() -> bwlattice::error::Result<()> {
    for m in 1..=3 {
        let g = clifford_group(m)?;
        print!("|C_{m}| = {}", g.order());
        if let Some(chain) = g.stabilizer_chain() {
            print!("  (basic orbits {:?})", chain.orbit_sizes());
        }
        println!();
    }
    let by_search = aut_backtrack(&balanced_bw(2)?)?;
    println!("|Aut(M_2)| by backtracking = {}", by_search.order());
    Ok(())
}
