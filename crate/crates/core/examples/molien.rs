//! Molien series of C_1 and C_2 through degree 12, compared with the
//! dimensions of invariant spaces found by Reynolds projection.

use bwlattice::cgroup::{clifford_group, molien_series};
use bwlattice::invariants::invariant_dimension;

fn main() -> bwlattice::error::Result<()> {
    for m in 1..=2 {
        let g = clifford_group(m)?;
        let series = molien_series(&g, 12)?;
        let shown: Vec<String> = series.iter().map(|c| c.to_string()).collect();
        println!("C_{m}: {}", shown.join(" "));
        for d in (0..=12).step_by(4) {
            println!("  degree {d:>2}: Molien {}, Reynolds rank {}", series[d], invariant_dimension(&g, d as u32)?);
        }
    }
    Ok(())
}
