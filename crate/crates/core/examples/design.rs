//! The 240 minimal vectors of L_3 (a copy of E_8) form a spherical
//! 7-design but not an 8-design.

use bwlattice::enumerate::{classical_lattice, design_moment_test, minimal_vectors, Which};

fn main() -> bwlattice::error::Result<()> {
    let shell = minimal_vectors(&classical_lattice(3, Which::L)?)?;
    let report = design_moment_test(&shell, 8)?;
    for (t, d) in &report.discrepancies {
        println!("t = {t}: moment discrepancy {d}");
    }
    println!("{} vectors, strength {}", report.size, report.strength());
    Ok(())
}
