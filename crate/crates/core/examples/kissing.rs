//! Kissing numbers and theta-series prefixes of L_1 .. L_4.

use bwlattice::enumerate::{classical_lattice, kissing_number, theta_shells, Which};

fn main() -> bwlattice::error::Result<()> {
    for m in 1..=4 {
        println!("L_{m}: {} minimal vectors", kissing_number(m, Which::L)?);
    }
    println!("M_1: {} minimal vectors over Z[√2]", kissing_number(1, Which::M)?);

    for m in 1..=3 {
        let theta = theta_shells(&classical_lattice(m, Which::L)?, 4)?;
        let terms: Vec<String> = theta.shells.iter().map(|(n, c)| format!("{c} q^{n}")).collect();
        println!("theta(L_{m}) = {} + ...", terms.join(" + "));
    }
    Ok(())
}
