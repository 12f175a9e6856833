//! L_2 is a rotated, rescaled copy of D_4, and each L_m is similar to L'_m.

use bwlattice::blattice::ZLattice;
use bwlattice::enumerate::{classical_lattice, similarity, Which};

fn main() -> bwlattice::error::Result<()> {
    let l2 = classical_lattice(2, Which::L)?;
    let r = similarity(&ZLattice::d_n(4), &l2, 3, 8)?;
    println!(
        "D_4 ~ L_2: scale {:?}, theta agree {}, explicit map found {:?}",
        r.scale.map(|s| s.to_string()),
        r.theta_agree,
        r.isometry_found
    );

    for m in 1..=3 {
        let r = similarity(&classical_lattice(m, Which::LPrime)?, &classical_lattice(m, Which::L)?, 3, 8)?;
        println!("L'_{m} ~ L_{m}: similar = {}", r.similar());
    }
    Ok(())
}
