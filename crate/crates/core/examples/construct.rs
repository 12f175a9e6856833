//! Build the balanced Barnes-Wall lattice M_m and split it into its
//! rational and √2 parts.
//!
//!     cargo run --example construct -- 3

use bwlattice::blattice::{balanced_bw, index, irrational_part, rational_part};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: usize = std::env::args().nth(1).map_or(Ok(2), |s| s.parse())?;
    let bw = balanced_bw(m)?;
    println!("M_{m}: dimension {}, Gram matrix over Z[√2]:", bw.dim());
    for row in bw.gram().to_string_grid() {
        println!("  {}", row.join("\t"));
    }

    let l = rational_part(&bw)?;
    let lp = irrational_part(&bw)?;
    println!("L_{m} basis (Hermite normal form):");
    for row in l.to_json(Some(m))["basis"].as_array().unwrap() {
        println!("  {row}");
    }
    println!("det L_{m} = {}, det L'_{m} = {}", l.gram_det(), lp.gram_det());
    println!("[L'_{m} : L_{m}] = {}", index(&l, &lp)?);
    Ok(())
}
