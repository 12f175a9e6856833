//! Classify binary self-dual codes up to length 12 and check each
//! classification against the mass formula.

use bwlattice::codes::classify_self_dual;

fn main() -> bwlattice::error::Result<()> {
    for n in (2..=12).step_by(2) {
        let c = classify_self_dual(n)?;
        println!("n = {n:>2}: {} classes, mass {} / {}, certified {}", c.classes.len(), c.mass_sum, c.mass_total, c.certified());
        for class in &c.classes {
            let code = &class.representative;
            println!(
                "    |Aut| = {:<8} doubly even {:<5}  generated by weight 2: {}",
                class.aut_order,
                code.is_doubly_even(),
                code.weight2_generated()
            );
        }
    }
    Ok(())
}
