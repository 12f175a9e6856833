//! Do the enumerators of self-dual codes of length 2k span the
//! degree-2k invariants of C_m?

use bwlattice::invariants::runge_span_check;

fn main() -> bwlattice::error::Result<()> {
    for m in 1..=2 {
        for k in 1..=4 {
            let r = runge_span_check(m, k)?;
            println!(
                "m = {m}, length {:>2}: {} codes, rank {} of {}, spanning {}, basis {}",
                r.length, r.classes, r.span_rank, r.invariant_dim, r.spanning, r.basis_flag
            );
        }
    }
    Ok(())
}
