//! Exact construction of the balanced Barnes-Wall lattices `M_m` over
//! `Z[√2]`, the classical Barnes-Wall pair `(L_m, L′_m)` recovered from them,
//! the Clifford groups `C_m = Aut(M_m)` with their Molien series, and the
//! invariant theory tying those groups to binary self-dual codes.
//!
//! All arithmetic is exact (`num-bigint` integers and rationals); nothing in
//! the pipeline depends on floating point.

pub mod blattice;
pub mod cgroup;
pub mod cli;
pub mod codes;
pub mod enumerate;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod perm;
pub mod qring;

pub use error::{Error, Result};
pub use qring::{QSqrt2, ZSqrt2};
