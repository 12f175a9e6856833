//! Matrices over `Q(√2)`, the balanced Barnes-Wall lattices `M_m = M_1^{⊗m}`,
//! the Galois involution φ, and the classical pair `(L_m, L′_m)` recovered
//! as the fixed and negated parts of φ.
//!
//! A `Z[√2]`-lattice of rank `r` is handled through restriction of scalars:
//! its integer coordinate module has rank `2r` with the interleaved basis
//! `{w₁, √2·w₁, …, w_r, √2·w_r}` where `w_i` are the basis rows. Tensor
//! factors are ordered lexicographically: row `i` of `G_m` is
//! `u_{ε₁}⊗…⊗u_{ε_m}` where bit `m-j` of `i` (most significant first) is 0
//! for `u₁ = (√2, 0)` and 1 for `u₂ = (1, 1)`.

mod matrix;
mod zlattice;

pub use matrix::{kronecker, kronecker_power, MatQ2};
pub use zlattice::{canonical_form, index, ZLattice};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{consistency, domain, Error, Result};
use crate::linalg;
use crate::qring::{QSqrt2, ZSqrt2};

/// Largest tensor exponent accepted by [`balanced_bw`].
pub const MAX_CONSTRUCT_M: usize = 6;

/// The 2×2 generator matrix `G₁ = [[√2, 0], [1, 1]]` of `M₁`.
pub fn g1() -> MatQ2 {
    MatQ2::parse(&[&["√2", "0"], &["1", "1"]]).expect("constant")
}

/// `G_m = G₁^{⊗m}`.
pub fn generator_matrix(m: usize) -> MatQ2 {
    kronecker_power(&g1(), m)
}

/// A lattice over `Z[√2]`: the `Z[√2]`-span of the rows of `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BWLattice {
    m: usize,
    basis: MatQ2,
    gram: MatQ2,
}

impl BWLattice {
    /// Wraps an arbitrary square basis with entries in `Z[√2]`. The Gram
    /// matrix must be positive definite under both embeddings.
    pub fn from_basis(basis: MatQ2) -> Result<Self> {
        if !basis.is_square() {
            return Err(domain!("basis must be square"));
        }
        if !basis.is_integral() {
            return Err(domain!("basis entries must lie in Z[√2]"));
        }
        let n = basis.rows();
        if !n.is_power_of_two() {
            return Err(domain!("dimension {n} is not a power of two"));
        }
        if basis.det()?.is_zero() {
            return Err(domain!("basis is singular"));
        }
        let gram = basis.gram();
        if !gram.is_totally_positive_definite() {
            return Err(domain!("Gram matrix is not positive definite under both embeddings"));
        }
        Ok(BWLattice { m: n.trailing_zeros() as usize, basis, gram })
    }

    /// log₂ of the dimension.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &MatQ2 {
        &self.basis
    }

    pub fn gram(&self) -> &MatQ2 {
        &self.gram
    }

    /// True when the basis is exactly `G₁^{⊗m}`.
    pub fn is_balanced(&self) -> bool {
        self.m >= 1 && self.basis == generator_matrix(self.m)
    }

    /// Ambient coordinates of the `2r` integer-module basis vectors
    /// `w₁, √2w₁, w₂, √2w₂, …`.
    pub fn module_basis(&self) -> Vec<Vec<QSqrt2>> {
        let s = QSqrt2::sqrt2();
        (0..self.dim())
            .flat_map(|i| {
                let w = self.basis.row(i).to_vec();
                let sw: Vec<QSqrt2> = w.iter().map(|x| x * &s).collect();
                [w, sw]
            })
            .collect()
    }

    /// `Z[√2]` coefficients `c_i = x_{2i} + x_{2i+1}√2` of a module vector.
    pub fn module_coefficients(&self, x: &[BigInt]) -> Vec<ZSqrt2> {
        assert_eq!(x.len(), 2 * self.dim());
        x.chunks(2).map(|p| ZSqrt2::new(p[0].clone(), p[1].clone())).collect()
    }

    /// Ambient coordinates of the integer-module vector `x`.
    pub fn module_vector(&self, x: &[BigInt]) -> Vec<QSqrt2> {
        let c: Vec<QSqrt2> = self.module_coefficients(x).into_iter().map(QSqrt2::from).collect();
        self.basis.left_apply(&c)
    }

    /// `⟨v, v⟩` for the module vector with integer coordinates `x`.
    pub fn module_norm(&self, x: &[BigInt]) -> QSqrt2 {
        let c: Vec<QSqrt2> = self.module_coefficients(x).into_iter().map(QSqrt2::from).collect();
        let gc = self.gram.apply(&c);
        c.iter().zip(&gc).map(|(a, b)| a * b).sum()
    }

    /// Integer Gram matrix of the trace form `Tr⟨v, w⟩` on the module basis.
    pub fn trace_gram(&self) -> Vec<Vec<BigInt>> {
        let mb = self.module_basis();
        let dot = |u: &[QSqrt2], v: &[QSqrt2]| -> QSqrt2 { u.iter().zip(v).map(|(a, b)| a * b).sum() };
        let n = mb.len();
        let mut t = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let tr = dot(&mb[i], &mb[j]).trace();
                debug_assert!(tr.is_integer());
                let v = tr.to_integer();
                t[i][j] = v.clone();
                t[j][i] = v;
            }
        }
        t
    }

    /// True when the ambient vector `v` lies in the lattice.
    pub fn contains(&self, v: &[QSqrt2]) -> bool {
        match linalg::solve_left(&self.basis.to_rows(), &[v.to_vec()]) {
            Some(x) => x[0].iter().all(|c| c.is_algebraic_integer()),
            None => false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "ring": "Zsqrt2",
            "basis": self.basis.to_string_grid(),
            "gram": self.gram.to_string_grid(),
        })
    }
}

/// The balanced Barnes-Wall lattice `M_m` with basis `G₁^{⊗m}`.
pub fn balanced_bw(m: usize) -> Result<BWLattice> {
    if m < 1 {
        return Err(domain!("balanced Barnes-Wall lattice needs m >= 1, got {m}"));
    }
    if m > MAX_CONSTRUCT_M {
        return Err(Error::Unsupported(format!("construction is limited to m <= {MAX_CONSTRUCT_M}")));
    }
    let basis = generator_matrix(m);
    let gram = basis.gram();
    Ok(BWLattice { m, basis, gram })
}

/// The semilinear involution φ on the rank-`2^{m+1}` integer module of `M_m`,
/// acting on row vectors from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisInvolution {
    m: usize,
    matrix: Vec<Vec<BigInt>>,
}

impl GaloisInvolution {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        let n = self.matrix.len();
        (0..n).map(|j| x.iter().zip(&self.matrix).map(|(a, row)| a * &row[j]).sum()).collect()
    }

    /// φ² = identity.
    pub fn is_involution(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|i| {
            let e: Vec<BigInt> = (0..n).map(|j| BigInt::from((i == j) as i64)).collect();
            self.apply(&self.apply(&e)) == e
        })
    }

    /// φ(√2·v) = −√2·φ(v) on every module basis vector.
    pub fn is_semilinear(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|i| {
            let e: Vec<BigInt> = (0..n).map(|j| BigInt::from((i == j) as i64)).collect();
            let lhs = self.apply(&times_sqrt2(&e));
            let rhs: Vec<BigInt> = times_sqrt2(&self.apply(&e)).into_iter().map(|x| -x).collect();
            lhs == rhs
        })
    }

    /// Sign by which φ acts on the `Z[√2]`-basis vector `w_i`.
    pub fn basis_sign(m: usize, i: usize) -> i64 {
        let u1_count = m - (i.count_ones() as usize);
        if u1_count.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Multiplication by `√2` on interleaved module coordinates:
/// `(x + y√2)·√2 = 2y + x√2`.
pub fn times_sqrt2(x: &[BigInt]) -> Vec<BigInt> {
    x.chunks(2).flat_map(|p| [BigInt::from(2) * &p[1], p[0].clone()]).collect()
}

/// φ for `M_m`: negates `u₁`, fixes `u₂`, extended to tensor products and
/// then Galois-semilinearly to the whole module.
pub fn galois_involution(m: usize) -> Result<GaloisInvolution> {
    if m < 1 {
        return Err(domain!("Galois involution needs m >= 1"));
    }
    let r = 1usize << m;
    let mut matrix = vec![vec![BigInt::zero(); 2 * r]; 2 * r];
    for i in 0..r {
        let s = GaloisInvolution::basis_sign(m, i);
        matrix[2 * i][2 * i] = BigInt::from(s);
        matrix[2 * i + 1][2 * i + 1] = BigInt::from(-s);
    }
    Ok(GaloisInvolution { m, matrix })
}

fn require_balanced(l: &BWLattice) -> Result<()> {
    if l.is_balanced() {
        Ok(())
    } else {
        Err(domain!("φ is defined on the balanced lattice M_m with basis G_1^(⊗m)"))
    }
}

fn identity_int(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

/// Module-coordinate bases of the (+1)- and (−1)-eigenmodules of φ.
pub fn eigenmodules(l: &BWLattice) -> Result<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)> {
    require_balanced(l)?;
    let phi = galois_involution(l.m())?;
    let n = phi.matrix.len();
    let id = identity_int(n);
    let minus: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| &phi.matrix[i][j] - &id[i][j]).collect()).collect();
    let plus: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| &phi.matrix[i][j] + &id[i][j]).collect()).collect();
    Ok((linalg::left_kernel(&minus), linalg::left_kernel(&plus)))
}

fn module_rows_to_rational(l: &BWLattice, rows: &[Vec<BigInt>], divide_by_sqrt2: bool) -> Result<Vec<Vec<BigRational>>> {
    rows.iter()
        .map(|x| {
            l.module_vector(x)
                .into_iter()
                .map(|c| {
                    if divide_by_sqrt2 {
                        if !c.is_pure_irrational() {
                            return Err(consistency!("expected a rational multiple of √2, got {c}"));
                        }
                        Ok(c.b().clone())
                    } else {
                        if !c.is_rational() {
                            return Err(consistency!("expected a rational coordinate, got {c}"));
                        }
                        Ok(c.a().clone())
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

/// `L_m`: the vectors of `M_m` with rational coordinates, computed as the
/// fixed module of φ.
pub fn rational_part(l: &BWLattice) -> Result<ZLattice> {
    let (fixed, _) = eigenmodules(l)?;
    let rows = module_rows_to_rational(l, &fixed, false)?;
    ZLattice::from_generators(&rows)
}

/// `L′_m`: the purely irrational part of `M_m` (the negated module of φ)
/// divided by `√2`. See [`irrational_part_raw`] for `√2·L′_m` itself.
pub fn irrational_part(l: &BWLattice) -> Result<ZLattice> {
    let (_, negated) = eigenmodules(l)?;
    let rows = module_rows_to_rational(l, &negated, true)?;
    ZLattice::from_generators(&rows)
}

/// Basis of `√2·L′_m` in ambient `Q(√2)` coordinates.
pub fn irrational_part_raw(l: &BWLattice) -> Result<Vec<Vec<QSqrt2>>> {
    let lp = irrational_part(l)?;
    let s = QSqrt2::sqrt2();
    Ok(lp.basis().iter().map(|r| r.iter().map(|x| QSqrt2::from(x.clone()) * &s).collect()).collect())
}

/// Coordinate-splitting route to the rational part: the integer kernel of
/// the map sending a module vector to the `√2`-components of its ambient
/// coordinates. Works for any `Z[√2]`-lattice.
pub fn rational_part_by_coordinates(l: &BWLattice) -> Result<ZLattice> {
    let kernel = coordinate_kernel(l, |c| c.b().clone())?;
    let rows = module_rows_to_rational(l, &kernel, false)?;
    ZLattice::from_generators(&rows)
}

/// Coordinate-splitting route to `L′` (purely irrational part divided by `√2`).
pub fn irrational_part_by_coordinates(l: &BWLattice) -> Result<ZLattice> {
    let kernel = coordinate_kernel(l, |c| c.a().clone())?;
    let rows = module_rows_to_rational(l, &kernel, true)?;
    ZLattice::from_generators(&rows)
}

fn coordinate_kernel(l: &BWLattice, part: impl Fn(&QSqrt2) -> BigRational) -> Result<Vec<Vec<BigInt>>> {
    let mb = l.module_basis();
    let mut map: Vec<Vec<BigInt>> = Vec::with_capacity(mb.len());
    for v in &mb {
        let row: Vec<BigInt> = v
            .iter()
            .map(|c| {
                let p = part(c);
                if !p.is_integer() {
                    return Err(consistency!("non-integral module coordinate {c}"));
                }
                Ok(p.to_integer())
            })
            .collect::<Result<_>>()?;
        map.push(row);
    }
    Ok(linalg::left_kernel(&map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_matches_displayed_matrix() {
        let expected = MatQ2::parse(&[
            &["2", "0", "0", "0"],
            &["√2", "√2", "0", "0"],
            &["√2", "0", "√2", "0"],
            &["1", "1", "1", "1"],
        ])
        .unwrap();
        assert_eq!(kronecker(&g1(), &g1()), expected);
    }

    #[test]
    fn m1_basis_and_gram() {
        let l = balanced_bw(1).unwrap();
        assert_eq!(l.basis(), &g1());
        assert_eq!(l.gram(), &MatQ2::parse(&[&["2", "√2"], &["√2", "2"]]).unwrap());
        assert_eq!(l.gram().det().unwrap(), QSqrt2::from(2));
    }

    #[test]
    fn m2_gram_is_tensor_square() {
        let a1 = balanced_bw(1).unwrap().gram().clone();
        assert_eq!(balanced_bw(2).unwrap().gram(), &kronecker(&a1, &a1));
    }

    #[test]
    fn construction_range() {
        assert!(matches!(balanced_bw(0), Err(Error::Domain(_))));
        assert!(matches!(balanced_bw(7), Err(Error::Unsupported(_))));
    }

    #[test]
    fn gram_totally_positive() {
        for m in 1..=4 {
            assert!(balanced_bw(m).unwrap().gram().is_totally_positive_definite(), "m={m}");
        }
    }

    #[test]
    fn phi_on_m1() {
        let phi = galois_involution(1).unwrap();
        let e = |i: usize| -> Vec<BigInt> { (0..4).map(|j| BigInt::from((i == j) as i64)).collect() };
        let neg = |v: Vec<BigInt>| -> Vec<BigInt> { v.into_iter().map(|x| -x).collect() };
        // u1 ↦ -u1, u2 ↦ u2, √2u2 ↦ -√2u2
        assert_eq!(phi.apply(&e(0)), neg(e(0)));
        assert_eq!(phi.apply(&e(2)), e(2));
        assert_eq!(phi.apply(&e(3)), neg(e(3)));
        // u1⊗u1 is fixed for m = 2
        let phi2 = galois_involution(2).unwrap();
        let v: Vec<BigInt> = (0..8).map(|j| BigInt::from((j == 0) as i64)).collect();
        assert_eq!(phi2.apply(&v), v);
    }

    #[test]
    fn phi_laws() {
        for m in 1..=4 {
            let phi = galois_involution(m).unwrap();
            assert!(phi.is_involution());
            assert!(phi.is_semilinear());
        }
    }

    #[test]
    fn rational_and_irrational_parts_m1() {
        let l = balanced_bw(1).unwrap();
        let lr = rational_part(&l).unwrap();
        assert_eq!(lr, ZLattice::from_int_rows(&[&[2, 0], &[1, 1]]));
        assert_eq!(lr.basis(), ZLattice::from_int_rows(&[&[2, 0], &[1, 1]]).basis());
        let lp = irrational_part(&l).unwrap();
        assert_eq!(lp, ZLattice::standard(2));
        assert_eq!(index(&lr, &lp).unwrap(), BigInt::from(2));
    }

    #[test]
    fn rational_part_m2_matches_display() {
        let l = balanced_bw(2).unwrap();
        let expected = ZLattice::from_int_rows(&[&[2, 0, 0, 0], &[2, 2, 0, 0], &[2, 0, 2, 0], &[1, 1, 1, 1]]);
        assert_eq!(rational_part(&l).unwrap(), expected);
        let lp = ZLattice::from_int_rows(&[&[2, 0, 0, 0], &[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]]);
        assert_eq!(irrational_part(&l).unwrap(), lp);
        let raw = irrational_part_raw(&l).unwrap();
        assert!(raw.iter().flatten().all(|x| x.is_pure_irrational()));
    }

    #[test]
    fn splitting_routes_agree() {
        for m in 1..=3 {
            let l = balanced_bw(m).unwrap();
            assert_eq!(rational_part(&l).unwrap(), rational_part_by_coordinates(&l).unwrap());
            assert_eq!(irrational_part(&l).unwrap(), irrational_part_by_coordinates(&l).unwrap());
        }
    }

    #[test]
    fn trace_gram_matches_norms() {
        let l = balanced_bw(1).unwrap();
        let t = l.trace_gram();
        // Tr⟨u1,u1⟩ = Tr 2 = 4; Tr⟨√2u1, √2u1⟩ = Tr 4 = 8; Tr⟨u1, u2⟩ = Tr √2 = 0
        assert_eq!(t[0][0], BigInt::from(4));
        assert_eq!(t[1][1], BigInt::from(8));
        assert_eq!(t[0][2], BigInt::from(0));
        assert_eq!(t[1][2], BigInt::from(4));
    }

    #[test]
    fn membership() {
        let l = balanced_bw(1).unwrap();
        assert!(l.contains(&[QSqrt2::from(1), QSqrt2::from(-1)]));
        assert!(!l.contains(&[QSqrt2::from(1), QSqrt2::from(0)]));
    }
}
