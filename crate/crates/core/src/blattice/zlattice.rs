use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{consistency, domain, Result};
use crate::linalg;
use crate::qring::rational_to_string;

/// A lattice over the integers with rational coordinates.
///
/// The stored basis is always the canonical one: the lower-triangular
/// Hermite normal form of the integer-scaled generators, so two `ZLattice`s
/// compare equal exactly when they are the same point set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZLattice {
    dim: usize,
    basis: Vec<Vec<BigRational>>,
    gram: Vec<Vec<BigRational>>,
}

fn common_denominator(rows: &[Vec<BigRational>]) -> BigInt {
    rows.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

impl ZLattice {
    /// Lattice spanned by arbitrary (possibly dependent) rational generators.
    pub fn from_generators(rows: &[Vec<BigRational>]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != dim) {
            return Err(domain!("generators of unequal length"));
        }
        let den = common_denominator(rows);
        let scaled: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|x| (x * &den).to_integer()).collect()).collect();
        let h = linalg::hnf_lower(&scaled);
        let denr = BigRational::from_integer(den);
        let basis: Vec<Vec<BigRational>> =
            h.into_iter().map(|r| r.into_iter().map(|x| BigRational::from_integer(x) / &denr).collect()).collect();
        let gram = gram_of(&basis);
        Ok(ZLattice { dim, basis, gram })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        Self::from_generators(&r).expect("rectangular integer rows")
    }

    /// The integer lattice `Zⁿ`.
    pub fn standard(n: usize) -> Self {
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))).collect())
            .collect();
        Self::from_generators(&rows).expect("identity")
    }

    /// The root lattice `Dₙ = {x ∈ Zⁿ : Σx even}` in its usual simple-root basis.
    pub fn d_n(n: usize) -> Self {
        assert!(n >= 2);
        let mut rows = vec![vec![0i64; n]; n];
        rows[0][0] = -1;
        rows[0][1] = -1;
        for i in 1..n {
            rows[i][i - 1] = 1;
            rows[i][i] = -1;
        }
        let r: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        Self::from_int_rows(&r)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    /// Determinant of the Gram matrix.
    pub fn gram_det(&self) -> BigRational {
        linalg::det(&self.gram).expect("square gram")
    }

    /// The lattice with every coordinate multiplied by `r`.
    pub fn scaled(&self, r: &BigRational) -> Self {
        let rows: Vec<Vec<BigRational>> = self.basis.iter().map(|v| v.iter().map(|x| x * r).collect()).collect();
        Self::from_generators(&rows).expect("scaling preserves shape")
    }

    /// Integer coordinates of `v` in the stored basis, if `v` is a lattice vector.
    pub fn coordinates(&self, v: &[BigRational]) -> Option<Vec<BigInt>> {
        let x = linalg::solve_left(&self.basis, &[v.to_vec()])?;
        let x = x.into_iter().next()?;
        if x.iter().all(|c| c.is_integer()) {
            Some(x.into_iter().map(|c| c.to_integer()).collect())
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `c·basis` for integer coefficients `c`.
    pub fn vector(&self, coeffs: &[BigInt]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let c = BigRational::from_integer(c.clone());
            for (o, x) in out.iter_mut().zip(row) {
                *o += &c * x;
            }
        }
        out
    }

    pub fn to_json(&self, m: Option<usize>) -> Value {
        let grid = |g: &[Vec<BigRational>]| -> Vec<Vec<String>> {
            g.iter().map(|r| r.iter().map(rational_to_string).collect()).collect()
        };
        json!({
            "m": m,
            "ring": "Z",
            "basis": grid(&self.basis),
            "gram": grid(&self.gram),
        })
    }
}

pub(crate) fn gram_of(basis: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    basis
        .iter()
        .map(|u| {
            basis
                .iter()
                .map(|v| u.iter().zip(v).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
                .collect()
        })
        .collect()
}

/// Canonical representative of a lattice: lower-triangular Hermite normal
/// form of its integer-scaled basis.
pub fn canonical_form(l: &ZLattice) -> ZLattice {
    ZLattice::from_generators(l.basis()).expect("canonical input")
}

/// Group index `[sup : sub]`.
pub fn index(sub: &ZLattice, sup: &ZLattice) -> Result<BigInt> {
    if sub.dim() != sup.dim() || sub.rank() != sup.rank() {
        return Err(domain!("index needs lattices of equal rank and dimension"));
    }
    let x = linalg::solve_left(sup.basis(), sub.basis())
        .ok_or_else(|| domain!("sublattice is not contained in the span of the superlattice"))?;
    if x.iter().flatten().any(|c| !c.is_integer()) {
        return Err(domain!("sublattice is not contained in the superlattice"));
    }
    let d = linalg::det(&x).expect("square transition matrix").abs();
    // independent check through Gram determinants: det(G_sub) = idx² det(G_sup)
    let ratio = sub.gram_det() / sup.gram_det();
    if ratio != &d * &d || !d.is_integer() {
        return Err(consistency!("index {} disagrees with Gram determinant ratio {}", d, ratio));
    }
    Ok(d.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_resolves_equivalent_bases() {
        let a = ZLattice::from_int_rows(&[&[2, 0, 0, 0], &[2, 2, 0, 0], &[2, 0, 2, 0], &[1, 1, 1, 1]]);
        let b = ZLattice::from_int_rows(&[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[1, 1, 1, 1]]);
        assert_eq!(a, b);
        assert_eq!(canonical_form(&a), b);
        assert_eq!(ZLattice::from_int_rows(&[&[0, 1], &[1, 0]]), ZLattice::standard(2));
        assert_eq!(canonical_form(&ZLattice::standard(2)), ZLattice::standard(2));
    }

    #[test]
    fn index_examples() {
        let l1 = ZLattice::from_int_rows(&[&[2, 0], &[1, 1]]);
        let z2 = ZLattice::standard(2);
        assert_eq!(index(&l1, &z2).unwrap(), BigInt::from(2));
        assert_eq!(index(&z2, &z2).unwrap(), BigInt::one());
        assert!(index(&z2, &l1).is_err());
    }

    #[test]
    fn rational_generators() {
        let half = BigRational::new(1.into(), 2.into());
        let zero = BigRational::zero();
        let l = ZLattice::from_generators(&[vec![half.clone(), zero.clone()], vec![zero, half.clone()]]).unwrap();
        assert_eq!(l.gram_det(), BigRational::new(1.into(), 16.into()));
        assert!(l.contains(&[half.clone(), half]));
    }

    #[test]
    fn d4_has_determinant_four() {
        assert_eq!(ZLattice::d_n(4).gram_det(), BigRational::from_integer(4.into()));
    }
}
