use std::fmt;
use std::ops::Mul;

use crate::error::{domain, Result};
use crate::linalg;
use crate::qring::QSqrt2;

/// Dense row-major matrix over `Q(√2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatQ2 {
    rows: usize,
    cols: usize,
    data: Vec<QSqrt2>,
}

impl MatQ2 {
    pub fn new(rows: usize, cols: usize, data: Vec<QSqrt2>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(domain!("{}x{} matrix needs {} entries, got {}", rows, cols, rows * cols, data.len()));
        }
        Ok(MatQ2 { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatQ2 { rows, cols, data: vec![QSqrt2::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = QSqrt2::one();
        }
        m
    }

    pub fn diagonal(entries: &[QSqrt2]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QSqrt2>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(domain!("ragged rows"));
        }
        Ok(MatQ2 { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Parses a grid of scalar strings such as `[["√2","0"],["1","1"]]`.
    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        let parsed: Result<Vec<Vec<QSqrt2>>> =
            rows.iter().map(|r| r.iter().map(|s| s.parse::<QSqrt2>()).collect()).collect();
        Self::from_rows(parsed?)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| QSqrt2::from(x)).collect()).collect())
            .expect("rectangular integer grid")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QSqrt2 {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QSqrt2) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[QSqrt2] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[QSqrt2] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<QSqrt2>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Entrywise Galois conjugate.
    pub fn conjugate(&self) -> Self {
        MatQ2 { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.conjugate()).collect() }
    }

    pub fn scale(&self, s: &QSqrt2) -> Self {
        MatQ2 { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    /// All entries lie in `Z[√2]`.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_algebraic_integer())
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(|x| x.is_rational())
    }

    pub fn det(&self) -> Result<QSqrt2> {
        if !self.is_square() {
            return Err(domain!("determinant of a non-square {}x{} matrix", self.rows, self.cols));
        }
        Ok(linalg::det(&self.to_rows()).expect("square"))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(domain!("inverse of a non-square matrix"));
        }
        let inv = linalg::inverse(&self.to_rows()).ok_or_else(|| domain!("singular matrix"))?;
        Self::from_rows(inv)
    }

    /// `M·Mᵀ`.
    pub fn gram(&self) -> Self {
        self * &self.transpose()
    }

    /// `M·Mᵀ = I`, checked exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.is_square() && self.gram().is_identity()
    }

    /// Positive definite under the real embedding `√2 ↦ +1.414…`: every
    /// leading principal minor is positive.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        match linalg::ldl_pivots(&self.to_rows()) {
            Some(p) => p.iter().all(|d| d.sign() > 0),
            None => false,
        }
    }

    /// Positive definite under both real embeddings of `Q(√2)`.
    pub fn is_totally_positive_definite(&self) -> bool {
        self.is_positive_definite() && self.conjugate().is_positive_definite()
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[QSqrt2]) -> Vec<QSqrt2> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = QSqrt2::zero();
                for (i, x) in v.iter().enumerate() {
                    let e = self.get(i, j);
                    if !x.is_zero() && !e.is_zero() {
                        acc += x * e;
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[QSqrt2]) -> Vec<QSqrt2> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = QSqrt2::zero();
                for (e, x) in self.row(i).iter().zip(v) {
                    if !x.is_zero() && !e.is_zero() {
                        acc += e * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn to_string_grid(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect()
    }
}

impl<'b> Mul<&'b MatQ2> for &MatQ2 {
    type Output = MatQ2;
    fn mul(self, rhs: &'b MatQ2) -> MatQ2 {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = MatQ2::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Mul for MatQ2 {
    type Output = MatQ2;
    fn mul(self, rhs: MatQ2) -> MatQ2 {
        &self * &rhs
    }
}

impl fmt::Display for MatQ2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Kronecker product `A ⊗ B`, of shape `(r₁r₂) × (c₁c₂)`.
pub fn kronecker(a: &MatQ2, b: &MatQ2) -> MatQ2 {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = MatQ2::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        out.set(i * b.rows + k, j * b.cols + l, x * y);
                    }
                }
            }
        }
    }
    out
}

/// `A^{⊗m}`; `m = 0` gives the 1×1 identity.
pub fn kronecker_power(a: &MatQ2, m: usize) -> MatQ2 {
    let mut out = MatQ2::identity(1);
    for _ in 0..m {
        out = kronecker(&out, a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_identity_cases() {
        let i2 = MatQ2::identity(2);
        assert_eq!(kronecker(&i2, &i2), MatQ2::identity(4));
        let a = MatQ2::parse(&[&["1", "√2"], &["-1/2", "3"]]).unwrap();
        assert_eq!(kronecker(&a, &MatQ2::identity(1)), a);
        assert_eq!(kronecker(&MatQ2::identity(1), &a), a);
    }

    #[test]
    fn kronecker_dimensions_multiply() {
        let a = MatQ2::zeros(2, 3);
        let b = MatQ2::zeros(4, 5);
        let k = kronecker(&a, &b);
        assert_eq!((k.rows(), k.cols()), (8, 15));
    }

    #[test]
    fn gram_of_kronecker_is_kronecker_of_grams() {
        let a = MatQ2::parse(&[&["√2", "0"], &["1", "1"]]).unwrap();
        let b = MatQ2::parse(&[&["1", "2-√2"], &["1/3", "√2"]]).unwrap();
        assert_eq!(kronecker(&a, &b).gram(), kronecker(&a.gram(), &b.gram()));
    }

    #[test]
    fn det_and_inverse() {
        let a = MatQ2::parse(&[&["2", "√2"], &["√2", "2"]]).unwrap();
        assert_eq!(a.det().unwrap(), QSqrt2::from(2));
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!(a.is_totally_positive_definite());
        let indefinite = MatQ2::parse(&[&["1", "√2"], &["√2", "1"]]).unwrap();
        assert!(!indefinite.is_positive_definite());
    }
}
