//! Exact linear algebra shared by the lattice, group and polynomial modules:
//! Hermite normal forms and kernels over the integers, and Gaussian
//! elimination over `Q` and `Q(√2)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::qring::QSqrt2;

/// Minimal field interface for exact elimination.
pub trait FieldScalar: Clone + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl FieldScalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl FieldScalar for QSqrt2 {
    fn zero() -> Self {
        QSqrt2::zero()
    }
    fn one() -> Self {
        QSqrt2::one()
    }
    fn is_zero(&self) -> bool {
        QSqrt2::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref<S: FieldScalar>(rows: &[Vec<S>]) -> (Vec<Vec<S>>, Vec<usize>) {
    let mut a: Vec<Vec<S>> = rows.to_vec();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = S::one().div(&a[r][c]);
        for x in a[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = x.sub(&f.mul(p));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank<S: FieldScalar>(rows: &[Vec<S>]) -> usize {
    rref(rows).1.len()
}

/// Determinant by elimination; `None` for a non-square input.
pub fn det<S: FieldScalar>(m: &[Vec<S>]) -> Option<S> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut a = m.to_vec();
    let mut d = S::one();
    for c in 0..n {
        let p = match (c..n).find(|&i| !a[i][c].is_zero()) {
            Some(p) => p,
            None => return Some(S::zero()),
        };
        if p != c {
            a.swap(p, c);
            d = d.neg();
        }
        d = d.mul(&a[c][c]);
        let pivot_row = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = row[c].div(&pivot_row[c]);
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
    }
    Some(d)
}

/// Pivots `d_1, …, d_n` of the LDLᵀ decomposition without row exchanges;
/// `d_k` is the ratio of consecutive leading principal minors. `None` when a
/// leading minor vanishes.
pub fn ldl_pivots<S: FieldScalar>(m: &[Vec<S>]) -> Option<Vec<S>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut out = Vec::with_capacity(n);
    for c in 0..n {
        if a[c][c].is_zero() {
            return None;
        }
        out.push(a[c][c].clone());
        let pivot_row = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if !row[c].is_zero() {
                let f = row[c].div(&pivot_row[c]);
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
    }
    Some(out)
}

pub fn transpose<S: Clone>(m: &[Vec<S>]) -> Vec<Vec<S>> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul<S: FieldScalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = S::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&row[k].mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Solves `X·A = B` for `X` when `A` has linearly independent rows.
/// Returns `None` if some row of `B` is outside the row space of `A`.
pub fn solve_left<S: FieldScalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let k = a.len();
    let n = a.first().map_or(0, |r| r.len());
    // eliminate on the augmented system [Aᵀ | Bᵀ]
    let at = transpose(a);
    let bt = transpose(b);
    let nb = b.len();
    let mut aug: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut row = at[i].clone();
            if nb > 0 {
                row.extend(bt[i].iter().cloned());
            }
            row
        })
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !aug[i][c].is_zero()) else {
            return None; // A has dependent rows
        };
        aug.swap(r, p);
        let inv = S::one().div(&aug[r][c]);
        for x in aug[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pr = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pr) {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    // remaining rows must be consistent
    if aug[r..].iter().any(|row| row[k..].iter().any(|x| !x.is_zero())) {
        return None;
    }
    let mut x = vec![vec![S::zero(); k]; nb];
    for (i, &c) in pivots.iter().enumerate() {
        for (j, xr) in x.iter_mut().enumerate() {
            xr[c] = aug[i][k + j].clone();
        }
    }
    Some(x)
}

pub fn inverse<S: FieldScalar>(m: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let n = m.len();
    let id: Vec<Vec<S>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect();
    // X·M = I
    solve_left(m, &id)
}

// ---- integer lattices ----

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hnf_upper(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a = rows.to_vec();
    let r = echelonize(&mut a, None);
    a.truncate(r);
    a
}

/// Hermite normal form in the lower-triangular convention: row `i` has its
/// positive pivot in the rightmost nonzero column, and entries below each
/// pivot are reduced into `[0, pivot)`.
pub fn hnf_lower(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rev: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().rev().cloned().collect()).collect();
    let h = hnf_upper(&rev);
    h.into_iter().rev().map(|r| r.into_iter().rev().collect()).collect()
}

/// Integer left kernel `{x : x·M = 0}`, returned as an upper HNF basis.
pub fn left_kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..rows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let rank = echelonize(&mut aug, Some(cols));
    let kernel: Vec<Vec<BigInt>> = aug[rank..].iter().map(|r| r[cols..].to_vec()).collect();
    hnf_upper(&kernel)
}

/// Unimodular row reduction to echelon form on the first `limit` columns
/// (all columns when `None`). Returns the rank on those columns.
fn echelonize(a: &mut [Vec<BigInt>], limit: Option<usize>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let limit = limit.unwrap_or(ncols);
    let mut r = 0;
    for c in 0..limit {
        if r == nrows {
            break;
        }
        loop {
            let piv = (r..nrows).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(piv) = piv else { break };
            a.swap(r, piv);
            let mut clean = true;
            for i in r + 1..nrows {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[r][c]);
                    let pr = a[r].clone();
                    for (x, p) in a[i].iter_mut().zip(&pr) {
                        *x -= &q * p;
                    }
                    if !a[i][c].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pr = a[r].clone();
        for i in 0..r {
            let q = a[i][c].div_floor(&pr[c]);
            if !q.is_zero() {
                for (x, p) in a[i].iter_mut().zip(&pr) {
                    *x -= &q * p;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn to_rational_rows(m: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect()
}
