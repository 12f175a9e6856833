//! Exact short-vector enumeration (Fincke–Pohst over an exact LDLᵀ
//! decomposition), theta-series prefixes, kissing numbers, spherical design
//! moment tests, and lattice similarity checks.
//!
//! `Z[√2]`-lattices are enumerated through their integer coordinate module
//! under the trace form `T(v) = ⟨v,v⟩ + conj⟨v,v⟩`, which is integral and
//! positive definite; vectors of exact norm `a + b√2` all satisfy `T(v) = 2a`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::blattice::{balanced_bw, irrational_part, rational_part, BWLattice, ZLattice};
use crate::error::{domain, Error, Result};
use crate::linalg;
use crate::qring::{rational_to_string, QSqrt2, ZSqrt2};

/// Enumeration ceiling for minimal vectors of `L_m` / `L′_m`.
pub const MAX_ENUM_M: usize = 4;

/// A finite set of vectors in a common ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSet {
    pub dim: usize,
    pub vectors: Vec<Vec<QSqrt2>>,
    /// Common squared norm, when every vector has the same one.
    pub norm: Option<QSqrt2>,
}

impl VectorSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_antipodal(&self) -> bool {
        let set: std::collections::HashSet<&Vec<QSqrt2>> = self.vectors.iter().collect();
        self.vectors.iter().all(|v| {
            let neg: Vec<QSqrt2> = v.iter().map(|x| -x).collect();
            set.contains(&neg)
        })
    }

    pub fn has_duplicates(&self) -> bool {
        let set: std::collections::HashSet<&Vec<QSqrt2>> = self.vectors.iter().collect();
        set.len() != self.vectors.len()
    }

    /// Rank of the span over `Q(√2)`.
    pub fn span_rank(&self) -> usize {
        linalg::rank(&self.vectors)
    }

    pub fn to_json(&self, with_vectors: bool) -> Value {
        let mut v = json!({
            "dim": self.dim,
            "count": self.vectors.len(),
            "norm": self.norm.as_ref().map(|n| n.to_string()),
        });
        if with_vectors {
            v["vectors"] = json!(self
                .vectors
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>());
        }
        v
    }
}

/// Counts of lattice vectors per norm, in increasing norm order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPrefix {
    pub shells: Vec<(BigRational, u64)>,
    pub bound: BigRational,
}

impl ThetaPrefix {
    /// The same prefix with every norm multiplied by `s`.
    pub fn rescaled(&self, s: &BigRational) -> ThetaPrefix {
        ThetaPrefix { shells: self.shells.iter().map(|(n, c)| (n * s, *c)).collect(), bound: &self.bound * s }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "norms": self
                .shells
                .iter()
                .map(|(n, c)| json!([rational_to_string(n), c]))
                .collect::<Vec<_>>(),
            "bound": rational_to_string(&self.bound),
        })
    }
}

// ---- Fincke–Pohst core ----

/// Exact LDLᵀ factors of a positive definite rational Gram matrix:
/// `xᵀGx = Σ_j d_j (x_j + Σ_{i>j} l[i][j] x_i)²`.
struct Ldl {
    d: Vec<BigRational>,
    l: Vec<Vec<BigRational>>,
}

fn ldl(gram: &[Vec<BigRational>]) -> Result<Ldl> {
    let n = gram.len();
    let mut d: Vec<BigRational> = Vec::with_capacity(n);
    let mut l = vec![vec![BigRational::zero(); n]; n];
    for j in 0..n {
        let mut dj = gram[j][j].clone();
        for k in 0..j {
            dj -= &l[j][k] * &l[j][k] * &d[k];
        }
        if !dj.is_positive() {
            return Err(domain!("Gram matrix is not positive definite"));
        }
        for i in j + 1..n {
            let mut s = gram[i][j].clone();
            for k in 0..j {
                s -= &l[i][k] * &l[j][k] * &d[k];
            }
            l[i][j] = s / &dj;
        }
        d.push(dj);
    }
    Ok(Ldl { d, l })
}

/// Integers `x` with `(x - c)² ≤ r`, in increasing order.
fn interval(c: &BigRational, r: &BigRational) -> Option<(i64, i64)> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let x0 = (c + &half).floor().to_integer();
    let fits = |x: &BigInt| {
        let t = BigRational::from_integer(x.clone()) - c;
        &t * &t <= *r
    };
    if !fits(&x0) {
        return None;
    }
    let mut lo = x0.clone();
    while fits(&(&lo - 1)) {
        lo -= 1;
    }
    let mut hi = x0;
    while fits(&(&hi + 1)) {
        hi += 1;
    }
    Some((lo.to_i64()?, hi.to_i64()?))
}

struct Search<'a> {
    f: &'a Ldl,
    n: usize,
    bound: BigRational,
}

impl Search<'_> {
    /// Depth-first over coordinates `j = level, level-1, …, 0` with the
    /// coordinates above `level` already fixed in `x`.
    fn run(&self, level: usize, x: &mut Vec<i64>, partial: &BigRational, all_zero_above: bool, out: &mut Vec<(Vec<i64>, BigRational)>) {
        let j = level;
        let mut center = BigRational::zero();
        for i in j + 1..self.n {
            if x[i] != 0 {
                center -= &self.f.l[i][j] * BigRational::from_integer(x[i].into());
            }
        }
        let rem = &self.bound - partial;
        let r = &rem / &self.f.d[j];
        let Some((mut lo, hi)) = interval(&center, &r) else { return };
        if all_zero_above && lo < 0 {
            // central symmetry: the top nonzero coordinate is positive
            lo = 0;
        }
        for v in lo..=hi {
            let t = BigRational::from_integer(v.into()) - &center;
            let q = partial + &self.f.d[j] * &t * &t;
            x[j] = v;
            let zero_here = all_zero_above && v == 0;
            if j == 0 {
                if !zero_here {
                    out.push((x.clone(), q));
                }
            } else {
                self.run(j - 1, x, &q, zero_here, out);
            }
        }
        x[j] = 0;
    }
}

/// All nonzero integer vectors `x` with `xᵀGx ≤ bound`, each paired with
/// its value, sorted lexicographically.
pub fn fincke_pohst(gram: &[Vec<BigRational>], bound: &BigRational) -> Result<Vec<(Vec<i64>, BigRational)>> {
    let n = gram.len();
    if n == 0 || bound.is_negative() {
        return Ok(Vec::new());
    }
    let f = ldl(gram)?;
    let search = Search { f: &f, n, bound: bound.clone() };
    // split on the top coordinate so branches can run in parallel
    let top = n - 1;
    let r = bound / &f.d[top];
    let Some((_, hi)) = interval(&BigRational::zero(), &r) else { return Ok(Vec::new()) };
    let branches: Vec<Vec<(Vec<i64>, BigRational)>> = (0..=hi)
        .into_par_iter()
        .map(|v| {
            let mut out = Vec::new();
            let mut x = vec![0i64; n];
            x[top] = v;
            let q = &f.d[top] * BigRational::from_integer(v.into()) * BigRational::from_integer(v.into());
            if top == 0 {
                if v != 0 {
                    out.push((x.clone(), q));
                }
            } else {
                search.run(top - 1, &mut x, &q, v == 0, &mut out);
            }
            out
        })
        .collect();
    let mut half: Vec<(Vec<i64>, BigRational)> = branches.into_iter().flatten().collect();
    let negs: Vec<(Vec<i64>, BigRational)> =
        half.iter().map(|(x, q)| (x.iter().map(|c| -c).collect(), q.clone())).collect();
    half.extend(negs);
    half.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(half)
}

fn int_gram_to_rational(g: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    linalg::to_rational_rows(g)
}

fn ambient(l: &ZLattice, x: &[i64]) -> Vec<QSqrt2> {
    let c: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
    l.vector(&c).into_iter().map(QSqrt2::from).collect()
}

// ---- Z-lattices ----

/// Nonzero vectors of `l` with norm at most `bound`, in lexicographic order
/// of their basis coefficients.
pub fn short_vectors(l: &ZLattice, bound: &BigRational) -> Result<VectorSet> {
    let found = fincke_pohst(l.gram(), bound)?;
    let norm = common_norm(found.iter().map(|(_, q)| q));
    Ok(VectorSet {
        dim: l.dim(),
        vectors: found.iter().map(|(x, _)| ambient(l, x)).collect(),
        norm: norm.map(QSqrt2::from),
    })
}

fn common_norm<'a>(mut it: impl Iterator<Item = &'a BigRational>) -> Option<BigRational> {
    let first = it.next()?.clone();
    if it.all(|q| *q == first) {
        Some(first)
    } else {
        None
    }
}

/// Minimum nonzero norm of `l`.
pub fn minimum(l: &ZLattice) -> Result<BigRational> {
    let diag_min = (0..l.rank()).map(|i| l.gram()[i][i].clone()).min().ok_or_else(|| domain!("rank-zero lattice"))?;
    let found = fincke_pohst(l.gram(), &diag_min)?;
    Ok(found.into_iter().map(|(_, q)| q).min().expect("basis vectors are within the bound"))
}

/// Vectors achieving the minimal nonzero norm.
pub fn minimal_vectors(l: &ZLattice) -> Result<VectorSet> {
    let min = minimum(l)?;
    short_vectors(l, &min)
}

/// Counts of vectors at each norm up to `max_norm` (norm 0 included).
pub fn theta_prefix(l: &ZLattice, max_norm: &BigRational) -> Result<ThetaPrefix> {
    let found = fincke_pohst(l.gram(), max_norm)?;
    let mut counts: BTreeMap<BigRational, u64> = BTreeMap::new();
    counts.insert(BigRational::zero(), 1);
    for (_, q) in found {
        *counts.entry(q).or_insert(0) += 1;
    }
    Ok(ThetaPrefix { shells: counts.into_iter().collect(), bound: max_norm.clone() })
}

/// The first `k` shells (norm 0 counts as the first), found by raising the
/// bound in steps of a quarter of the minimum.
pub fn theta_shells(l: &ZLattice, k: usize) -> Result<ThetaPrefix> {
    let min = minimum(l)?;
    let step = &min / BigRational::from_integer(4.into());
    let mut bound = min.clone();
    loop {
        let t = theta_prefix(l, &bound)?;
        if t.shells.len() >= k {
            let shells: Vec<(BigRational, u64)> = t.shells.into_iter().take(k).collect();
            let bound = shells.last().map(|s| s.0.clone()).unwrap_or_default();
            return Ok(ThetaPrefix { shells, bound });
        }
        bound += &step;
    }
}

// ---- Z[√2]-lattices ----

/// All vectors of the `Z[√2]`-lattice `l` with `⟨v,v⟩` exactly `target`.
pub fn short_vectors_bw(l: &BWLattice, target: &ZSqrt2) -> Result<VectorSet> {
    if !target.a.is_positive() {
        return Err(domain!("target norm {target} has non-positive rational part; no nonzero vector has it"));
    }
    let t = int_gram_to_rational(&l.trace_gram());
    if linalg::ldl_pivots(&t).is_none_or(|p| p.iter().any(|d| !d.is_positive())) {
        return Err(Error::Consistency("trace form is not positive definite".into()));
    }
    let bound = BigRational::from_integer(target.trace());
    let want = target.to_qsqrt2();
    let found = fincke_pohst(&t, &bound)?;
    let vectors: Vec<Vec<QSqrt2>> = found
        .into_par_iter()
        .filter_map(|(x, _)| {
            let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
            (l.module_norm(&xb) == want).then(|| l.module_vector(&xb))
        })
        .collect();
    Ok(VectorSet { dim: l.dim(), vectors, norm: Some(want) })
}

/// Vectors minimising the trace form. For `M_m` these are exactly the
/// vectors of norm `2^m`.
pub fn minimal_vectors_bw(l: &BWLattice) -> Result<VectorSet> {
    let t = int_gram_to_rational(&l.trace_gram());
    let diag_min = (0..t.len()).map(|i| t[i][i].clone()).min().ok_or_else(|| domain!("rank-zero lattice"))?;
    let found = fincke_pohst(&t, &diag_min)?;
    let tmin = found.iter().map(|(_, q)| q.clone()).min().expect("basis vectors are within the bound");
    let mut norms = Vec::new();
    let mut vectors = Vec::new();
    for (x, q) in found {
        if q == tmin {
            let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
            norms.push(l.module_norm(&xb));
            vectors.push(l.module_vector(&xb));
        }
    }
    let first = norms[0].clone();
    let norm = norms.iter().all(|n| *n == first).then_some(first);
    Ok(VectorSet { dim: l.dim(), vectors, norm })
}

// ---- designs ----

/// Outcome of the exact moment test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignReport {
    pub dim: usize,
    pub size: usize,
    /// `(s, S_s - c_s)` for even `s ≤ t`.
    pub discrepancies: Vec<(u32, QSqrt2)>,
    /// Odd moment sums `Σ (x·y)^s`, which vanish for antipodal sets.
    pub odd_moments: Vec<(u32, QSqrt2)>,
}

impl DesignReport {
    /// Passes at degree `s` when every even moment up to `s` matches the sphere.
    pub fn passes_through(&self, s: u32) -> bool {
        self.discrepancies.iter().filter(|(d, _)| *d <= s).all(|(_, x)| x.is_zero())
    }

    /// Largest `t` such that the set is a spherical `t`-design, as far as the
    /// computed moments reach.
    pub fn strength(&self) -> u32 {
        let mut best = 1;
        for (s, x) in &self.discrepancies {
            if x.is_zero() {
                best = s + 1;
            } else {
                break;
            }
        }
        best
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "size": self.size,
            "moments": self.discrepancies.iter().map(|(s, d)| json!({
                "t": s,
                "discrepancy": d.to_string(),
                "pass": d.is_zero(),
            })).collect::<Vec<_>>(),
            "strength": self.strength(),
        })
    }
}

/// Sphere moment `c_t = (t-1)!! / (n(n+2)⋯(n+t-2))` for even `t`.
pub fn sphere_moment(n: usize, t: u32) -> BigRational {
    assert!(t.is_multiple_of(2));
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut k = 1i64;
    while k < t as i64 {
        num *= k;
        k += 2;
    }
    for j in 0..(t / 2) as i64 {
        den *= n as i64 + 2 * j;
    }
    BigRational::new(num, den)
}

/// Exact moment test: returns `S_s − c_s` for every even `s ≤ t`, where
/// `S_s = |X|⁻² Σ_{x,y} (x·y)^s / r^{2s}`. An antipodal set is a spherical
/// `(t+1)`-design exactly when all of them vanish.
pub fn design_moment_test(x: &VectorSet, t: u32) -> Result<DesignReport> {
    if x.is_empty() {
        return Err(domain!("empty vector set"));
    }
    let norms: Vec<QSqrt2> = x.vectors.iter().map(|v| dot(v, v)).collect();
    if norms.iter().any(|n| *n != norms[0]) {
        return Err(domain!("vectors have different norms"));
    }
    let r2 = norms[0].clone();
    if r2.is_zero() {
        return Err(domain!("zero vectors cannot lie on a sphere"));
    }
    let hist = inner_product_histogram(x);
    let size = x.len();
    let n2 = QSqrt2::from(BigInt::from(size) * BigInt::from(size));
    let mut discrepancies = Vec::new();
    let mut odd_moments = Vec::new();
    for s in 1..=t {
        let mut sum = QSqrt2::zero();
        for (ip, count) in &hist {
            sum += ip.pow(s) * QSqrt2::from(BigInt::from(*count));
        }
        if s % 2 == 1 {
            odd_moments.push((s, sum));
            continue;
        }
        let moment = &sum / &(&n2 * &r2.pow(s));
        let c = QSqrt2::from(sphere_moment(x.dim, s));
        discrepancies.push((s, moment - c));
    }
    Ok(DesignReport { dim: x.dim, size, discrepancies, odd_moments })
}

fn dot(u: &[QSqrt2], v: &[QSqrt2]) -> QSqrt2 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Multiset of all `|X|²` inner products. Rational sets whose scaled
/// coordinates fit in machine words take an integer fast path.
fn inner_product_histogram(x: &VectorSet) -> Vec<(QSqrt2, u64)> {
    if let Some((ints, den)) = integer_coordinates(x) {
        let den2 = BigRational::from_integer(&den * &den);
        let local: Vec<HashMap<i128, u64>> = ints
            .par_iter()
            .map(|u| {
                let mut h = HashMap::new();
                for v in &ints {
                    let ip: i128 = u.iter().zip(v).map(|(a, b)| *a as i128 * *b as i128).sum();
                    *h.entry(ip).or_insert(0) += 1;
                }
                h
            })
            .collect();
        let mut total: BTreeMap<i128, u64> = BTreeMap::new();
        for h in local {
            for (k, c) in h {
                *total.entry(k).or_insert(0) += c;
            }
        }
        return total
            .into_iter()
            .map(|(k, c)| (QSqrt2::from(BigRational::from_integer(k.into()) / &den2), c))
            .collect();
    }
    let mut total: HashMap<QSqrt2, u64> = HashMap::new();
    for u in &x.vectors {
        for v in &x.vectors {
            *total.entry(dot(u, v)).or_insert(0) += 1;
        }
    }
    let mut out: Vec<(QSqrt2, u64)> = total.into_iter().collect();
    out.sort();
    out
}

fn integer_coordinates(x: &VectorSet) -> Option<(Vec<Vec<i64>>, BigInt)> {
    if !x.vectors.iter().flatten().all(|c| c.is_rational()) {
        return None;
    }
    let den = x.vectors.iter().flatten().fold(BigInt::one(), |acc, c| acc.lcm(c.a().denom()));
    let ints: Option<Vec<Vec<i64>>> = x
        .vectors
        .iter()
        .map(|v| v.iter().map(|c| (c.a() * BigRational::from_integer(den.clone())).to_integer().to_i64()).collect())
        .collect();
    let ints = ints?;
    // keep dot products far from i128 overflow
    let max = ints.iter().flatten().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    if max > (1 << 28) {
        return None;
    }
    Some((ints, den))
}

// ---- lattice families and kissing numbers ----

/// Which member of the Barnes-Wall family to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    L,
    LPrime,
    M,
}

impl std::str::FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(Which::L),
            "Lprime" | "lprime" | "L'" => Ok(Which::LPrime),
            "M" | "m" => Ok(Which::M),
            other => Err(Error::Parse(format!("unknown lattice {other:?}; expected L, Lprime or M"))),
        }
    }
}

/// `L_m` (rational part) or `L′_m` (irrational part divided by `√2`).
pub fn classical_lattice(m: usize, which: Which) -> Result<ZLattice> {
    let bw = balanced_bw(m)?;
    match which {
        Which::L => rational_part(&bw),
        Which::LPrime => irrational_part(&bw),
        Which::M => Err(domain!("M_m is a Z[√2]-lattice, not a Z-lattice")),
    }
}

/// Number of minimal vectors, by enumeration.
pub fn kissing_number(m: usize, which: Which) -> Result<u64> {
    let limit = match which {
        Which::L | Which::LPrime => MAX_ENUM_M,
        Which::M => 2,
    };
    if m < 1 || m > limit {
        return Err(Error::Unsupported(format!("kissing number of {which:?} supports 1 <= m <= {limit}")));
    }
    let count = match which {
        Which::M => minimal_vectors_bw(&balanced_bw(m)?)?.len(),
        _ => minimal_vectors(&classical_lattice(m, which)?)?.len(),
    };
    Ok(count as u64)
}

// ---- similarity ----

/// Result of comparing two lattices up to rotation and scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityReport {
    /// Norm scale `s` with `⟨φx, φy⟩ = s⟨x, y⟩`, if the determinants allow one.
    pub scale: Option<BigRational>,
    pub theta_a: ThetaPrefix,
    pub theta_b: ThetaPrefix,
    pub theta_agree: bool,
    /// Outcome of the isometry search, when it was run.
    pub isometry_found: Option<bool>,
}

impl SimilarityReport {
    pub fn similar(&self) -> bool {
        self.scale.is_some() && self.theta_agree && self.isometry_found != Some(false)
    }
}

/// Necessary-and-(for rank ≤ 8)-sufficient similarity test: match the
/// norm scale to the determinant ratio, compare the first `shells` theta
/// shells, and for rank ≤ `isometry_rank_limit` search for an explicit
/// similarity.
pub fn similarity(a: &ZLattice, b: &ZLattice, shells: usize, isometry_rank_limit: usize) -> Result<SimilarityReport> {
    if a.rank() != b.rank() {
        return Err(domain!("lattices of different rank are never similar"));
    }
    let n = a.rank() as u32;
    let min_a = minimum(a)?;
    let min_b = minimum(b)?;
    let s = &min_b / &min_a;
    let det_ok = num_traits::pow(s.clone(), n as usize) * a.gram_det() == b.gram_det();
    let theta_a = theta_shells(a, shells)?;
    let theta_b = theta_shells(b, shells)?;
    let theta_agree = det_ok && theta_a.rescaled(&s) == ThetaPrefix { shells: theta_b.shells.clone(), bound: theta_b.bound.clone() };
    let isometry_found = if det_ok && theta_agree && a.rank() <= isometry_rank_limit {
        Some(find_similarity(a, b, &s)?.is_some())
    } else {
        None
    };
    Ok(SimilarityReport { scale: det_ok.then_some(s), theta_a, theta_b, theta_agree, isometry_found })
}

/// Backtracking search for a linear map sending `a` onto `b` with
/// `⟨φx, φy⟩ = s⟨x, y⟩`. Returns the images of `a`'s basis as integer
/// coefficient rows over `b`'s basis.
pub fn find_similarity(a: &ZLattice, b: &ZLattice, s: &BigRational) -> Result<Option<Vec<Vec<i64>>>> {
    let n = a.rank();
    if b.rank() != n {
        return Ok(None);
    }
    // same determinant after scaling ⇒ a Gram-preserving embedding is onto
    if num_traits::pow(s.clone(), n) * a.gram_det() != b.gram_det() {
        return Ok(None);
    }
    let target: Vec<Vec<BigRational>> = a.gram().iter().map(|r| r.iter().map(|x| x * s).collect()).collect();
    let bound = (0..n).map(|i| target[i][i].clone()).max().expect("rank > 0");
    let pool = fincke_pohst(b.gram(), &bound)?;
    let coords: Vec<(Vec<i64>, Vec<BigRational>)> =
        pool.into_iter().map(|(x, _)| (x.clone(), b.vector(&x.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()))).collect();
    let by_norm: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            coords.iter().enumerate().filter(|(_, (_, v))| rdot(v, v) == target[i][i]).map(|(k, _)| k).collect()
        })
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let found = backtrack_images(&coords, &by_norm, &target, &mut chosen);
    Ok(found.then(|| chosen.iter().map(|&k| coords[k].0.clone()).collect()))
}

fn rdot(u: &[BigRational], v: &[BigRational]) -> BigRational {
    u.iter().zip(v).fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
}

fn backtrack_images(
    coords: &[(Vec<i64>, Vec<BigRational>)],
    by_norm: &[Vec<usize>],
    target: &[Vec<BigRational>],
    chosen: &mut Vec<usize>,
) -> bool {
    let k = chosen.len();
    if k == by_norm.len() {
        return true;
    }
    for &c in &by_norm[k] {
        let ok = chosen.iter().enumerate().all(|(j, &p)| rdot(&coords[c].1, &coords[p].1) == target[k][j]);
        if ok {
            chosen.push(c);
            if backtrack_images(coords, by_norm, target, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    /// Brute force over a coefficient box; the box radius comes from the
    /// dual Gram: |x_i| ≤ sqrt(bound · (G⁻¹)_ii).
    fn brute_force(l: &ZLattice, bound: &BigRational) -> Vec<Vec<i64>> {
        let inv = linalg::inverse(l.gram()).unwrap();
        let n = l.rank();
        let radius: Vec<i64> = (0..n)
            .map(|i| {
                let r = (bound * &inv[i][i]).to_f64().unwrap();
                r.sqrt().floor() as i64 + 1
            })
            .collect();
        let mut out = Vec::new();
        let mut x = vec![0i64; n];
        fn rec(i: usize, x: &mut Vec<i64>, radius: &[i64], l: &ZLattice, bound: &BigRational, out: &mut Vec<Vec<i64>>) {
            if i == x.len() {
                if x.iter().all(|&c| c == 0) {
                    return;
                }
                let v = l.vector(&x.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
                if rdot(&v, &v) <= *bound {
                    out.push(x.clone());
                }
                return;
            }
            for c in -radius[i]..=radius[i] {
                x[i] = c;
                rec(i + 1, x, radius, l, bound, out);
            }
            x[i] = 0;
        }
        rec(0, &mut x, &radius, l, bound, &mut out);
        out.sort();
        out
    }

    #[test]
    fn z2_unit_vectors() {
        let v = short_vectors(&ZLattice::standard(2), &q(1)).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.is_antipodal());
    }

    #[test]
    fn l1_short_vectors() {
        let l1 = ZLattice::from_int_rows(&[&[2, 0], &[1, 1]]);
        let v = short_vectors(&l1, &q(2)).unwrap();
        let mut got: Vec<Vec<String>> = v.vectors.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        got.sort();
        assert_eq!(got, vec![vec!["-1", "-1"], vec!["-1", "1"], vec!["1", "-1"], vec!["1", "1"]]);
    }

    #[test]
    fn fincke_pohst_agrees_with_box_search() {
        let lattices = [
            ZLattice::from_int_rows(&[&[2, 0], &[1, 1]]),
            ZLattice::from_int_rows(&[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[1, 1, 1, 1]]),
            ZLattice::from_int_rows(&[&[3, 1, 0], &[1, 4, 1], &[0, 1, 5]]),
            ZLattice::d_n(4),
        ];
        for l in &lattices {
            for b in [2, 4, 7, 9] {
                let fp: Vec<Vec<i64>> = fincke_pohst(l.gram(), &q(b)).unwrap().into_iter().map(|(x, _)| x).collect();
                assert_eq!(fp, brute_force(l, &q(b)), "bound {b}");
            }
        }
    }

    #[test]
    fn enlarging_bound_gives_superset() {
        let l = ZLattice::d_n(4);
        let small: Vec<Vec<i64>> = fincke_pohst(l.gram(), &q(2)).unwrap().into_iter().map(|x| x.0).collect();
        let large: Vec<Vec<i64>> = fincke_pohst(l.gram(), &q(6)).unwrap().into_iter().map(|x| x.0).collect();
        assert!(small.iter().all(|x| large.contains(x)));
    }

    #[test]
    fn theta_of_z1() {
        let t = theta_prefix(&ZLattice::standard(1), &q(4)).unwrap();
        assert_eq!(t.shells, vec![(q(0), 1), (q(1), 2), (q(4), 2)]);
    }

    #[test]
    fn theta_of_z2() {
        let t = theta_prefix(&ZLattice::standard(2), &q(4)).unwrap();
        assert_eq!(t.shells, vec![(q(0), 1), (q(1), 4), (q(2), 4), (q(4), 4)]);
    }

    #[test]
    fn octagon_in_m1() {
        let m1 = balanced_bw(1).unwrap();
        let v = short_vectors_bw(&m1, &ZSqrt2::new(2, 0)).unwrap();
        assert_eq!(v.len(), 8);
        assert!(v.is_antipodal());
        assert!(short_vectors_bw(&m1, &ZSqrt2::new(1, 0)).unwrap().is_empty());
        assert!(short_vectors_bw(&m1, &ZSqrt2::new(0, 1)).is_err());
        let min = minimal_vectors_bw(&m1).unwrap();
        assert_eq!(min.len(), 8);
        assert_eq!(min.norm, Some(QSqrt2::from(2)));
    }

    #[test]
    fn kissing_numbers_small() {
        assert_eq!(kissing_number(1, Which::L).unwrap(), 4);
        assert_eq!(kissing_number(2, Which::L).unwrap(), 24);
        assert_eq!(kissing_number(2, Which::LPrime).unwrap(), 24);
        assert_eq!(kissing_number(1, Which::M).unwrap(), 8);
        assert!(matches!(kissing_number(3, Which::M), Err(Error::Unsupported(_))));
        assert!(matches!(kissing_number(5, Which::L), Err(Error::Unsupported(_))));
    }

    #[test]
    fn minimal_vectors_l1_and_sqrt2_lprime1_form_octagon() {
        // L_1 has 4 minimal vectors of norm 2; √2·L′_1 = √2·Z² has 4 of norm 2.
        let l1 = classical_lattice(1, Which::L).unwrap();
        let lp1 = classical_lattice(1, Which::LPrime).unwrap();
        let a = minimal_vectors(&l1).unwrap();
        let b = minimal_vectors(&lp1).unwrap();
        assert_eq!(a.norm, Some(QSqrt2::from(2)));
        assert_eq!(b.norm, Some(QSqrt2::from(1)));
        assert_eq!(a.len() + b.len(), 8);
    }

    #[test]
    fn sphere_moments() {
        assert_eq!(sphere_moment(1, 2), q(1));
        assert_eq!(sphere_moment(8, 2), BigRational::new(1.into(), 8.into()));
        assert_eq!(sphere_moment(8, 4), BigRational::new(3.into(), 80.into()));
    }

    #[test]
    fn zero_sphere_is_design_of_every_strength() {
        let x = short_vectors(&ZLattice::standard(1), &q(1)).unwrap();
        let r = design_moment_test(&x, 10).unwrap();
        assert!(r.passes_through(10));
        assert!(r.odd_moments.iter().all(|(_, s)| s.is_zero()));
    }

    #[test]
    fn d4_roots_are_a_five_design() {
        let l2 = classical_lattice(2, Which::L).unwrap();
        let x = minimal_vectors(&l2).unwrap();
        let r = design_moment_test(&x, 6).unwrap();
        assert!(r.passes_through(4));
        assert!(!r.passes_through(6));
        assert_eq!(r.strength(), 5);
    }

    #[test]
    fn mixed_norms_rejected() {
        let x = short_vectors(&ZLattice::standard(2), &q(2)).unwrap();
        assert!(design_moment_test(&x, 2).is_err());
    }

    #[test]
    fn l1_and_lprime1_similar() {
        let l1 = classical_lattice(1, Which::L).unwrap();
        let lp1 = classical_lattice(1, Which::LPrime).unwrap();
        let r = similarity(&lp1, &l1, 4, 8).unwrap();
        assert_eq!(r.scale, Some(q(2)));
        assert!(r.similar());
    }

    #[test]
    fn non_similar_lattices_detected() {
        let a = ZLattice::standard(2);
        let b = ZLattice::from_int_rows(&[&[1, 0], &[0, 2]]);
        assert!(!similarity(&a, &b, 3, 8).unwrap().similar());
    }

    #[test]
    fn indefinite_gram_rejected() {
        let g = vec![vec![q(1), q(2)], vec![q(2), q(1)]];
        assert!(fincke_pohst(&g, &q(3)).is_err());
    }

    #[test]
    fn central_symmetry_l2() {
        let l2 = classical_lattice(2, Which::L).unwrap();
        let v = short_vectors(&l2, &q(8)).unwrap();
        assert!(v.is_antipodal());
        assert!(!v.has_duplicates());
    }
}
