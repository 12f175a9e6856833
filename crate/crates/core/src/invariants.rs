//! Polynomials in the `2^m` variables `x_v` (`v` a binary `m`-tuple, read
//! as an integer with the first entry most significant) and the invariant
//! theory of the Clifford groups acting on them.
//!
//! A group element `g` acts by substitution, `(g·p)(x) = p(g x)` with `x`
//! a column vector. With this convention `act(gh, p) = act(h, act(g, p))`.
//! Coefficients live in `Q(√2)` because substituting `h = (1/√2)[[1,1],[1,-1]]`
//! introduces `√2` even when the input is rational.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cgroup::{clifford_group, FiniteMatrixGroup, OrthogonalElement};
use crate::codes::{classify_self_dual, BinaryCode};
use crate::error::{consistency, domain, Error, Result};
use crate::linalg;
use crate::qring::QSqrt2;

/// Default ceiling on `(number of monomials) × |G|` for Reynolds projections.
pub const REYNOLDS_BUDGET: u64 = 50_000_000;

/// An exponent vector, ordered by total degree and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with `Q(√2)` coefficients in `2^m` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    m: usize,
    terms: BTreeMap<Monomial, QSqrt2>,
}

impl MultiPoly {
    pub fn zero(m: usize) -> Self {
        MultiPoly { m, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, c: QSqrt2) -> Self {
        let mut p = Self::zero(m);
        p.add_term(vec![0; 1 << m], c);
        p
    }

    /// The variable `x_v`.
    pub fn var(m: usize, v: usize) -> Self {
        let mut e = vec![0; 1 << m];
        e[v] = 1;
        Self::monomial(m, e, QSqrt2::one())
    }

    pub fn monomial(m: usize, exp: Vec<u32>, coef: QSqrt2) -> Self {
        assert_eq!(exp.len(), 1 << m, "exponent vector has the wrong length");
        let mut p = Self::zero(m);
        p.add_term(exp, coef);
        p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn num_vars(&self) -> usize {
        1 << self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &QSqrt2)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    pub fn coefficient(&self, exp: &[u32]) -> QSqrt2 {
        self.terms.get(&Monomial(exp.to_vec())).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exp: Vec<u32>, c: QSqrt2) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(exp);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Largest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn coefficient_sum(&self) -> QSqrt2 {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &QSqrt2) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        MultiPoly { m: self.m, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(self.m, QSqrt2::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `Σ_v ∂²p/∂x_v²`.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero(self.m);
        for (e, c) in &self.terms {
            for v in 0..e.0.len() {
                let k = e.0[v];
                if k >= 2 {
                    let mut f = e.0.clone();
                    f[v] -= 2;
                    out.add_term(f, c * &QSqrt2::from((k * (k - 1)) as i64));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "terms": self.terms.iter().map(|(e, c)| json!({"exp": e.0, "coef": c.to_string()})).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let m = v["m"].as_u64().ok_or_else(|| Error::Parse("missing integer field m".into()))? as usize;
        let terms = v["terms"].as_array().ok_or_else(|| Error::Parse("missing array field terms".into()))?;
        let mut p = Self::zero(m);
        for t in terms {
            let exp: Option<Vec<u32>> =
                t["exp"].as_array().map(|a| a.iter().filter_map(|x| x.as_u64().map(|x| x as u32)).collect());
            let exp = exp.filter(|e| e.len() == 1 << m).ok_or_else(|| Error::Parse("bad exponent vector".into()))?;
            let coef: QSqrt2 =
                t["coef"].as_str().ok_or_else(|| Error::Parse("coef must be a string".into()))?.parse()?;
            p.add_term(exp, coef);
        }
        Ok(p)
    }

    fn check_same_space(&self, other: &MultiPoly) {
        assert_eq!(self.m, other.m, "polynomials in different variable sets");
    }
}

impl<'a> std::ops::Add<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.check_same_space(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.0.clone(), c.clone());
        }
        out
    }
}

impl<'a> std::ops::Sub<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.check_same_space(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.0.clone(), -c);
        }
        out
    }
}

impl<'a> std::ops::Mul<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.check_same_space(rhs);
        let mut acc: HashMap<Vec<u32>, QSqrt2> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        let mut out = MultiPoly::zero(self.m);
        for (e, c) in acc {
            out.add_term(e, c);
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { format!("x{v}") } else { format!("x{v}^{k}") })
                .collect();
            let (neg, mag) = if c.sign() < 0 { (true, -c) } else { (false, c.clone()) };
            let cs = if !c.is_rational() { format!("({mag})") } else { mag.to_string() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{cs}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{cs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// The quadratic form `q_m = Σ_v x_v²`.
pub fn quadratic_form(m: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(m);
    for v in 0..1 << m {
        let mut e = vec![0; 1 << m];
        e[v] = 2;
        p.add_term(e, QSqrt2::one());
    }
    p
}

/// All exponent vectors of total degree `d` in `n` variables, in
/// increasing graded-lex order.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n - 1 {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=d {
            cur.push(k);
            rec(n, d - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// `C(n + d - 1, d)`.
pub fn monomial_count(n: usize, d: u32) -> u64 {
    let (n, d) = (n as u64, d as u64);
    (1..=d).fold(1u64, |acc, i| acc * (n - 1 + i) / i)
}

// ---- the action ----

/// A signed permutation: `x_v ↦ sign[v]·x_{perm[v]}`.
#[derive(Clone, Debug)]
struct SignedPerm {
    perm: Vec<usize>,
    neg: Vec<bool>,
}

impl SignedPerm {
    fn of(g: &OrthogonalElement) -> Option<Self> {
        let mat = g.matrix();
        let n = mat.rows();
        let mut perm = vec![0; n];
        let mut neg = vec![false; n];
        for v in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&w| !mat.get(v, w).is_zero()).collect();
            if nz.len() != 1 {
                return None;
            }
            let e = mat.get(v, nz[0]);
            if e.is_one() {
                neg[v] = false;
            } else if (-e).is_one() {
                neg[v] = true;
            } else {
                return None;
            }
            perm[v] = nz[0];
        }
        Some(SignedPerm { perm, neg })
    }

    fn act_monomial(&self, e: &[u32]) -> (Vec<u32>, bool) {
        let mut f = vec![0u32; e.len()];
        let mut negative = false;
        for (v, &k) in e.iter().enumerate() {
            f[self.perm[v]] += k;
            if self.neg[v] && k % 2 == 1 {
                negative = !negative;
            }
        }
        (f, negative)
    }

    /// Row-permuted, sign-flipped copy of `g`, i.e. the product `self·g`.
    fn left_mul_matrix(&self, g: &crate::blattice::MatQ2) -> crate::blattice::MatQ2 {
        let n = g.rows();
        let mut out = crate::blattice::MatQ2::zeros(n, n);
        for v in 0..n {
            for w in 0..n {
                let x = g.get(self.perm[v], w);
                out.set(v, w, if self.neg[v] { -x } else { x.clone() });
            }
        }
        out
    }
}

/// Cached powers of the linear forms `(g x)_v`, for substituting into
/// polynomials of bounded degree.
struct Substitution {
    powers: Vec<Vec<MultiPoly>>,
}

impl Substitution {
    fn new(g: &OrthogonalElement, max_deg: u32) -> Self {
        let m = g.m();
        let n = 1usize << m;
        let forms: Vec<MultiPoly> = (0..n)
            .map(|v| {
                let mut p = MultiPoly::zero(m);
                for w in 0..n {
                    let mut e = vec![0; n];
                    e[w] = 1;
                    p.add_term(e, g.matrix().get(v, w).clone());
                }
                p
            })
            .collect();
        let powers = forms
            .into_iter()
            .map(|f| {
                let mut ps = vec![MultiPoly::constant(m, QSqrt2::one())];
                for k in 1..=max_deg as usize {
                    let next = &ps[k - 1] * &f;
                    ps.push(next);
                }
                ps
            })
            .collect();
        Substitution { powers }
    }

    fn apply(&self, p: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(p.m);
        for (e, c) in &p.terms {
            let mut term = MultiPoly::constant(p.m, c.clone());
            for (v, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    term = &term * &self.powers[v][k as usize];
                }
            }
            out = &out + &term;
        }
        out
    }
}

/// `(g·p)(x) = p(g x)`.
pub fn act(g: &OrthogonalElement, p: &MultiPoly) -> Result<MultiPoly> {
    if g.m() != p.m {
        return Err(domain!("a {}-dimensional element cannot act on polynomials in {} variables", 1 << g.m(), p.num_vars()));
    }
    if let Some(sp) = SignedPerm::of(g) {
        let mut out = MultiPoly::zero(p.m);
        for (e, c) in &p.terms {
            let (f, neg) = sp.act_monomial(&e.0);
            out.add_term(f, if neg { -c } else { c.clone() });
        }
        return Ok(out);
    }
    Ok(Substitution::new(g, p.degree().unwrap_or(0)).apply(p))
}

/// Fixed by every listed element (generators suffice for the generated group).
pub fn is_invariant(p: &MultiPoly, gens: &[OrthogonalElement]) -> Result<bool> {
    for g in gens {
        if act(g, p)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---- weight enumerators ----

/// Complete weight enumerator of `C ⊗ GF(2^m)` in the `m`-tuple model:
/// the sum over `(c¹, …, cᵐ) ∈ Cᵐ` of `∏_i x_{(c¹_i, …, cᵐ_i)}`.
pub fn cwe_tensor(code: &BinaryCode, m: usize) -> MultiPoly {
    let n = code.n();
    let words = code.codewords();
    let nv = 1usize << m;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let total = words.len().pow(m as u32);
    for idx in 0..total {
        let mut exp = vec![0u32; nv];
        let mut sym = vec![0usize; n];
        let mut r = idx;
        for _ in 0..m {
            let w = words[r % words.len()];
            r /= words.len();
            for (i, s) in sym.iter_mut().enumerate() {
                *s = (*s << 1) | ((w >> (n - 1 - i)) & 1) as usize;
            }
        }
        for s in sym {
            exp[s] += 1;
        }
        *counts.entry(exp).or_default() += 1;
    }
    let mut p = MultiPoly::zero(m);
    for (e, c) in counts {
        p.add_term(e, QSqrt2::from(BigInt::from(c)));
    }
    p
}

// ---- Reynolds projection ----

/// A basis of the degree-`d` invariants of a group.
#[derive(Clone, Debug)]
pub struct InvariantSpace {
    pub m: usize,
    pub degree: u32,
    pub basis: Vec<MultiPoly>,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Coordinates of homogeneous polynomials of degree `d` against the
/// monomial list, as rows.
fn coefficient_rows(polys: &[MultiPoly], mons: &[Vec<u32>]) -> Vec<Vec<QSqrt2>> {
    let index: HashMap<&Vec<u32>, usize> = mons.iter().enumerate().map(|(i, e)| (e, i)).collect();
    polys
        .iter()
        .map(|p| {
            let mut row = vec![QSqrt2::zero(); mons.len()];
            for (e, c) in &p.terms {
                row[index[&e.0]] = c.clone();
            }
            row
        })
        .collect()
}

fn rows_to_polys(m: usize, rows: Vec<Vec<QSqrt2>>, mons: &[Vec<u32>]) -> Vec<MultiPoly> {
    rows.into_iter()
        .map(|r| {
            let mut p = MultiPoly::zero(m);
            for (c, e) in r.into_iter().zip(mons) {
                p.add_term(e.clone(), c);
            }
            p
        })
        .collect()
}

/// Splits `G` into its signed-permutation subgroup `H` and right coset
/// representatives `T` (so `G = ⊔_t H·t`), preferring sparse representatives.
fn monomial_factorisation(elements: &[OrthogonalElement]) -> Result<(Vec<SignedPerm>, Vec<OrthogonalElement>)> {
    let h: Vec<SignedPerm> = elements.iter().filter_map(SignedPerm::of).collect();
    let mut order: Vec<&OrthogonalElement> = elements.iter().collect();
    let nnz = |g: &OrthogonalElement| g.matrix().entries().iter().filter(|x| !x.is_zero()).count();
    order.sort_by_key(|g| nnz(g));
    let mut covered: HashSet<crate::blattice::MatQ2> = HashSet::new();
    let mut reps = Vec::new();
    for g in order {
        if covered.contains(g.matrix()) {
            continue;
        }
        for s in &h {
            covered.insert(s.left_mul_matrix(g.matrix()));
        }
        reps.push(g.clone());
    }
    if reps.len() * h.len() != elements.len() {
        return Err(consistency!("coset decomposition {} x {} does not cover {} elements", reps.len(), h.len(), elements.len()));
    }
    Ok((h, reps))
}

/// The degree-`d` invariants of `G`, by Reynolds projection of every
/// monomial followed by an exact rank computation. The average over `G` is
/// evaluated as the average over the signed-permutation subgroup `H`
/// followed by the average over right coset representatives.
pub fn invariant_space(g: &FiniteMatrixGroup, d: u32) -> Result<InvariantSpace> {
    invariant_space_with_budget(g, d, REYNOLDS_BUDGET)
}

pub fn invariant_space_with_budget(g: &FiniteMatrixGroup, d: u32, budget: u64) -> Result<InvariantSpace> {
    let elements = g
        .elements()
        .ok_or_else(|| Error::Capacity("Reynolds projection needs the explicit element list".into()))?;
    let m = g.m();
    let nv = 1usize << m;
    let work = monomial_count(nv, d).saturating_mul(elements.len() as u64);
    if work > budget {
        return Err(Error::Capacity(format!("Reynolds projection needs {work} monomial images, budget is {budget}")));
    }
    let (h, reps) = monomial_factorisation(elements)?;
    let mons = monomials(nv, d);
    // H-orbit sums of monomials; monomials with a vanishing sum are dropped
    let mut covered: HashSet<Vec<u32>> = HashSet::new();
    let mut orbit_sums: Vec<MultiPoly> = Vec::new();
    for e in &mons {
        if covered.contains(e) {
            continue;
        }
        let mut s = MultiPoly::zero(m);
        for sp in &h {
            let (f, neg) = sp.act_monomial(e);
            covered.insert(f.clone());
            s.add_term(f, if neg { -QSqrt2::one() } else { QSqrt2::one() });
        }
        if !s.is_zero() {
            orbit_sums.push(s);
        }
    }
    let subs: Vec<Substitution> = reps.iter().map(|t| Substitution::new(t, d)).collect();
    let projected: Vec<MultiPoly> = orbit_sums
        .par_iter()
        .map(|s| subs.iter().fold(MultiPoly::zero(m), |acc, t| &acc + &t.apply(s)))
        .collect();
    let rows = coefficient_rows(&projected, &mons);
    let (rref, _) = linalg::rref(&rows);
    Ok(InvariantSpace { m, degree: d, basis: rows_to_polys(m, rref, &mons) })
}

/// Dimension of the degree-`d` invariants.
pub fn invariant_dimension(g: &FiniteMatrixGroup, d: u32) -> Result<usize> {
    Ok(invariant_space(g, d)?.dim())
}

/// Dimension of the harmonic invariants of degree `d`: the kernel of the
/// Laplacian on the invariant space.
pub fn harmonic_invariant_dimension(g: &FiniteMatrixGroup, d: u32) -> Result<usize> {
    let space = invariant_space(g, d)?;
    if d < 2 {
        return Ok(space.dim());
    }
    let lap: Vec<MultiPoly> = space.basis.iter().map(MultiPoly::laplacian).collect();
    let mons = monomials(1 << g.m(), d - 2);
    let r = linalg::rank(&coefficient_rows(&lap, &mons));
    Ok(space.dim() - r)
}

/// The degree-8 harmonic invariant `cwe(H₈ ⊗ GF(2^m)) − c·q_m⁴`.
#[derive(Clone, Debug)]
pub struct HarmonicInvariant {
    pub m: usize,
    pub c: QSqrt2,
    pub poly: MultiPoly,
}

/// Finds the unique `c` making `cwe(H₈, m) − c·q_m⁴` harmonic and checks the
/// result is nonzero and invariant under `C_m`.
pub fn harmonic_invariant_degree8(m: usize) -> Result<HarmonicInvariant> {
    if !(1..=2).contains(&m) {
        return Err(Error::Unsupported("the degree-8 harmonic invariant is computed for m = 1, 2".into()));
    }
    let w = cwe_tensor(&BinaryCode::hamming8(), m);
    let q4 = quadratic_form(m).pow(4);
    let c = solve_harmonic_multiple(&w, &q4)?;
    let poly = &w - &q4.scale(&c);
    if poly.is_zero() {
        return Err(consistency!("harmonic combination vanishes identically"));
    }
    if !poly.laplacian().is_zero() {
        return Err(consistency!("combination is not harmonic"));
    }
    let gens = crate::cgroup::standard_generators(m)?;
    if !is_invariant(&poly, &gens)? {
        return Err(consistency!("harmonic combination is not invariant"));
    }
    Ok(HarmonicInvariant { m, c, poly })
}

/// The unique `c` with `Δw = c·Δq`, or an error when none or many exist.
pub fn solve_harmonic_multiple(w: &MultiPoly, q: &MultiPoly) -> Result<QSqrt2> {
    let lw = w.laplacian();
    let lq = q.laplacian();
    let (e, cq) = lq.terms().next().map(|(e, c)| (e.to_vec(), c.clone())).ok_or_else(|| {
        consistency!("Laplacian of the comparison polynomial vanishes, so c is not unique")
    })?;
    let c = lw.coefficient(&e) / cq;
    if lw != lq.scale(&c) {
        return Err(consistency!("no multiple of the comparison polynomial has the same Laplacian"));
    }
    Ok(c)
}

// ---- Runge ----

/// Outcome of comparing code enumerators with the invariant ring in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RungeReport {
    pub m: usize,
    pub length: usize,
    pub classes: usize,
    pub span_rank: usize,
    pub invariant_dim: usize,
    pub spanning: bool,
    pub basis_flag: bool,
    /// `m ≥ k − 1`, where the enumerators should form a basis.
    pub basis_expected: bool,
    /// Every enumerator is invariant under the generators of `C_m`.
    pub all_invariant: bool,
    /// Relabelling coordinates left every enumerator unchanged.
    pub relabelling_stable: bool,
}

impl RungeReport {
    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "length": self.length,
            "classes": self.classes,
            "span_rank": self.span_rank,
            "invariant_dim": self.invariant_dim,
            "spanning": self.spanning,
            "basis_flag": self.basis_flag,
            "basis_expected": self.basis_expected,
            "all_invariant": self.all_invariant,
            "relabelling_stable": self.relabelling_stable,
        })
    }
}

/// Compares the span of `cwe(C ⊗ GF(2^m))` over the self-dual codes `C`
/// of length `2k` with the degree-`2k` invariants of `C_m`.
pub fn runge_span_check(m: usize, k: usize) -> Result<RungeReport> {
    if !(1..=2).contains(&m) {
        return Err(Error::Unsupported("Runge checks need the explicit group, available for m = 1, 2".into()));
    }
    if k == 0 || 2 * k > crate::codes::MAX_CLASSIFY_DEFAULT {
        return Err(domain!("code length 2k must be in 2..={}", crate::codes::MAX_CLASSIFY_DEFAULT));
    }
    let n = 2 * k;
    let classes = classify_self_dual(n)?;
    let group = clifford_group(m)?;
    let gens = group.generators().to_vec();
    let cwes: Vec<MultiPoly> = classes.classes.iter().map(|c| cwe_tensor(&c.representative, m)).collect();
    let mut all_invariant = true;
    for w in &cwes {
        all_invariant &= is_invariant(w, &gens)?;
    }
    // fixed relabellings: reversal and a rotation by one
    let reversal: Vec<usize> = (0..n).rev().collect();
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let relabelling_stable = classes.classes.iter().zip(&cwes).all(|(c, w)| {
        [&reversal, &rotation].iter().all(|p| cwe_tensor(&c.representative.permute(p), m) == *w)
    });
    let mons = monomials(1 << m, n as u32);
    let span_rank = linalg::rank(&coefficient_rows(&cwes, &mons));
    let invariant_dim = invariant_dimension(&group, n as u32)?;
    let spanning = span_rank == invariant_dim;
    Ok(RungeReport {
        m,
        length: n,
        classes: cwes.len(),
        span_rank,
        invariant_dim,
        spanning,
        basis_flag: spanning && cwes.len() == invariant_dim,
        basis_expected: m + 1 >= k,
        all_invariant,
        relabelling_stable,
    })
}

/// `Δ(q^k) = 2k(2k + N − 2)·q^{k−1}` in `N` variables.
pub fn laplacian_of_quadratic_power(n_vars: usize, k: u32) -> BigRational {
    let k = BigInt::from(k);
    let n = BigInt::from(n_vars);
    BigRational::from_integer(BigInt::from(2) * &k * (BigInt::from(2) * &k + n - 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cgroup::{close_group, molien_series, standard_generators};
    use proptest::prelude::*;

    fn q(s: &str) -> QSqrt2 {
        s.parse().unwrap()
    }

    fn mono(m: usize, e: &[u32], c: &str) -> MultiPoly {
        MultiPoly::monomial(m, e.to_vec(), q(c))
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(4, 12).len(), 455);
        assert_eq!(monomial_count(4, 12), 455);
        assert_eq!(monomial_count(2, 8), 9);
        let ms = monomials(3, 2);
        assert!(ms.windows(2).all(|w| Monomial(w[0].clone()) < Monomial(w[1].clone())));
    }

    #[test]
    fn hadamard_on_difference_of_squares() {
        let h = &standard_generators(1).unwrap()[0];
        let p = &mono(1, &[2, 0], "1") - &mono(1, &[0, 2], "1");
        assert_eq!(act(h, &p).unwrap(), mono(1, &[1, 1], "2"));
    }

    #[test]
    fn identity_and_quadratic_form() {
        let p = &mono(2, &[1, 2, 0, 3], "1/3") + &mono(2, &[0, 0, 6, 0], "√2");
        assert_eq!(act(&OrthogonalElement::identity(2), &p).unwrap(), p);
        for m in 1..=3 {
            for g in standard_generators(m).unwrap() {
                assert_eq!(act(&g, &quadratic_form(m)).unwrap(), quadratic_form(m));
                assert!(is_invariant(&quadratic_form(m).pow(4), std::slice::from_ref(&g)).unwrap());
            }
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let g = OrthogonalElement::identity(2);
        assert!(matches!(act(&g, &quadratic_form(1)), Err(Error::Domain(_))));
    }

    #[test]
    fn cwe_examples() {
        assert_eq!(cwe_tensor(&BinaryCode::i2(), 1), quadratic_form(1));
        assert_eq!(cwe_tensor(&BinaryCode::i2(), 2), quadratic_form(2));
        let h = cwe_tensor(&BinaryCode::hamming8(), 1);
        let expected = &(&mono(1, &[8, 0], "1") + &mono(1, &[4, 4], "14")) + &mono(1, &[0, 8], "1");
        assert_eq!(h, expected);
        let h2 = cwe_tensor(&BinaryCode::hamming8(), 2);
        assert_eq!(h2.homogeneous_degree(), Some(8));
        assert_eq!(h2.coefficient_sum(), QSqrt2::from(256));
    }

    #[test]
    fn invariance_of_enumerators() {
        let g1 = standard_generators(1).unwrap();
        let g2 = standard_generators(2).unwrap();
        assert!(is_invariant(&cwe_tensor(&BinaryCode::hamming8(), 2), &g2).unwrap());
        assert!(is_invariant(&cwe_tensor(&BinaryCode::hamming8(), 1), &g1).unwrap());
        assert!(!is_invariant(&mono(1, &[8, 0], "1"), &g1).unwrap());
    }

    #[test]
    fn gleason_group_fixes_hamming_enumerator() {
        let c1 = close_group(&standard_generators(1).unwrap()).unwrap();
        let w = cwe_tensor(&BinaryCode::hamming8(), 1);
        assert_eq!(c1.elements().unwrap().len(), 16);
        for g in c1.elements().unwrap() {
            assert_eq!(act(g, &w).unwrap(), w);
        }
    }

    #[test]
    fn laplacian_examples() {
        for m in 1..=2 {
            assert_eq!(quadratic_form(m).laplacian(), MultiPoly::constant(m, QSqrt2::from(2 << m)));
        }
        assert_eq!(mono(1, &[4, 0], "1").laplacian(), mono(1, &[2, 0], "12"));
        for (m, k) in [(1usize, 4u32), (2, 4), (2, 3)] {
            let q = quadratic_form(m);
            let lhs = q.pow(k).laplacian();
            let rhs = q.pow(k - 1).scale(&QSqrt2::from(laplacian_of_quadratic_power(1 << m, k)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn harmonic_constant_m1() {
        let h = harmonic_invariant_degree8(1).unwrap();
        assert_eq!(h.c, q("7/8"));
        assert!(h.poly.laplacian().is_zero());
    }

    #[test]
    fn harmonic_m2() {
        let h = harmonic_invariant_degree8(2).unwrap();
        assert!(h.c.is_rational());
        assert!(h.poly.laplacian().is_zero());
    }

    #[test]
    fn invariant_dimensions_small() {
        let c1 = close_group(&standard_generators(1).unwrap()).unwrap();
        assert_eq!(invariant_dimension(&c1, 8).unwrap(), 2);
        assert_eq!(invariant_dimension(&c1, 2).unwrap(), 1);
        let sp = invariant_space(&c1, 2).unwrap();
        assert_eq!(sp.basis[0].scale(&sp.basis[0].coefficient(&[2, 0]).invert().unwrap()), quadratic_form(1));
        let c2 = close_group(&standard_generators(2).unwrap()).unwrap();
        assert_eq!(invariant_dimension(&c2, 4).unwrap(), 1);
    }

    #[test]
    fn reynolds_matches_molien_m1() {
        let c1 = close_group(&standard_generators(1).unwrap()).unwrap();
        let mol = molien_series(&c1, 12).unwrap();
        for d in 0..=12u32 {
            assert_eq!(BigRational::from_integer(invariant_dimension(&c1, d).unwrap().into()), mol[d as usize], "degree {d}");
        }
    }

    #[test]
    fn harmonic_dimensions_m1() {
        let c1 = close_group(&standard_generators(1).unwrap()).unwrap();
        assert_eq!(harmonic_invariant_dimension(&c1, 8).unwrap(), 1);
        assert_eq!(harmonic_invariant_dimension(&c1, 10).unwrap(), 0);
        for d in [2, 4, 6] {
            assert_eq!(harmonic_invariant_dimension(&c1, d).unwrap(), 0);
        }
    }

    #[test]
    fn runge_small_cases() {
        let r = runge_span_check(1, 4).unwrap();
        assert_eq!((r.span_rank, r.invariant_dim, r.spanning), (2, 2, true));
        let r = runge_span_check(2, 2).unwrap();
        assert_eq!((r.span_rank, r.invariant_dim, r.basis_flag, r.basis_expected), (1, 1, true, true));
        let r = runge_span_check(1, 1).unwrap();
        assert_eq!((r.span_rank, r.invariant_dim), (1, 1));
        assert!(r.all_invariant && r.relabelling_stable);
    }

    #[test]
    fn json_round_trip() {
        let p = &mono(2, &[1, 2, 0, 3], "1/3") + &mono(2, &[0, 0, 6, 0], "1-√2");
        assert_eq!(MultiPoly::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(p.to_json()["terms"][0]["coef"], "1-√2");
    }

    #[test]
    fn display() {
        let p = &mono(1, &[2, 0], "1") - &mono(1, &[1, 1], "2");
        assert_eq!(p.to_string(), "x0^2 - 2*x0*x1");
    }

    fn sparse_poly(m: usize) -> impl Strategy<Value = MultiPoly> {
        let nv = 1usize << m;
        proptest::collection::vec((proptest::collection::vec(0u32..3, nv), -3i64..4), 1..4).prop_map(move |ts| {
            let mut p = MultiPoly::zero(m);
            for (e, c) in ts {
                p.add_term(e, QSqrt2::from(c));
            }
            p
        })
    }

    fn c2() -> &'static FiniteMatrixGroup {
        static C2: std::sync::OnceLock<FiniteMatrixGroup> = std::sync::OnceLock::new();
        C2.get_or_init(|| close_group(&standard_generators(2).unwrap()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn action_is_a_right_action(p in sparse_poly(2), i in 0usize..2304, j in 0usize..2304) {
            let el = c2().elements().unwrap();
            let (g, h) = (&el[i], &el[j]);
            prop_assert_eq!(act(&g.compose(h), &p).unwrap(), act(h, &act(g, &p).unwrap()).unwrap());
        }

        #[test]
        fn laplacian_commutes_with_action(p in sparse_poly(2), i in 0usize..2304) {
            let g = &c2().elements().unwrap()[i];
            prop_assert_eq!(act(g, &p).unwrap().laplacian(), act(g, &p.laplacian()).unwrap());
        }
    }
}
