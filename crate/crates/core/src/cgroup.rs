//! The Clifford groups `C_m = Aut(M_m)`: exact orthogonal matrices over
//! `Q(√2)` that map the balanced Barnes-Wall lattice onto itself.
//!
//! Two independent routes produce the group. [`standard_generators`] lists
//! a small explicit generating set whose closure ([`close_group`]) or
//! permutation image on minimal vectors ([`order_via_permutation`]) gives the
//! order. [`aut_backtrack`] finds every automorphism directly from short
//! vectors and serves as the oracle for the generator model.

use std::collections::{HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::blattice::{balanced_bw, kronecker, kronecker_power, BWLattice, MatQ2};
use crate::enumerate::{minimal_vectors_bw, short_vectors_bw, VectorSet};
use crate::error::{consistency, domain, Error, Result};
use crate::perm::{Perm, StabChain};
use crate::qring::{rational_to_string, QSqrt2};

/// Default ceiling on the number of explicitly listed group elements.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// An orthogonal `2^m × 2^m` matrix preserving `M_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthogonalElement {
    m: usize,
    matrix: MatQ2,
}

/// `M_m`, with `M_0 = Z[√2]` in dimension one.
fn reference_lattice(m: usize) -> Result<BWLattice> {
    if m == 0 {
        BWLattice::from_basis(MatQ2::identity(1))
    } else {
        balanced_bw(m)
    }
}

impl OrthogonalElement {
    /// Checks orthogonality and preservation of `M_m`.
    pub fn new(m: usize, matrix: MatQ2) -> Result<Self> {
        let l = reference_lattice(m)?;
        if !preserves_lattice(&matrix, &l)? {
            return Err(domain!("matrix does not preserve M_{m}"));
        }
        Ok(OrthogonalElement { m, matrix })
    }

    pub fn identity(m: usize) -> Self {
        OrthogonalElement { m, matrix: MatQ2::identity(1 << m) }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &MatQ2 {
        &self.matrix
    }

    /// Product `self · other` as matrices.
    pub fn compose(&self, other: &OrthogonalElement) -> OrthogonalElement {
        OrthogonalElement { m: self.m, matrix: &self.matrix * &other.matrix }
    }

    /// The inverse, which for an orthogonal matrix is its transpose.
    pub fn inverse(&self) -> OrthogonalElement {
        OrthogonalElement { m: self.m, matrix: self.matrix.transpose() }
    }

    /// `g·v` for a column vector `v`.
    pub fn apply(&self, v: &[QSqrt2]) -> Vec<QSqrt2> {
        self.matrix.apply(v)
    }

    /// Nonzero entries all on distinct rows and columns.
    pub fn is_monomial(&self) -> bool {
        let n = self.matrix.rows();
        (0..n).all(|i| self.matrix.row(i).iter().filter(|x| !x.is_zero()).count() == 1)
    }

    fn unchecked(m: usize, matrix: MatQ2) -> Self {
        OrthogonalElement { m, matrix }
    }
}

/// Whether the orthogonal matrix `g` maps `l` onto itself: the coefficient
/// matrix `X` with `B·gᵀ = X·B` must have entries in `Z[√2]` and a unit
/// determinant.
pub fn preserves_lattice(g: &MatQ2, l: &BWLattice) -> Result<bool> {
    if !g.is_square() || g.rows() != l.dim() {
        return Err(domain!("a {}x{} matrix cannot act on a rank-{} lattice", g.rows(), g.cols(), l.dim()));
    }
    if !g.is_orthogonal() {
        return Err(domain!("matrix is not orthogonal"));
    }
    let images = l.basis() * &g.transpose();
    let x = &images * &l.basis().inverse()?;
    if !x.is_integral() {
        return Ok(false);
    }
    let d = x.det()?;
    Ok(d.to_zsqrt2().is_some_and(|z| z.is_unit()))
}

fn hadamard2() -> MatQ2 {
    let s = QSqrt2::inv_sqrt2();
    MatQ2::from_rows(vec![vec![s.clone(), s.clone()], vec![s.clone(), -s]]).expect("2x2")
}

/// Permutation matrix exchanging tensor factors `j` and `j+1` (factor 0 is
/// the most significant bit of the index).
fn factor_swap(m: usize, j: usize) -> MatQ2 {
    let n = 1usize << m;
    let hi = m - 1 - j;
    let lo = hi - 1;
    let mut p = MatQ2::zeros(n, n);
    for i in 0..n {
        let (bh, bl) = ((i >> hi) & 1, (i >> lo) & 1);
        let k = (i & !(1 << hi) & !(1 << lo)) | (bl << hi) | (bh << lo);
        p.set(k, i, QSqrt2::one());
    }
    p
}

/// The explicit generators `h⊗I`, `diag(1,−1)⊗I`, the adjacent tensor-factor
/// swaps, and `diag(1,1,1,−1)⊗I` (for `m ≥ 2`). Each is checked against `M_m`.
pub fn standard_generators(m: usize) -> Result<Vec<OrthogonalElement>> {
    if m < 1 {
        return Err(domain!("standard generators need m >= 1"));
    }
    if m > 3 {
        return Err(Error::Unsupported("standard generators are provided for m <= 3".into()));
    }
    let rest = |k: usize| kronecker_power(&MatQ2::identity(2), k);
    let mut mats = vec![
        kronecker(&hadamard2(), &rest(m - 1)),
        kronecker(&MatQ2::from_ints(&[&[1, 0], &[0, -1]]), &rest(m - 1)),
    ];
    for j in 0..m.saturating_sub(1) {
        mats.push(factor_swap(m, j));
    }
    if m >= 2 {
        let cz = MatQ2::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
        mats.push(kronecker(&cz, &rest(m - 2)));
    }
    mats.into_iter()
        .map(|g| {
            OrthogonalElement::new(m, g)
                .map_err(|e| consistency!("standard generator fails to preserve M_{m}: {e}"))
        })
        .collect()
}

/// A finite group of orthogonal matrices, together with whatever has been
/// computed about it.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    m: usize,
    generators: Vec<OrthogonalElement>,
    order: BigUint,
    elements: Option<Vec<OrthogonalElement>>,
    domain: Option<VectorSet>,
    chain: Option<StabChain>,
}

impl FiniteMatrixGroup {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn generators(&self) -> &[OrthogonalElement] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// The explicit element list, when the group was closed.
    pub fn elements(&self) -> Option<&[OrthogonalElement]> {
        self.elements.as_deref()
    }

    /// The vectors permuted by the group, when the order came from a
    /// permutation action.
    pub fn domain(&self) -> Option<&VectorSet> {
        self.domain.as_ref()
    }

    pub fn stabilizer_chain(&self) -> Option<&StabChain> {
        self.chain.as_ref()
    }

    /// True when every element of `other` lies in `self` and the orders agree.
    pub fn same_elements(&self, other: &FiniteMatrixGroup) -> bool {
        match (&self.elements, &other.elements) {
            (Some(a), Some(b)) => {
                let sa: HashSet<&MatQ2> = a.iter().map(|g| &g.matrix).collect();
                a.len() == b.len() && b.iter().all(|g| sa.contains(&g.matrix))
            }
            _ => false,
        }
    }

    pub fn to_json(&self, molien: Option<&[BigRational]>) -> Value {
        json!({
            "m": self.m,
            "order": self.order.to_string(),
            "generators": self.generators.iter().map(|g| g.matrix.to_string_grid()).collect::<Vec<_>>(),
            "molien": molien.map(|c| c.iter().map(rational_to_string).collect::<Vec<_>>()),
        })
    }
}

/// Explicit closure of the generated group, with the default element cap.
pub fn close_group(gens: &[OrthogonalElement]) -> Result<FiniteMatrixGroup> {
    close_group_capped(gens, DEFAULT_ELEMENT_CAP)
}

/// Breadth-first closure under right multiplication by generators.
pub fn close_group_capped(gens: &[OrthogonalElement], cap: usize) -> Result<FiniteMatrixGroup> {
    let first = gens.first().ok_or_else(|| domain!("closure needs at least one generator"))?;
    let m = first.m;
    if gens.iter().any(|g| g.m != m) {
        return Err(domain!("generators act in different dimensions"));
    }
    let id = MatQ2::identity(1 << m);
    let mut seen: HashSet<MatQ2> = HashSet::new();
    seen.insert(id.clone());
    let mut elements = vec![id];
    let mut i = 0;
    while i < elements.len() {
        let x = elements[i].clone();
        for g in gens {
            let y = &x * &g.matrix;
            if !seen.contains(&y) {
                if elements.len() >= cap {
                    return Err(Error::Capacity(format!(
                        "group has more than {cap} elements; use the permutation-action order instead"
                    )));
                }
                seen.insert(y.clone());
                elements.push(y);
            }
        }
        i += 1;
    }
    let order = BigUint::from(elements.len());
    Ok(FiniteMatrixGroup {
        m,
        generators: gens.to_vec(),
        order,
        elements: Some(elements.into_iter().map(|x| OrthogonalElement::unchecked(m, x)).collect()),
        domain: None,
        chain: None,
    })
}

/// The permutations induced by `gens` on the vectors of `domain`.
pub fn permutation_image(gens: &[OrthogonalElement], domain: &VectorSet) -> Result<Vec<Perm>> {
    let index: HashMap<&Vec<QSqrt2>, u32> =
        domain.vectors.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
    if index.len() != domain.len() {
        return Err(domain!("permutation domain has repeated vectors"));
    }
    gens.iter()
        .map(|g| {
            let images: Option<Vec<u32>> =
                domain.vectors.iter().map(|v| index.get(&g.apply(v)).copied()).collect();
            images
                .and_then(Perm::from_images)
                .ok_or_else(|| domain!("a generator does not permute the domain"))
        })
        .collect()
}

/// Group order through a stabilizer chain of the permutation action on
/// `domain`, which must span the ambient space so the action is faithful.
pub fn order_via_permutation(gens: &[OrthogonalElement], domain: &VectorSet) -> Result<BigUint> {
    Ok(permutation_group(gens, domain)?.order)
}

/// Like [`order_via_permutation`] but keeps the chain and domain.
pub fn permutation_group(gens: &[OrthogonalElement], domain: &VectorSet) -> Result<FiniteMatrixGroup> {
    let first = gens.first().ok_or_else(|| domain!("need at least one generator"))?;
    if domain.span_rank() != domain.dim {
        return Err(consistency!("domain spans rank {} < {}; the action would not be faithful", domain.span_rank(), domain.dim));
    }
    let perms = permutation_image(gens, domain)?;
    let chain = StabChain::new(domain.len(), &perms);
    Ok(FiniteMatrixGroup {
        m: first.m,
        generators: gens.to_vec(),
        order: chain.order(),
        elements: None,
        domain: Some(domain.clone()),
        chain: Some(chain),
    })
}

/// `C_m` from the standard generators: explicit elements for `m ≤ 2`, the
/// permutation route on minimal vectors for `m = 3`.
pub fn clifford_group(m: usize) -> Result<FiniteMatrixGroup> {
    let gens = standard_generators(m)?;
    if m <= 2 {
        close_group(&gens)
    } else {
        let domain = minimal_vectors_bw(&balanced_bw(m)?)?;
        permutation_group(&gens, &domain)
    }
}

/// Coefficients `1, c₁, …, c_n` of `det(I − t·g)`, by Faddeev–LeVerrier.
pub fn det_one_minus_tg(g: &MatQ2) -> Vec<QSqrt2> {
    let n = g.rows();
    let mut coeffs = vec![QSqrt2::one()];
    let mut mk = MatQ2::identity(n);
    for k in 1..=n {
        let gm = g * &mk;
        let tr: QSqrt2 = (0..n).map(|i| gm.get(i, i).clone()).sum();
        let ck = -tr * QSqrt2::from(BigRational::new(BigInt::one(), BigInt::from(k)));
        mk = gm;
        for i in 0..n {
            let d = mk.get(i, i) + &ck;
            mk.set(i, i, d);
        }
        coeffs.push(ck);
    }
    coeffs
}

/// First `len` coefficients of `1/p(t)`, for `p(0) = 1`.
fn series_inverse(p: &[QSqrt2], len: usize) -> Vec<QSqrt2> {
    let mut q: Vec<QSqrt2> = Vec::with_capacity(len);
    for k in 0..len {
        if k == 0 {
            q.push(QSqrt2::one());
            continue;
        }
        let mut acc = QSqrt2::zero();
        for j in 1..=k.min(p.len() - 1) {
            if !p[j].is_zero() {
                acc -= &(&p[j] * &q[k - j]);
            }
        }
        q.push(acc);
    }
    q
}

/// Coefficients `c₀ … c_{max_degree}` of the Molien series
/// `(1/|G|) Σ_g 1/det(I − t·g)`. Elements with the same characteristic
/// polynomial are expanded once.
pub fn molien_series(g: &FiniteMatrixGroup, max_degree: usize) -> Result<Vec<BigRational>> {
    let elements = g
        .elements()
        .ok_or_else(|| Error::Capacity("Molien series needs the explicit element list".into()))?;
    let mut classes: HashMap<Vec<QSqrt2>, u64> = HashMap::new();
    for e in elements {
        *classes.entry(det_one_minus_tg(&e.matrix)).or_default() += 1;
    }
    let mut total = vec![QSqrt2::zero(); max_degree + 1];
    for (p, count) in &classes {
        let w = QSqrt2::from(*count as i64);
        for (t, c) in total.iter_mut().zip(series_inverse(p, max_degree + 1)) {
            *t += &w * &c;
        }
    }
    let order = BigRational::from_integer(BigInt::from(g.order().clone()));
    total
        .into_iter()
        .enumerate()
        .map(|(d, c)| {
            if !c.is_rational() {
                return Err(consistency!("Molien coefficient {d} has an irrational part"));
            }
            let c = c.a() / &order;
            if !c.is_integer() || c.is_negative() {
                return Err(consistency!("Molien coefficient {d} = {} is not a non-negative integer", rational_to_string(&c)));
            }
            Ok(c)
        })
        .collect()
}

/// Largest `m` accepted by [`aut_backtrack`].
pub const MAX_BACKTRACK_M: usize = 2;

/// Every automorphism of `l`, found by choosing images of the basis rows
/// among lattice vectors of the same norm with matching inner products.
pub fn aut_backtrack(l: &BWLattice) -> Result<FiniteMatrixGroup> {
    if l.m() > MAX_BACKTRACK_M {
        return Err(Error::Unsupported(format!("automorphism backtracking is limited to m <= {MAX_BACKTRACK_M}")));
    }
    let n = l.dim();
    let gram = l.gram();
    let mut candidates: Vec<Vec<Vec<QSqrt2>>> = Vec::with_capacity(n);
    for i in 0..n {
        let target = gram.get(i, i).to_zsqrt2().ok_or_else(|| domain!("basis norms must lie in Z[√2]"))?;
        candidates.push(short_vectors_bw(l, &target)?.vectors);
    }
    let dot = |u: &[QSqrt2], v: &[QSqrt2]| -> QSqrt2 { u.iter().zip(v).map(|(a, b)| a * b).sum() };
    let binv = l.basis().inverse()?;
    let mut found: Vec<OrthogonalElement> = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    // iterative DFS over candidate indices
    let mut next = vec![0usize; n + 1];
    let mut depth = 0usize;
    loop {
        if depth == n {
            let rows: Vec<Vec<QSqrt2>> = chosen.iter().enumerate().map(|(i, &c)| candidates[i][c].clone()).collect();
            let t = &binv * &MatQ2::from_rows(rows)?;
            let g = t.transpose();
            if preserves_lattice(&g, l)? {
                found.push(OrthogonalElement::unchecked(l.m(), g));
            }
            depth -= 1;
            chosen.pop();
            continue;
        }
        let k = next[depth];
        if k >= candidates[depth].len() {
            if depth == 0 {
                break;
            }
            next[depth] = 0;
            depth -= 1;
            chosen.pop();
            continue;
        }
        next[depth] = k + 1;
        let v = &candidates[depth][k];
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(j, &c)| dot(v, &candidates[j][c]) == *gram.get(depth, j));
        if ok {
            chosen.push(k);
            depth += 1;
        }
    }
    let generators = small_generating_set(&found)?;
    let order = BigUint::from(found.len());
    Ok(FiniteMatrixGroup { m: l.m(), generators, order, elements: Some(found), domain: None, chain: None })
}

/// Greedy generating set: add any element not yet in the closure.
fn small_generating_set(elements: &[OrthogonalElement]) -> Result<Vec<OrthogonalElement>> {
    let mut gens: Vec<OrthogonalElement> = Vec::new();
    let mut span: HashSet<MatQ2> = HashSet::new();
    if let Some(e) = elements.first() {
        span.insert(MatQ2::identity(e.matrix.rows()));
    }
    for e in elements {
        if span.contains(&e.matrix) {
            continue;
        }
        gens.push(e.clone());
        let closed = close_group(&gens)?;
        span = closed.elements.expect("closed").into_iter().map(|x| x.matrix).collect();
        if span.len() == elements.len() {
            break;
        }
    }
    if gens.is_empty() {
        if let Some(e) = elements.first() {
            gens.push(OrthogonalElement::identity(e.m));
        }
    }
    Ok(gens)
}

/// `|G|` as a machine integer, when it fits.
pub fn order_u64(g: &FiniteMatrixGroup) -> Option<u64> {
    g.order.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn q(s: &str) -> QSqrt2 {
        s.parse().unwrap()
    }

    #[test]
    fn preservation_examples() {
        let m1 = balanced_bw(1).unwrap();
        assert!(preserves_lattice(&MatQ2::from_ints(&[&[1, 0], &[0, -1]]), &m1).unwrap());
        assert!(preserves_lattice(&hadamard2(), &m1).unwrap());
        // (√2,0) ↦ (1,1) under h
        assert_eq!(hadamard2().apply(&[q("√2"), q("0")]), vec![q("1"), q("1")]);
        // a rotation by 30° has entries outside Q(√2), so the closest we can
        // offer is a non-orthogonal approximation, which is rejected
        let approx = MatQ2::parse(&[&["13/15", "-1/2"], &["1/2", "13/15"]]).unwrap();
        assert!(matches!(preserves_lattice(&approx, &m1), Err(Error::Domain(_))));
        // an orthogonal rational rotation that does not preserve M_1
        let r = MatQ2::parse(&[&["3/5", "-4/5"], &["4/5", "3/5"]]).unwrap();
        assert!(!preserves_lattice(&r, &m1).unwrap());
    }

    #[test]
    fn standard_generator_counts() {
        assert_eq!(standard_generators(1).unwrap().len(), 2);
        assert_eq!(standard_generators(2).unwrap().len(), 4);
        assert_eq!(standard_generators(3).unwrap().len(), 5);
        assert!(standard_generators(0).is_err());
        assert!(matches!(standard_generators(4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn factor_swap_exchanges_tensor_factors() {
        let a = MatQ2::parse(&[&["1", "2"], &["3", "√2"]]).unwrap();
        let b = MatQ2::parse(&[&["0", "1"], &["-1", "5"]]).unwrap();
        let p = factor_swap(2, 0);
        assert_eq!(&(&p * &kronecker(&a, &b)) * &p.transpose(), kronecker(&b, &a));
    }

    #[test]
    fn c1_has_order_16() {
        let g = close_group(&standard_generators(1).unwrap()).unwrap();
        assert_eq!(*g.order(), BigUint::from(16u32));
        let octagon = minimal_vectors_bw(&balanced_bw(1).unwrap()).unwrap();
        assert_eq!(octagon.len(), 8);
        assert_eq!(order_via_permutation(&standard_generators(1).unwrap(), &octagon).unwrap(), BigUint::from(16u32));
    }

    #[test]
    fn single_reflection_has_order_two() {
        let z = OrthogonalElement::new(1, MatQ2::from_ints(&[&[1, 0], &[0, -1]])).unwrap();
        assert_eq!(*close_group(&[z]).unwrap().order(), BigUint::from(2u32));
    }

    #[test]
    fn identity_generators_give_trivial_group() {
        let octagon = minimal_vectors_bw(&balanced_bw(1).unwrap()).unwrap();
        assert_eq!(order_via_permutation(&[OrthogonalElement::identity(1)], &octagon).unwrap(), BigUint::one());
    }

    #[test]
    fn capacity_error() {
        let gens = standard_generators(2).unwrap();
        assert!(matches!(close_group_capped(&gens, 100), Err(Error::Capacity(_))));
    }

    #[test]
    fn non_spanning_domain_rejected() {
        let z = OrthogonalElement::new(1, MatQ2::from_ints(&[&[1, 0], &[0, -1]])).unwrap();
        let d = VectorSet { dim: 2, vectors: vec![vec![q("1"), q("0")], vec![q("-1"), q("0")]], norm: None };
        assert!(matches!(order_via_permutation(&[z], &d), Err(Error::Consistency(_))));
    }

    #[test]
    fn c1_backtrack_equals_closure() {
        let a = aut_backtrack(&balanced_bw(1).unwrap()).unwrap();
        let c = close_group(&standard_generators(1).unwrap()).unwrap();
        assert_eq!(*a.order(), BigUint::from(16u32));
        assert!(a.same_elements(&c));
    }

    #[test]
    fn square_lattice_has_dihedral_automorphisms() {
        let z2 = BWLattice::from_basis(MatQ2::identity(2)).unwrap();
        assert_eq!(*aut_backtrack(&z2).unwrap().order(), BigUint::from(8u32));
    }

    #[test]
    fn c2_three_routes_agree() {
        let gens = standard_generators(2).unwrap();
        let closed = close_group(&gens).unwrap();
        let back = aut_backtrack(&balanced_bw(2).unwrap()).unwrap();
        let dom = minimal_vectors_bw(&balanced_bw(2).unwrap()).unwrap();
        let perm = order_via_permutation(&gens, &dom).unwrap();
        assert_eq!(*closed.order(), BigUint::from(2304u32));
        assert!(closed.same_elements(&back));
        assert_eq!(perm, *closed.order());
    }

    #[test]
    fn sampled_group_axioms_m2() {
        let g = close_group(&standard_generators(2).unwrap()).unwrap();
        let el = g.elements().unwrap();
        let set: HashSet<&MatQ2> = el.iter().map(|e| e.matrix()).collect();
        let m2 = balanced_bw(2).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let a = &el[rng.gen_range(0..el.len())];
            let b = &el[rng.gen_range(0..el.len())];
            let ab = a.compose(b);
            assert!(set.contains(ab.matrix()));
            assert!(set.contains(a.inverse().matrix()));
            assert!(ab.matrix().is_orthogonal());
            assert!(preserves_lattice(ab.matrix(), &m2).unwrap());
        }
    }

    #[test]
    fn faddeev_leverrier_small_cases() {
        let z = MatQ2::from_ints(&[&[1, 0], &[0, -1]]);
        assert_eq!(det_one_minus_tg(&z), vec![q("1"), q("0"), q("-1")]);
        assert_eq!(det_one_minus_tg(&hadamard2()), vec![q("1"), q("0"), q("-1")]);
        let id = MatQ2::identity(3);
        assert_eq!(det_one_minus_tg(&id), vec![q("1"), q("-3"), q("3"), q("-1")]);
    }

    #[test]
    fn molien_trivial_group() {
        let g = close_group(&[OrthogonalElement::identity(0)]).unwrap();
        let c = molien_series(&g, 6).unwrap();
        assert!(c.iter().all(|x| x.is_one()));
    }

    #[test]
    fn molien_m1() {
        let g = close_group(&standard_generators(1).unwrap()).unwrap();
        let c: Vec<i64> = molien_series(&g, 12).unwrap().iter().map(|x| x.to_integer().try_into().unwrap()).collect();
        assert_eq!(c, vec![1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2]);
    }

    #[test]
    fn molien_needs_elements() {
        let g = clifford_group(1).unwrap();
        let no_elements = FiniteMatrixGroup { elements: None, ..g };
        assert!(matches!(molien_series(&no_elements, 4), Err(Error::Capacity(_))));
    }

    #[test]
    fn json_shape() {
        let g = clifford_group(1).unwrap();
        let mol = molien_series(&g, 4).unwrap();
        let j = g.to_json(Some(&mol));
        assert_eq!(j["order"], "16");
        assert_eq!(j["molien"], json!(["1", "0", "1", "0", "1"]));
        assert_eq!(j["generators"].as_array().unwrap().len(), 2);
    }
}
