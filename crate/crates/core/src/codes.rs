//! Binary linear codes of length at most 32, with an emphasis on self-dual
//! codes: duality tests, canonical forms under coordinate permutation,
//! automorphism group orders, and classification certified by the mass
//! formula.
//!
//! A word is a `u32` in which coordinate `j` (the `j`-th character of its
//! 0/1 string) is bit `n-1-j`. Generator matrices are kept in reduced row
//! echelon form with pivots on the leading bit and rows in decreasing order,
//! so the row list is a complete invariant of the subspace.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{consistency, domain, Error, Result};

/// Longest code length accepted anywhere in this module.
pub const MAX_LENGTH: usize = 32;
/// Largest length classified by default; longer lengths need the opt-in flag.
pub const MAX_CLASSIFY_DEFAULT: usize = 12;
/// Hard ceiling for the opt-in classification.
pub const MAX_CLASSIFY_EXTENDED: usize = 16;

/// A binary linear code given by a reduced generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u32>,
}

fn reduce(mut rows: Vec<u32>) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for r in rows.drain(..) {
        let mut v = r;
        for b in &basis {
            if v ^ b < v {
                v ^= b;
            }
        }
        if v != 0 {
            // clear v's leading bit from the existing rows
            let lead = 1u32 << (31 - v.leading_zeros());
            for b in basis.iter_mut() {
                if *b & lead != 0 {
                    *b ^= v;
                }
            }
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

impl BinaryCode {
    /// The span of `rows`; dependent rows are dropped.
    pub fn new(n: usize, rows: &[u32]) -> Result<Self> {
        if n == 0 || n > MAX_LENGTH {
            return Err(domain!("code length must be in 1..={MAX_LENGTH}, got {n}"));
        }
        let mask = mask(n);
        if rows.iter().any(|r| r & !mask != 0) {
            return Err(domain!("word has bits beyond length {n}"));
        }
        Ok(BinaryCode { n, rows: reduce(rows.to_vec()) })
    }

    /// The repetition code `i₂ = {00, 11}`.
    pub fn i2() -> Self {
        BinaryCode { n: 2, rows: vec![0b11] }
    }

    /// `i₂^k`, the direct sum of `k` copies of `i₂`.
    pub fn i2_power(k: usize) -> Self {
        (1..k).fold(Self::i2(), |acc, _| acc.direct_sum(&Self::i2()))
    }

    /// The `[8,4,4]` extended Hamming code.
    pub fn hamming8() -> Self {
        Self::from_strings(&["11110000", "00111100", "00001111", "01010101"]).expect("constant")
    }

    pub fn from_strings(rows: &[&str]) -> Result<Self> {
        let n = rows.first().map(|r| r.len()).ok_or_else(|| Error::Parse("no generator rows".into()))?;
        let words: Result<Vec<u32>> = rows.iter().map(|r| parse_word(r, n)).collect();
        Self::new(n, &words?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.rows.iter().map(|&r| word_string(r, self.n)).collect()
    }

    /// All `2^k` codewords, in Gray-code order starting from zero.
    pub fn codewords(&self) -> Vec<u32> {
        let k = self.k();
        let mut out = Vec::with_capacity(1 << k);
        let mut w = 0u32;
        out.push(w);
        for i in 1u32..(1 << k) {
            w ^= self.rows[i.trailing_zeros() as usize];
            out.push(w);
        }
        out
    }

    /// `A_0, …, A_n`.
    pub fn weight_distribution(&self) -> Vec<u64> {
        let mut a = vec![0u64; self.n + 1];
        for w in self.codewords() {
            a[w.count_ones() as usize] += 1;
        }
        a
    }

    pub fn contains(&self, word: u32) -> bool {
        let mut v = word;
        for r in &self.rows {
            if v ^ r < v {
                v ^= r;
            }
        }
        v == 0
    }

    /// Every pair of rows, and every row with itself, meets evenly.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, a)| self.rows[i..].iter().all(|b| (a & b).count_ones() % 2 == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n && self.is_self_orthogonal()
    }

    /// Every weight divisible by 4: rows of weight `0 mod 4` meeting pairwise evenly.
    pub fn is_doubly_even(&self) -> bool {
        self.rows.iter().all(|r| r.count_ones() % 4 == 0) && self.is_self_orthogonal()
    }

    /// Whether the weight-2 codewords span the code.
    pub fn weight2_generated(&self) -> bool {
        let w2: Vec<u32> = self.codewords().into_iter().filter(|w| w.count_ones() == 2).collect();
        reduce(w2).len() == self.k()
    }

    pub fn contains_all_ones(&self) -> bool {
        self.contains(mask(self.n))
    }

    /// The code with coordinate `c` moved to position `perm[c]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let rows: Vec<u32> = self.rows.iter().map(|&r| permute_word(r, perm, self.n)).collect();
        BinaryCode { n: self.n, rows: reduce(rows) }
    }

    /// `C ⊕ D` on the concatenated coordinates.
    pub fn direct_sum(&self, other: &BinaryCode) -> Self {
        let n = self.n + other.n;
        assert!(n <= MAX_LENGTH);
        let rows: Vec<u32> =
            self.rows.iter().map(|r| r << other.n).chain(other.rows.iter().copied()).collect();
        BinaryCode { n, rows: reduce(rows) }
    }

    /// Parses the plain format (one 0/1 row per line) or the JSON wrapper.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('{') {
            let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::from_json(&v);
        }
        let rows: Vec<&str> =
            t.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
        Self::from_strings(&rows)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v["n"].as_u64().ok_or_else(|| Error::Parse("missing integer field n".into()))? as usize;
        let rows = v["rows"].as_array().ok_or_else(|| Error::Parse("missing array field rows".into()))?;
        let words: Result<Vec<u32>> = rows
            .iter()
            .map(|r| r.as_str().ok_or_else(|| Error::Parse("rows must be strings".into())).and_then(|s| parse_word(s, n)))
            .collect();
        let code = Self::new(n, &words?)?;
        if let Some(k) = v.get("k").and_then(Value::as_u64) {
            if k as usize != code.k() {
                return Err(domain!("declared k = {k} but the rows span dimension {}", code.k()));
            }
        }
        Ok(code)
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "k": self.k(), "rows": self.row_strings() })
    }

    pub fn to_text(&self) -> String {
        let mut s = self.row_strings().join("\n");
        s.push('\n');
        s
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] {{{}}}", self.n, self.k(), self.row_strings().join(", "))
    }
}

fn mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn parse_word(s: &str, n: usize) -> Result<u32> {
    if s.len() != n {
        return Err(Error::Parse(format!("row '{s}' has length {}, expected {n}", s.len())));
    }
    s.chars().try_fold(0u32, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok((acc << 1) | 1),
        _ => Err(Error::Parse(format!("unexpected character '{c}' in row '{s}'"))),
    })
}

pub fn word_string(w: u32, n: usize) -> String {
    (0..n).map(|j| if w >> (n - 1 - j) & 1 == 1 { '1' } else { '0' }).collect()
}

#[inline]
fn bit(w: u32, c: usize, n: usize) -> bool {
    w >> (n - 1 - c) & 1 == 1
}

fn permute_word(w: u32, perm: &[usize], n: usize) -> u32 {
    let mut out = 0u32;
    for (c, &p) in perm.iter().enumerate() {
        if bit(w, c, n) {
            out |= 1 << (n - 1 - p);
        }
    }
    out
}

// ---- mass formula ----

/// Number of distinct self-dual codes of even length `n`, by the product
/// formula `∏_{i=1}^{n/2-1} (2^i + 1)`; for `n ≤ 8` the value is also
/// recomputed by exhaustive search and the two must agree.
pub fn mass_total(n: usize) -> Result<BigUint> {
    if n == 0 || n % 2 == 1 {
        return Err(domain!("self-dual codes need positive even length, got {n}"));
    }
    let formula = mass_formula(n);
    if n <= 8 {
        let direct = BigUint::from(count_self_dual_exhaustive(n));
        if direct != formula {
            return Err(consistency!("mass formula gives {formula} but exhaustive search finds {direct} at n = {n}"));
        }
    }
    Ok(formula)
}

pub fn mass_formula(n: usize) -> BigUint {
    (1..n / 2).fold(BigUint::one(), |acc, i| acc * ((BigUint::one() << i) + 1u32))
}

/// Counts self-dual codes by running over every reduced echelon matrix of
/// shape `(n/2) × n`.
pub fn count_self_dual_exhaustive(n: usize) -> u64 {
    assert!(n.is_multiple_of(2) && n <= 16);
    let k = n / 2;
    let mut count = 0u64;
    // pivot bit positions, highest first
    for pivots in combinations(n, k) {
        let pivot_mask: u32 = pivots.iter().fold(0, |m, &p| m | (1 << p));
        // free positions for each row: non-pivot bits below the pivot
        let free: Vec<Vec<usize>> =
            pivots.iter().map(|&p| (0..p).filter(|b| pivot_mask >> b & 1 == 0).collect()).collect();
        let total_free: usize = free.iter().map(Vec::len).sum();
        for assignment in 0u64..(1u64 << total_free) {
            let mut rows = Vec::with_capacity(k);
            let mut off = 0;
            for (i, &p) in pivots.iter().enumerate() {
                let mut r = 1u32 << p;
                for (t, &b) in free[i].iter().enumerate() {
                    if assignment >> (off + t) & 1 == 1 {
                        r |= 1 << b;
                    }
                }
                off += free[i].len();
                rows.push(r);
            }
            let ok = rows.iter().enumerate().all(|(i, a)| rows[i..].iter().all(|b| (a & b).count_ones() % 2 == 0));
            if ok {
                count += 1;
            }
        }
    }
    count
}

/// `k`-subsets of `0..n`, each listed in decreasing order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            let mut c = cur.clone();
            c.reverse();
            out.push(c);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

// ---- canonical form ----

/// Pair colours: coordinates `x, y` get the vector of counts, by weight, of
/// codewords containing both (the diagonal gives per-coordinate counts).
/// The vectors are numbered in sorted order, so the colouring is
/// independent of coordinate labels.
struct Colouring {
    n: usize,
    colour: Vec<u32>,
}

impl Colouring {
    fn new(code: &BinaryCode, words: &[u32]) -> Self {
        let n = code.n;
        let mut counts = vec![vec![0u32; n + 1]; n * n];
        for &w in words {
            let wt = w.count_ones() as usize;
            let support: Vec<usize> = (0..n).filter(|&c| bit(w, c, n)).collect();
            for &x in &support {
                for &y in &support {
                    counts[x * n + y][wt] += 1;
                }
            }
        }
        let ids: BTreeMap<&Vec<u32>, u32> = counts
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i as u32))
            .collect();
        let colour = counts.iter().map(|c| ids[c]).collect();
        Colouring { n, colour }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> u32 {
        self.colour[x * self.n + y]
    }
}

/// Refines an ordered partition until each cell is homogeneous with respect
/// to the multiset of (cell, colour) pairs seen from its members.
fn refine(cells: &mut Vec<Vec<usize>>, col: &Colouring) {
    let n = col.n;
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            for &x in c {
                cell_of[x] = i;
            }
        }
        let mut changed = false;
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<(usize, u32)>, Vec<usize>> = BTreeMap::new();
            for &x in c {
                let mut sig: Vec<(usize, u32)> = (0..n).map(|y| (cell_of[y], col.get(x, y))).collect();
                sig.sort_unstable();
                groups.entry(sig).or_default().push(x);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

/// A canonical representative together with the relabelling that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: BinaryCode,
    /// `perm[c]` is the position of original coordinate `c`.
    pub perm: Vec<usize>,
    /// Automorphisms met during the search (as coordinate maps).
    pub automorphisms: Vec<Vec<usize>>,
}

struct CanonSearch<'a> {
    code: &'a BinaryCode,
    col: Colouring,
    best: Option<(Vec<u32>, Vec<usize>)>,
    auts: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.code.n;
        let mut perm = vec![0usize; n];
        for (pos, c) in cells.iter().enumerate() {
            perm[c[0]] = pos;
        }
        let key = self.code.permute(&perm).rows;
        match &self.best {
            None => self.best = Some((key, perm)),
            Some((bk, bp)) => match key.cmp(bk) {
                std::cmp::Ordering::Less => self.best = Some((key, perm)),
                std::cmp::Ordering::Equal => {
                    // bp⁻¹ ∘ perm maps the code to itself
                    let mut inv = vec![0usize; n];
                    for (c, &p) in bp.iter().enumerate() {
                        inv[p] = c;
                    }
                    let aut: Vec<usize> = perm.iter().map(|&p| inv[p]).collect();
                    if aut.iter().enumerate().any(|(i, &a)| i != a) {
                        self.auts.push(aut);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    fn search(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &x in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(x, &explored, prefix) {
                continue;
            }
            explored.push(x);
            let mut child = cells.clone();
            let rest: Vec<usize> = candidates.iter().copied().filter(|&y| y != x).collect();
            child.splice(target..=target, [vec![x], rest]);
            refine(&mut child, &self.col);
            prefix.push(x);
            self.search(child, prefix);
            prefix.pop();
        }
    }

    /// Whether some product of known automorphisms fixing `prefix`
    /// pointwise carries an explored child to `x`.
    fn equivalent_to_explored(&self, x: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.code.n;
        let usable: Vec<&Vec<usize>> =
            self.auts.iter().filter(|a| prefix.iter().all(|&p| a[p] == p)).collect();
        if usable.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for a in usable {
            for (i, &j) in a.iter().enumerate() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
        let rx = find(&mut parent, x);
        explored.iter().any(|&e| find(&mut parent, e) == rx)
    }
}

/// Canonical representative of `code` under coordinate permutations: the
/// relabelling whose reduced generator matrix is lexicographically least
/// among the leaves of an individualisation-refinement search.
pub fn canonical_form(code: &BinaryCode) -> CanonicalForm {
    let words = code.codewords();
    let col = Colouring::new(code, &words);
    let mut cells = vec![(0..code.n).collect::<Vec<usize>>()];
    refine(&mut cells, &col);
    let mut s = CanonSearch { code, col, best: None, auts: Vec::new() };
    s.search(cells, &mut Vec::new());
    let (rows, perm) = s.best.expect("search visits at least one leaf");
    CanonicalForm { code: BinaryCode { n: code.n, rows }, perm, automorphisms: s.auts }
}

/// Permutation equivalence, decided by comparing canonical forms.
pub fn equivalent(a: &BinaryCode, b: &BinaryCode) -> bool {
    a.n == b.n && a.k() == b.k() && canonical_form(a).code == canonical_form(b).code
}

// ---- automorphism group ----

struct AutSearch<'a> {
    n: usize,
    col: Colouring,
    words: HashSet<u32>,
    /// codewords bucketed by their last coordinate
    by_last: Vec<Vec<u32>>,
    _code: &'a BinaryCode,
}

impl<'a> AutSearch<'a> {
    fn new(code: &'a BinaryCode) -> Self {
        let n = code.n;
        let all = code.codewords();
        let col = Colouring::new(code, &all);
        let mut by_last = vec![Vec::new(); n];
        for &w in &all {
            if w != 0 {
                by_last[n - 1 - w.trailing_zeros() as usize].push(w);
            }
        }
        AutSearch { n, col, words: all.into_iter().collect(), by_last, _code: code }
    }

    /// An automorphism fixing `0..i` pointwise and sending `i` to `j`.
    fn find(&self, i: usize, j: usize) -> Option<Vec<usize>> {
        let mut img: Vec<usize> = (0..i).collect();
        let mut used = vec![false; self.n];
        for u in 0..i {
            used[u] = true;
        }
        if used[j] {
            return None;
        }
        if !self.extend_ok(&img, i, j) {
            return None;
        }
        img.push(j);
        used[j] = true;
        if self.dfs(&mut img, &mut used) {
            Some(img)
        } else {
            None
        }
    }

    fn extend_ok(&self, img: &[usize], c: usize, t: usize) -> bool {
        if self.col.get(c, c) != self.col.get(t, t) {
            return false;
        }
        if img.iter().enumerate().any(|(d, &e)| self.col.get(c, d) != self.col.get(t, e)) {
            return false;
        }
        // codewords supported on 0..=c whose last coordinate is c must map into the code
        self.by_last[c].iter().all(|&w| {
            let mut out = 0u32;
            for d in 0..=c {
                if bit(w, d, self.n) {
                    let e = if d == c { t } else { img[d] };
                    out |= 1 << (self.n - 1 - e);
                }
            }
            self.words.contains(&out)
        })
    }

    fn dfs(&self, img: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let c = img.len();
        if c == self.n {
            return true;
        }
        for t in 0..self.n {
            if used[t] || !self.extend_ok(img, c, t) {
                continue;
            }
            img.push(t);
            used[t] = true;
            if self.dfs(img, used) {
                return true;
            }
            img.pop();
            used[t] = false;
        }
        false
    }
}

/// `|Aut(C)|` as the product of basic orbit lengths along the base
/// `0, 1, …, n-1`; each orbit is grown by explicit searches for
/// automorphisms in the corresponding pointwise stabiliser.
pub fn automorphism_group_order(code: &BinaryCode) -> BigUint {
    let s = AutSearch::new(code);
    let n = code.n;
    let mut known: Vec<Vec<usize>> = Vec::new();
    let mut order = BigUint::one();
    for i in 0..n {
        let stab: Vec<&Vec<usize>> = known.iter().filter(|a| (0..i).all(|p| a[p] == p)).collect();
        let mut orbit: Vec<usize> = vec![i];
        let mut in_orbit = vec![false; n];
        in_orbit[i] = true;
        let close = |orbit: &mut Vec<usize>, in_orbit: &mut Vec<bool>, gens: &[&Vec<usize>]| {
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in gens {
                    let y = g[x];
                    if !in_orbit[y] {
                        in_orbit[y] = true;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
        };
        let gens = stab;
        close(&mut orbit, &mut in_orbit, &gens);
        let mut new_auts: Vec<Vec<usize>> = Vec::new();
        for j in i + 1..n {
            if in_orbit[j] {
                continue;
            }
            if let Some(a) = s.find(i, j) {
                new_auts.push(a);
                let all: Vec<&Vec<usize>> = gens.iter().copied().chain(new_auts.iter()).collect();
                close(&mut orbit, &mut in_orbit, &all);
            }
        }
        order *= BigUint::from(orbit.len());
        known.extend(new_auts);
    }
    order
}

// ---- classification ----

/// One class of self-dual codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeClass {
    pub representative: BinaryCode,
    pub aut_order: BigUint,
}

impl CodeClass {
    /// Number of distinct codes in the class, `n!/|Aut|`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.representative.n) / &self.aut_order
    }
}

/// Self-dual codes of one length up to permutation equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeClassification {
    pub n: usize,
    pub classes: Vec<CodeClass>,
    /// `Σ n!/|Aut|` over the classes.
    pub mass_sum: BigUint,
    /// Total number of self-dual codes of length `n`.
    pub mass_total: BigUint,
}

impl CodeClassification {
    pub fn certified(&self) -> bool {
        self.mass_sum == self.mass_total
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "count": self.classes.len(),
            "classes": self.classes.iter().map(|c| json!({
                "code": c.representative.to_json(),
                "aut_order": c.aut_order.to_string(),
                "doubly_even": c.representative.is_doubly_even(),
                "weight2_generated": c.representative.weight2_generated(),
                "weight_distribution": c.representative.weight_distribution(),
            })).collect::<Vec<_>>(),
            "mass_sum": self.mass_sum.to_string(),
            "mass_total": self.mass_total.to_string(),
            "certified": self.certified(),
        })
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// The neighbours `⟨C ∩ x^⊥, x⟩` of a self-dual code, for even-weight `x ∉ C`.
pub fn neighbours(code: &BinaryCode) -> Vec<BinaryCode> {
    let n = code.n;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for x in 1..=mask(n) {
        if x.count_ones() % 2 == 1 || code.contains(x) {
            continue;
        }
        let ortho: Vec<u32> = code.codewords().into_iter().filter(|w| (w & x).count_ones() % 2 == 0).collect();
        let mut gens = reduce(ortho);
        gens.push(x);
        let nb = BinaryCode { n, rows: reduce(gens) };
        if seen.insert(nb.rows.clone()) {
            out.push(nb);
        }
    }
    out
}

/// Self-dual codes of length `n ≤ 12` up to equivalence.
pub fn classify_self_dual(n: usize) -> Result<CodeClassification> {
    classify_self_dual_with(n, false)
}

/// As [`classify_self_dual`]; `extended` admits lengths 14 and 16.
///
/// Classes are found by breadth-first search over the neighbour graph
/// starting from `i₂^{n/2}`, deduplicated by canonical form. Completeness is
/// certified by the mass formula.
pub fn classify_self_dual_with(n: usize, extended: bool) -> Result<CodeClassification> {
    if n == 0 || n % 2 == 1 {
        return Err(domain!("self-dual codes need positive even length, got {n}"));
    }
    let limit = if extended { MAX_CLASSIFY_EXTENDED } else { MAX_CLASSIFY_DEFAULT };
    if n > limit {
        return Err(Error::Unsupported(format!("classification is limited to n <= {limit} (extended lengths go up to {MAX_CLASSIFY_EXTENDED})")));
    }
    let start = canonical_form(&BinaryCode::i2_power(n / 2)).code;
    let mut reps: HashMap<BinaryCode, ()> = HashMap::new();
    reps.insert(start.clone(), ());
    let mut queue = vec![start];
    while let Some(c) = queue.pop() {
        let canon: Vec<BinaryCode> =
            neighbours(&c).par_iter().map(|nb| canonical_form(nb).code).collect();
        for d in canon {
            if !reps.contains_key(&d) {
                reps.insert(d.clone(), ());
                queue.push(d);
            }
        }
    }
    let mut codes: Vec<BinaryCode> = reps.into_keys().collect();
    codes.sort();
    let classes: Vec<CodeClass> = codes
        .into_par_iter()
        .map(|c| {
            let aut_order = automorphism_group_order(&c);
            CodeClass { representative: c, aut_order }
        })
        .collect();
    let nf = factorial(n);
    let mass_sum = classes.iter().fold(BigUint::zero(), |acc, c| acc + &nf / &c.aut_order);
    let total = mass_total(n)?;
    let out = CodeClassification { n, classes, mass_sum, mass_total: total };
    if !out.certified() {
        return Err(consistency!(
            "classification of length {n} is not complete: Σ n!/|Aut| = {} but there are {} self-dual codes",
            out.mass_sum,
            out.mass_total
        ));
    }
    Ok(out)
}

/// `|Aut|` as a machine integer, when it fits.
pub fn aut_order_u64(code: &BinaryCode) -> Option<u64> {
    automorphism_group_order(code).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn d12() -> BinaryCode {
        BinaryCode::from_strings(&[
            "111100000000",
            "001111000000",
            "000011110000",
            "000000111100",
            "000000001111",
            "010101010101",
        ])
        .unwrap()
    }

    #[test]
    fn duality_examples() {
        assert!(BinaryCode::i2().is_self_dual());
        assert!(BinaryCode::hamming8().is_self_dual());
        let full = BinaryCode::from_strings(&["10", "01"]).unwrap();
        assert!(!full.is_self_dual());
        assert!(BinaryCode::hamming8().is_doubly_even());
        assert!(!BinaryCode::i2().is_doubly_even());
        assert!(!BinaryCode::i2_power(4).is_doubly_even());
    }

    #[test]
    fn weight2_examples() {
        assert!(BinaryCode::i2_power(4).weight2_generated());
        assert!(!BinaryCode::hamming8().weight2_generated());
        assert!(BinaryCode::i2().weight2_generated());
    }

    #[test]
    fn hamming_weights() {
        assert_eq!(BinaryCode::hamming8().weight_distribution(), vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
    }

    #[test]
    fn text_and_json_round_trip() {
        let h = BinaryCode::hamming8();
        assert_eq!(BinaryCode::parse(&h.to_text()).unwrap(), h);
        assert_eq!(BinaryCode::parse(&h.to_json().to_string()).unwrap(), h);
        assert!(BinaryCode::parse("0102").is_err());
        assert!(BinaryCode::parse("{\"n\": 4, \"rows\": [\"110\"]}").is_err());
        assert!(BinaryCode::parse("{\"n\": 2, \"k\": 2, \"rows\": [\"11\"]}").is_err());
    }

    #[test]
    fn mass_totals() {
        assert_eq!(mass_total(2).unwrap(), BigUint::from(1u32));
        assert_eq!(mass_total(4).unwrap(), BigUint::from(3u32));
        assert_eq!(mass_total(8).unwrap(), BigUint::from(135u32));
        assert_eq!(mass_total(12).unwrap(), BigUint::from(75735u32));
        assert!(mass_total(5).is_err());
        for n in [2, 4, 6, 8] {
            assert_eq!(BigUint::from(count_self_dual_exhaustive(n)), mass_formula(n));
        }
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphism_group_order(&BinaryCode::i2()), BigUint::from(2u32));
        assert_eq!(automorphism_group_order(&BinaryCode::hamming8()), BigUint::from(1344u32));
        assert_eq!(automorphism_group_order(&BinaryCode::i2_power(6)), BigUint::from(46080u32));
        let e8i2 = BinaryCode::hamming8().direct_sum(&BinaryCode::i2_power(2));
        assert_eq!(automorphism_group_order(&e8i2), BigUint::from(10752u32));
        assert_eq!(automorphism_group_order(&d12()), BigUint::from(23040u32));
    }

    #[test]
    fn canonical_form_is_a_relabelling() {
        let h = BinaryCode::hamming8();
        let cf = canonical_form(&h);
        assert_eq!(h.permute(&cf.perm), cf.code);
        assert!(cf.code.is_self_dual());
    }

    #[test]
    fn inequivalent_codes_separate() {
        assert!(!equivalent(&BinaryCode::hamming8(), &BinaryCode::i2_power(4)));
        let e8i2 = BinaryCode::hamming8().direct_sum(&BinaryCode::i2_power(2));
        assert!(!equivalent(&e8i2, &d12()));
        assert!(equivalent(&e8i2, &BinaryCode::i2_power(2).direct_sum(&BinaryCode::hamming8())));
    }

    #[test]
    fn class_counts_up_to_12() {
        let counts: Vec<usize> = (1..=6).map(|k| classify_self_dual(2 * k).unwrap().classes.len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn length_eight_classes() {
        let c = classify_self_dual(8).unwrap();
        assert!(c.certified());
        let reps: Vec<&BinaryCode> = c.classes.iter().map(|x| &x.representative).collect();
        assert!(reps.iter().any(|r| equivalent(r, &BinaryCode::i2_power(4)) && r.weight2_generated()));
        assert!(reps.iter().any(|r| equivalent(r, &BinaryCode::hamming8()) && !r.weight2_generated()));
        for r in reps {
            assert!(r.contains_all_ones());
        }
    }

    #[test]
    fn classification_bounds() {
        assert!(matches!(classify_self_dual(7), Err(Error::Domain(_))));
        assert!(matches!(classify_self_dual(14), Err(Error::Unsupported(_))));
        assert!(matches!(classify_self_dual_with(18, true), Err(Error::Unsupported(_))));
    }

    #[test]
    fn classification_is_idempotent_under_relabelling() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for rep in classify_self_dual(12).unwrap().classes {
            let r = rep.representative;
            let mut p: Vec<usize> = (0..12).collect();
            p.shuffle(&mut rng);
            assert_eq!(canonical_form(&r.permute(&p)).code, r);
        }
    }

    fn random_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn self_duality_survives_permutation(p in random_perm(12)) {
            for c in [d12(), BinaryCode::i2_power(6), BinaryCode::hamming8().direct_sum(&BinaryCode::i2_power(2))] {
                prop_assert!(c.permute(&p).is_self_dual());
            }
        }

        #[test]
        fn canonical_form_ignores_relabelling(p in random_perm(12)) {
            for c in [d12(), BinaryCode::i2_power(6), BinaryCode::hamming8().direct_sum(&BinaryCode::i2_power(2))] {
                prop_assert_eq!(canonical_form(&c.permute(&p)).code, canonical_form(&c).code);
                prop_assert_eq!(automorphism_group_order(&c.permute(&p)), automorphism_group_order(&c));
            }
        }
    }
}
