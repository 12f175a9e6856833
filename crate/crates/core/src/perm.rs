//! Permutation groups on `{0, …, n-1}` and their stabilizer chains.
//!
//! Permutations act on the right: the image of a point `p` under `g` is
//! `g[p]`, and the product `g·h` means "first `g`, then `h`".

use num_bigint::BigUint;
use num_traits::One;

/// A permutation stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Builds a permutation from its image array; `None` if it is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().position(|(i, &x)| i as u32 != x)
    }
}

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// Orbit of `point` in discovery order.
    orbit: Vec<usize>,
    /// `transversal[q]` maps `point` to `q`, for `q` in the orbit.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(point: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[point] = Some(Perm::identity(n));
        Level { point, gens: Vec::new(), orbit: vec![point], transversal }
    }

    fn add_gen(&mut self, g: Perm) {
        self.gens.push(g);
        // re-close the orbit under all generators
        let mut i = 0;
        while i < self.orbit.len() {
            let q = self.orbit[i];
            for s in &self.gens {
                let r = s.apply(q);
                if self.transversal[r].is_none() {
                    let t = self.transversal[q].as_ref().expect("orbit point").then(s);
                    self.transversal[r] = Some(t);
                    self.orbit.push(r);
                }
            }
            i += 1;
        }
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Deterministic Schreier–Sims: every Schreier generator at every level
    /// is sifted, so the resulting chain is exact.
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        if gens.is_empty() {
            return chain;
        }
        for g in gens {
            let (h, j) = chain.strip(&g, 0);
            if !h.is_identity() {
                chain.install(h, 0, j);
            }
        }
        chain.complete();
        chain
    }

    /// Adds `h` as a strong generator to levels `from..=to`, extending the
    /// base when `to` is past the end.
    fn install(&mut self, h: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let p = h.first_moved().expect("non-identity");
            self.levels.push(Level::new(p, self.degree));
        }
        for l in from..=to {
            self.levels[l].add_gen(h.clone());
        }
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let lvl = i - 1;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &q in &orbit {
                let tq = self.levels[lvl].transversal[q].clone().expect("orbit point");
                for s in &gens {
                    let r = s.apply(q);
                    let tr = self.levels[lvl].transversal[r].as_ref().expect("closed orbit");
                    let schreier = tq.then(s).then(&tr.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(&schreier, lvl + 1);
                    if !h.is_identity() {
                        self.install(h, lvl + 1, j);
                        i = j + 1;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` through the levels starting at `from`; returns the residue
    /// and the level at which sifting stopped.
    fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let q = h.apply(level.point);
            match &level.transversal[q] {
                Some(t) => h = h.then(&t.inverse()),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Group order, the product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && {
            let (h, _) = self.strip(g, 0);
            h.is_identity()
        }
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }
}

/// Orbits of the group generated by `gens` on `{0, …, n-1}`, each sorted,
/// listed by smallest element.
pub fn orbits(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orb = vec![start];
        let mut i = 0;
        while i < orb.len() {
            let q = orb[i];
            for g in gens {
                let r = g.apply(q);
                if !seen[r] {
                    seen[r] = true;
                    orb.push(r);
                }
            }
            i += 1;
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}
