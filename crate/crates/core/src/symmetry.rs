//! Permutations of edge labels, the reversal generators carried by
//! diagonals, and cosets of the dihedral group.
//!
//! A labeling `σ` puts label `σ(i)` on polygon position `i`. Symmetries of the
//! polygon and twists along diagonals act on positions, so both act on the
//! right: `σ ↦ σ∘g`. Vertices of the coset graph are the classes `σ·D_n`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polygon::{self, Diagonal};

/// Largest polygon the dense `u8` image representation supports.
pub const MAX_DEGREE: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "permutation degree {n} exceeds {MAX_DEGREE}");
        Permutation((1..=n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::Capacity {
                what: "permutation degree",
                n,
                limit: MAX_DEGREE,
            });
        }
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::domain(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// Image of the 1-based label `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1] as usize
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&x| self.0[x as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `x ↦ k + l - x` on the block of `d`, identity elsewhere.
pub fn reversal_involution(d: &Diagonal) -> Permutation {
    let (k, l) = (d.k(), d.l());
    Permutation(
        (1..=d.n())
            .map(|x| if d.contains_label(x) { (k + l - x) as u8 } else { x as u8 })
            .collect(),
    )
}

pub fn commutes(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::domain(format!(
            "permutations of different degree ({} vs {})",
            u.n(),
            v.n()
        )));
    }
    Ok(u.compose(v) == v.compose(u))
}

/// The `2n` symmetries of the n-gon acting on edge positions: rotations
/// `x ↦ x + i` and reflections `x ↦ i - x` (mod n, in `1..=n`).
pub fn dihedral(n: usize) -> Vec<Permutation> {
    assert!((3..=MAX_DEGREE).contains(&n));
    let wrap = |x: usize| ((x + 2 * n - 1) % n + 1) as u8;
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        out.push(Permutation((1..=n).map(|x| wrap(x + i)).collect()));
    }
    for i in 0..n {
        out.push(Permutation((1..=n).map(|x| wrap(n + 1 + i - x)).collect()));
    }
    out
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    n: usize,
    elements: Vec<(Diagonal, Permutation)>,
}

impl GeneratorSet {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::Capacity {
                what: "generator set",
                n,
                limit: MAX_DEGREE,
            });
        }
        let elements = polygon::diagonals(n)?
            .into_iter()
            .map(|d| {
                let p = reversal_involution(&d);
                (d, p)
            })
            .collect();
        Ok(GeneratorSet { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Diagonal, Permutation)> {
        self.elements.iter()
    }

    pub fn diagonal(&self, i: usize) -> &Diagonal {
        &self.elements[i].0
    }

    pub fn permutation(&self, i: usize) -> &Permutation {
        &self.elements[i].1
    }

    /// Index of the generator carried by `d`.
    pub fn index_of(&self, d: &Diagonal) -> Option<usize> {
        self.elements.binary_search_by(|(e, _)| e.cmp(d)).ok()
    }
}

/// Canonical representative of the class `σ·D_n`: the lexicographically
/// least `σ∘δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CosetRep {
    rep: Permutation,
}

impl CosetRep {
    pub fn rep(&self) -> &Permutation {
        &self.rep
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn into_inner(self) -> Permutation {
        self.rep
    }
}

/// Canonicalizer holding the dihedral group for one `n`.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    n: usize,
    dihedral: Vec<Permutation>,
}

impl CosetSpace {
    pub fn new(n: usize) -> Self {
        CosetSpace {
            n,
            dihedral: dihedral(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dihedral(&self) -> &[Permutation] {
        &self.dihedral
    }

    pub fn canonical(&self, p: &Permutation) -> CosetRep {
        debug_assert_eq!(p.n(), self.n);
        let rep = self
            .dihedral
            .iter()
            .map(|d| p.compose(d))
            .min()
            .expect("dihedral group is nonempty");
        CosetRep { rep }
    }
}

pub fn canonical_coset(p: &Permutation) -> CosetRep {
    CosetSpace::new(p.n()).canonical(p)
}

/// Whether the reversals of two blocks commute, decided from the blocks
/// alone: the labels they move are disjoint, or they are nested around the
/// same center.
pub fn blocks_commute(a: &Diagonal, b: &Diagonal) -> bool {
    let moved = |d: &Diagonal, x: usize| d.contains_label(x) && 2 * x != d.k() + d.l();
    let supports_meet = (1..=a.n()).any(|x| moved(a, x) && moved(b, x));
    a == b
        || !supports_meet
        || ((a.contains(b) || b.contains(a)) && a.k() + a.l() == b.k() + b.l())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn d(k: usize, l: usize, n: usize) -> Diagonal {
        Diagonal::new(k, l, n).unwrap()
    }

    fn all_permutations(n: usize) -> Vec<Permutation> {
        fn rec(cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            let n = used.len();
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x as u8 + 1);
                    rec(cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn reversal_examples() {
        let r = reversal_involution(&d(1, 3, 5));
        assert_eq!(r.images(), &[3, 2, 1, 4, 5]);
        let r = reversal_involution(&d(2, 4, 6));
        assert_eq!(r.images(), &[1, 4, 3, 2, 5, 6]);
        for n in 4..=8 {
            for (_, t) in GeneratorSet::new(n).unwrap().iter() {
                assert!(t.is_involution());
            }
        }
    }

    #[test]
    fn generators_fix_labels_outside_their_block() {
        let gens = GeneratorSet::new(7).unwrap();
        assert_eq!(gens.len(), 14);
        for (dg, t) in gens.iter() {
            for x in 1..=7 {
                if !dg.contains_label(x) {
                    assert_eq!(t.apply(x), x);
                }
            }
        }
    }

    #[test]
    fn commutation_examples() {
        let r = |k, l, n| reversal_involution(&d(k, l, n));
        assert!(commutes(&r(1, 2, 6), &r(3, 4, 6)).unwrap());
        assert!(!commutes(&r(1, 2, 4), &r(2, 3, 4)).unwrap());
        assert!(commutes(&r(1, 4, 6), &r(2, 3, 6)).unwrap());
        assert!(commutes(&r(1, 2, 5), &r(1, 2, 6)).is_err());
    }

    #[test]
    fn commutation_matches_block_characterization() {
        for n in 4..=8 {
            let gens = GeneratorSet::new(n).unwrap();
            for (a, u) in gens.iter() {
                for (b, v) in gens.iter() {
                    assert_eq!(
                        commutes(u, v).unwrap(),
                        blocks_commute(a, b),
                        "n = {n}, {a} vs {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn dihedral_group_is_closed() {
        for n in 3..=9 {
            let g = dihedral(n);
            assert_eq!(g.len(), 2 * n);
            let set: BTreeSet<_> = g.iter().cloned().collect();
            assert_eq!(set.len(), 2 * n);
            assert!(set.contains(&Permutation::identity(n)));
            for a in &g {
                assert!(set.contains(&a.inverse()));
                for b in &g {
                    assert!(set.contains(&a.compose(b)));
                }
                let mut imgs = a.images().to_vec();
                imgs.sort();
                assert_eq!(imgs, (1..=n as u8).collect::<Vec<_>>());
            }
            let rot: Vec<u8> = (1..=n).map(|x| (x % n + 1) as u8).collect();
            let refl: Vec<u8> = (1..=n).map(|x| (n + 1 - x) as u8).collect();
            assert!(set.contains(&Permutation(rot)));
            assert!(set.contains(&Permutation(refl)));
        }
    }

    #[test]
    fn dihedral_elements_share_the_identity_coset() {
        let space = CosetSpace::new(6);
        let id = space.canonical(&Permutation::identity(6));
        for g in dihedral(6) {
            assert_eq!(space.canonical(&g), id);
        }
    }

    #[test]
    fn coset_counts() {
        for n in 4..=8 {
            let space = CosetSpace::new(n);
            let reps: BTreeSet<_> = all_permutations(n)
                .iter()
                .map(|p| space.canonical(p))
                .collect();
            let fact: usize = (1..=n).product();
            assert_eq!(reps.len(), fact / (2 * n), "n = {n}");
        }
    }

    #[test]
    fn canonical_is_idempotent_and_ignores_squared_generators() {
        let space = CosetSpace::new(6);
        let gens = GeneratorSet::new(6).unwrap();
        for p in all_permutations(6).iter().step_by(7) {
            let c = space.canonical(p);
            assert_eq!(&space.canonical(c.rep()), &c);
            for (_, t) in gens.iter() {
                assert_eq!(space.canonical(&c.rep().compose(t).compose(t)), c);
            }
        }
    }

    #[test]
    fn neighbour_sets_do_not_depend_on_the_representative() {
        for n in 4..=7 {
            let space = CosetSpace::new(n);
            let gens = GeneratorSet::new(n).unwrap();
            for p in all_permutations(n).iter().step_by(11) {
                let neighbours = |q: &Permutation| -> BTreeSet<CosetRep> {
                    gens.iter().map(|(_, t)| space.canonical(&q.compose(t))).collect()
                };
                let base = neighbours(p);
                for g in space.dihedral() {
                    assert_eq!(neighbours(&p.compose(g)), base);
                }
            }
        }
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![0, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![2, 3, 1]).is_ok());
    }
}
