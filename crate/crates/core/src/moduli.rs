//! The associahedral cell model of the real moduli space: labeled polygon
//! dissections glued by the dihedral action and by twists along their
//! diagonals.
//!
//! A cell is a labeling `σ` of the polygon edges together with a set of
//! non-crossing position diagonals. A position map `p` acts by
//! `(σ, D) ↦ (σ∘p, p⁻¹(D))`; the dihedral group acts this way on every
//! cell, and the reversal along any diagonal of `D` acts on that cell.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{self, H1Report};
use crate::linalg::{RankOptions, SparseIntMatrix};
use crate::polygon::{self, Diagonal};
use crate::symmetry::{dihedral, reversal_involution, Permutation};

/// Largest n with a full cell census.
pub const FULL_CENSUS_MAX_N: usize = 6;
/// Largest n for the 2-skeleton.
pub const SKELETON_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledDissection {
    sigma: Permutation,
    diag: Vec<Diagonal>,
}

impl LabeledDissection {
    pub fn new(sigma: Permutation, mut diag: Vec<Diagonal>) -> Result<Self> {
        let n = sigma.n();
        polygon::check_polygon(n)?;
        if let Some(d) = diag.iter().find(|d| d.n() != n) {
            return Err(Error::domain(format!("{d} is not a diagonal of the {n}-gon")));
        }
        diag.sort_unstable();
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                if diag[i] == diag[j] || diag[i].crosses_unchecked(&diag[j]) {
                    return Err(Error::domain(format!(
                        "{} and {} are not distinct non-crossing diagonals",
                        diag[i], diag[j]
                    )));
                }
            }
        }
        if diag.len() > n - 3 {
            return Err(Error::domain(format!("{} diagonals exceed n - 3", diag.len())));
        }
        Ok(LabeledDissection { sigma, diag })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diag
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn dimension(&self) -> usize {
        self.n() - 3 - self.diag.len()
    }

    /// `(σ∘p, p⁻¹(D))`; `p_inv` must be the inverse of `p`.
    fn act(&self, p: &Permutation, p_inv: &Permutation) -> LabeledDissection {
        let mut diag: Vec<Diagonal> = self.diag.iter().map(|d| map_diagonal(p_inv, d)).collect();
        diag.sort_unstable();
        LabeledDissection {
            sigma: self.sigma.compose(p),
            diag,
        }
    }

    /// Diagonals not in `D` that cross none of `D`.
    pub fn compatible(&self) -> Vec<Diagonal> {
        polygon::diagonals(self.n())
            .expect("n >= 4")
            .into_iter()
            .filter(|f| !self.diag.contains(f) && self.diag.iter().all(|d| !d.crosses_unchecked(f)))
            .collect()
    }

    fn with(&self, extra: &[Diagonal]) -> LabeledDissection {
        let mut diag = self.diag.clone();
        diag.extend_from_slice(extra);
        diag.sort_unstable();
        LabeledDissection {
            sigma: self.sigma.clone(),
            diag,
        }
    }
}

/// Image of a diagonal under a position map: the image of its block is a
/// cyclic arc, renamed by the side avoiding position n.
pub fn map_diagonal(q: &Permutation, d: &Diagonal) -> Diagonal {
    let n = d.n();
    let inside = (d.k()..=d.l()).fold(0u32, |m, x| m | 1 << q.apply(x));
    let prev = |x: usize| if x == 1 { n } else { x - 1 };
    let start = (1..=n)
        .find(|&x| inside & (1 << x) != 0 && inside & (1 << prev(x)) == 0)
        .expect("image of a block is a proper arc");
    Diagonal::from_arc(start, start + d.len() - 1, n).expect("arc image is a diagonal")
}

/// Non-crossing sets of `j` diagonals, in lexicographic order of the
/// sorted diagonal lists.
pub fn enumerate_dissections(n: usize, j: usize) -> Result<Vec<Vec<Diagonal>>> {
    polygon::check_polygon(n)?;
    if j > n - 3 {
        return Err(Error::domain(format!("{j} diagonals exceed n - 3 = {}", n - 3)));
    }
    let ds = polygon::diagonals(n)?;
    let mut out = Vec::new();
    fn rec(ds: &[Diagonal], from: usize, j: usize, cur: &mut Vec<Diagonal>, out: &mut Vec<Vec<Diagonal>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for i in from..ds.len() {
            if cur.iter().all(|c| !c.crosses_unchecked(&ds[i])) {
                cur.push(ds[i]);
                rec(ds, i + 1, j, cur, out);
                cur.pop();
            }
        }
    }
    rec(&ds, 0, j, &mut Vec::new(), &mut out);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellId {
    canonical: LabeledDissection,
}

impl CellId {
    pub fn canonical(&self) -> &LabeledDissection {
        &self.canonical
    }

    pub fn dimension(&self) -> usize {
        self.canonical.dimension()
    }
}

struct Group {
    dihedral: Vec<(Permutation, Permutation)>,
}

impl Group {
    fn new(n: usize) -> Self {
        Group {
            dihedral: dihedral(n)
                .into_iter()
                .map(|p| {
                    let inv = p.inverse();
                    (p, inv)
                })
                .collect(),
        }
    }

    /// Orbit members with the accumulated map `P` from the start:
    /// `member = start·P`. Breadth-first, so the order is deterministic.
    fn orbit(&self, start: &LabeledDissection) -> Vec<(LabeledDissection, Permutation)> {
        let mut seen: HashMap<LabeledDissection, usize> = HashMap::new();
        let mut out = vec![(start.clone(), Permutation::identity(start.n()))];
        seen.insert(start.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let (s, p) = out[i].clone();
            let twists = s.diag.iter().map(|e| {
                let r = reversal_involution(e);
                (r.clone(), r)
            });
            for (g, g_inv) in self.dihedral.iter().cloned().chain(twists) {
                let t = s.act(&g, &g_inv);
                if !seen.contains_key(&t) {
                    seen.insert(t.clone(), out.len());
                    queue.push_back(out.len());
                    out.push((t, p.compose(&g)));
                }
            }
        }
        out
    }
}

/// Least member of the gluing orbit.
pub fn canonical_cell(ld: &LabeledDissection) -> CellId {
    let (cell, _) = canonical_cell_with_map(ld);
    cell
}

/// The canonical cell and a position map `Q` with `canonical = ld·Q`.
pub fn canonical_cell_with_map(ld: &LabeledDissection) -> (CellId, Permutation) {
    let orbit = Group::new(ld.n()).orbit(ld);
    let (c, p) = orbit.into_iter().min_by(|a, b| a.0.cmp(&b.0)).expect("orbit is nonempty");
    (CellId { canonical: c }, p)
}

/// Cells of one dimension with a lookup from every labeled member to its
/// cell and the map onto the canonical member.
struct CellTable {
    cells: Vec<LabeledDissection>,
    index: HashMap<LabeledDissection, (u32, Permutation)>,
}

fn cell_table(n: usize, j: usize, group: &Group, keep_index: bool) -> Result<CellTable> {
    let mut cells = Vec::new();
    let mut index = HashMap::new();
    let mut visited: std::collections::HashSet<LabeledDissection> = std::collections::HashSet::new();
    let perms = all_permutations(n);
    for d in enumerate_dissections(n, j)? {
        for sigma in &perms {
            let ld = LabeledDissection {
                sigma: sigma.clone(),
                diag: d.clone(),
            };
            if visited.contains(&ld) || index.contains_key(&ld) {
                continue;
            }
            let orbit = group.orbit(&ld);
            let (ci, _) = orbit
                .iter()
                .enumerate()
                .min_by(|a, b| a.1 .0.cmp(&b.1 .0))
                .expect("orbit is nonempty");
            let id = cells.len() as u32;
            let p_c = orbit[ci].1.clone();
            cells.push(orbit[ci].0.clone());
            for (s, p) in orbit {
                if keep_index {
                    let q = p.inverse().compose(&p_c);
                    index.insert(s, (id, q));
                } else {
                    visited.insert(s);
                }
            }
        }
    }
    Ok(CellTable { cells, index })
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    fn heap(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation::from_images(cur.clone()).expect("valid permutation"));
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug)]
pub struct ModuliComplex {
    n: usize,
    census: Vec<usize>,
    full_census: bool,
    cells: Vec<Vec<LabeledDissection>>,
    d1: SparseIntMatrix,
    d2: SparseIntMatrix,
}

impl ModuliComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cell counts by dimension; complete up to `n − 3` when
    /// [`ModuliComplex::has_full_census`].
    pub fn census(&self) -> &[usize] {
        &self.census
    }

    pub fn has_full_census(&self) -> bool {
        self.full_census
    }

    /// Canonical cells of dimension `dim ≤ 2`.
    pub fn cells(&self, dim: usize) -> &[LabeledDissection] {
        self.cells.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn boundary1(&self) -> &SparseIntMatrix {
        &self.d1
    }

    pub fn boundary2(&self) -> &SparseIntMatrix {
        &self.d2
    }

    /// Alternating sum of the full census.
    pub fn euler_characteristic(&self) -> Option<i64> {
        self.full_census.then(|| {
            self.census
                .iter()
                .enumerate()
                .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
                .sum()
        })
    }
}

pub fn build_moduli_complex(n: usize) -> Result<ModuliComplex> {
    polygon::check_polygon(n)?;
    if n > SKELETON_MAX_N {
        return Err(Error::Capacity {
            what: "moduli complex",
            n,
            limit: SKELETON_MAX_N,
        });
    }
    let full_census = n <= FULL_CENSUS_MAX_N;
    let group = Group::new(n);
    let top_dim = n - 3;
    let built_dims = if full_census { top_dim } else { 2 };
    let mut tables = Vec::new();
    for dim in 0..=built_dims {
        // dimension dim ↔ n − 3 − dim diagonals; only dims 0, 1 need lookups
        tables.push(cell_table(n, top_dim - dim, &group, dim <= 1)?);
    }
    let census: Vec<usize> = tables.iter().map(|t| t.cells.len()).collect();

    let verts = &tables[0];
    let lookup = |table: &CellTable, ld: &LabeledDissection| -> Result<(u32, Permutation)> {
        table
            .index
            .get(ld)
            .cloned()
            .ok_or_else(|| Error::Consistency(format!("no cell contains {ld:?}")))
    };

    let completions = |c: &LabeledDissection| -> Result<(Diagonal, Diagonal)> {
        match c.compatible()[..] {
            [a, b] => Ok((a, b)),
            ref other => Err(Error::Consistency(format!(
                "edge cell {c:?} has {} completions",
                other.len()
            ))),
        }
    };

    let edge_cells = tables.get(1).map(|t| t.cells.clone()).unwrap_or_default();
    let mut d1_triples = Vec::new();
    for (e, c) in edge_cells.iter().enumerate() {
        let (c1, c2) = completions(c)?;
        let (tail, _) = lookup(verts, &c.with(&[c1]))?;
        let (head, _) = lookup(verts, &c.with(&[c2]))?;
        if head != tail {
            d1_triples.push((head as usize, e, 1));
            d1_triples.push((tail as usize, e, -1));
        }
    }
    let d1 = SparseIntMatrix::new(census[0], edge_cells.len(), d1_triples)?;

    let face_cells = tables.get(2).map(|t| t.cells.clone()).unwrap_or_default();
    let mut d2_triples = Vec::new();
    for (f, c) in face_cells.iter().enumerate() {
        let cycle = boundary_walk(c)?;
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for (x, prev, _next) in cycle {
            let (e, q) = lookup(&tables[1], &c.with(&[x]))?;
            let (c1, c2) = completions(&edge_cells[e as usize])?;
            let moved = map_diagonal(&q.inverse(), &prev);
            let sign = if moved == c1 {
                1
            } else if moved == c2 {
                -1
            } else {
                return Err(Error::Consistency(format!(
                    "completion {prev} of {x} does not land on edge cell {e}"
                )));
            };
            *acc.entry(e).or_insert(0) += sign;
        }
        d2_triples.extend(acc.into_iter().map(|(e, s)| (e as usize, f, s)));
    }
    let d2 = SparseIntMatrix::new(edge_cells.len(), face_cells.len(), d2_triples)?;
    homology::check_chain_complex(&d1, &d2)?;

    let cells = tables.into_iter().take(3).map(|t| t.cells).collect();
    Ok(ModuliComplex {
        n,
        census,
        full_census,
        cells,
        d1,
        d2,
    })
}

/// The boundary polygon of a 2-cell as `(edge diagonal, from completion,
/// to completion)` steps. Vertices are pairs of compatible diagonals that do
/// not cross; edges are single compatible diagonals.
fn boundary_walk(c: &LabeledDissection) -> Result<Vec<(Diagonal, Diagonal, Diagonal)>> {
    let comp = c.compatible();
    let partners = |x: &Diagonal| -> Vec<Diagonal> {
        comp.iter().filter(|y| *y != x && !x.crosses_unchecked(y)).copied().collect()
    };
    let bad = || Error::Consistency(format!("2-cell {c:?} is not a polygon"));
    let start = *comp.first().ok_or_else(bad)?;
    let first = partners(&start);
    if first.len() != 2 {
        return Err(bad());
    }
    let mut steps = Vec::new();
    let (mut x, mut prev) = (start, first[0]);
    loop {
        let ps = partners(&x);
        let next = match ps[..] {
            [a, b] if a == prev => b,
            [a, b] if b == prev => a,
            _ => return Err(bad()),
        };
        steps.push((x, prev, next));
        (x, prev) = (next, x);
        if x == start && prev == first[0] {
            break;
        }
        if steps.len() > comp.len() {
            return Err(bad());
        }
    }
    if !(4..=5).contains(&steps.len()) {
        return Err(bad());
    }
    Ok(steps)
}

pub fn h1_moduli(m: &ModuliComplex, opts: &RankOptions) -> Result<H1Report> {
    homology::h1_from_boundaries("moduli", m.n(), m.boundary1(), m.boundary2(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_b, Capacity};
    use crate::linalg::RankMethod;

    fn exact() -> RankOptions {
        RankOptions {
            method: RankMethod::Exact,
            primes: Vec::new(),
        }
    }

    fn catalan(m: u64) -> u64 {
        polygon::binomial(2 * m, m) / (m + 1)
    }

    #[test]
    fn dissection_counts() {
        assert_eq!(enumerate_dissections(7, 0).unwrap(), vec![Vec::<Diagonal>::new()]);
        for n in 4..=9 {
            assert_eq!(enumerate_dissections(n, n - 3).unwrap().len() as u64, catalan(n as u64 - 2));
            assert_eq!(enumerate_dissections(n, 1).unwrap().len(), n * (n - 3) / 2);
        }
        assert_eq!(enumerate_dissections(5, 2).unwrap().len(), 5);
        let six = enumerate_dissections(6, 2).unwrap();
        let mut sorted = six.clone();
        sorted.sort();
        assert_eq!(six, sorted);
    }

    #[test]
    fn map_diagonal_examples() {
        let d = Diagonal::new(1, 2, 5).unwrap();
        let rot = dihedral(5)[1].clone(); // x ↦ x + 1
        assert_eq!(map_diagonal(&rot, &d), Diagonal::new(2, 3, 5).unwrap());
        // [4,5] wraps through n and renames to [1,3]
        let rot3 = dihedral(5)[3].clone();
        assert_eq!(map_diagonal(&rot3, &d), Diagonal::new(1, 3, 5).unwrap());
    }

    #[test]
    fn canonical_is_idempotent_and_glues_twists() {
        let n = 6;
        let sigma = Permutation::from_images(vec![3, 1, 4, 6, 5, 2]).unwrap();
        let e = Diagonal::new(2, 4, n).unwrap();
        let ld = LabeledDissection::new(sigma.clone(), vec![e]).unwrap();
        let c = canonical_cell(&ld);
        assert_eq!(canonical_cell(c.canonical()), c);
        let r = reversal_involution(&e);
        let twisted = LabeledDissection::new(sigma.compose(&r), vec![map_diagonal(&r, &e)]).unwrap();
        assert_eq!(canonical_cell(&twisted), c);
        let (cc, q) = canonical_cell_with_map(&ld);
        assert_eq!(ld.act(&q, &q.inverse()), cc.canonical);
    }

    #[test]
    fn top_cells_are_dihedral_cosets() {
        for n in 4..=6 {
            let m = build_moduli_complex(n).unwrap();
            let top = *m.census().last().unwrap();
            assert_eq!(top as u64, (1..n as u64).product::<u64>() / 2, "n = {n}");
        }
    }

    #[test]
    fn circle_and_surface() {
        let m4 = build_moduli_complex(4).unwrap();
        assert_eq!(m4.census(), &[3, 3]);
        assert_eq!(h1_moduli(&m4, &exact()).unwrap().h1_rank, 1);
        let m5 = build_moduli_complex(5).unwrap();
        assert_eq!(m5.census(), &[15, 30, 12]);
        assert_eq!(m5.euler_characteristic(), Some(-3));
        // closed surface: every edge on exactly two pentagons
        let mut per_edge = vec![0i64; 30];
        for (e, _, v) in m5.boundary2().triples() {
            per_edge[e] += v.abs();
        }
        assert!(per_edge.iter().all(|&c| c == 2));
        let h = h1_moduli(&m5, &exact()).unwrap();
        assert_eq!(h.h1_rank as i64, 1 - m5.euler_characteristic().unwrap());
    }

    #[test]
    fn theorem_one_small() {
        let cap = Capacity::default();
        for n in 4..=5 {
            let m = build_moduli_complex(n).unwrap();
            let b = build_b(n, &cap).unwrap();
            let hb = homology::h1_rank(b.complex(), "B", n, &exact()).unwrap();
            assert_eq!(h1_moduli(&m, &exact()).unwrap().h1_rank, hb.h1_rank);
        }
    }
}
