//! Independent routes to quantities the library also computes. Nothing here
//! calls the routine it is meant to check.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use moduli_lab::graph::Graph;

/// Parallel diagonal pairs of the regular n-gon, bucketing chords by the
/// angle of their direction vector.
pub fn parallel_pairs_by_angle(n: usize) -> u64 {
    let pt = |i: usize| {
        let t = 2.0 * PI * i as f64 / n as f64;
        (t.cos(), t.sin())
    };
    let mut buckets: BTreeMap<i64, u64> = BTreeMap::new();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (a, b) = (pt(i), pt(j));
            let mut ang = (b.1 - a.1).atan2(b.0 - a.0);
            if ang < 0.0 {
                ang += PI;
            }
            if ang >= PI - 1e-9 {
                ang -= PI;
            }
            *buckets.entry((ang * 1e6).round() as i64).or_default() += 1;
        }
    }
    buckets.values().map(|&c| c * c.saturating_sub(1) / 2).sum()
}

fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Pairs of diagonals minus crossing pairs: every 4 vertices carry exactly one
/// crossing pair.
pub fn noncrossing_pairs_by_complement(n: usize) -> u64 {
    let nn = n as u64;
    choose(nn * (nn - 3) / 2, 2) - choose(nn, 4)
}

/// A uniformly shuffled spanning tree on `v` vertices plus random extra edges,
/// at most `max_edges` in total.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_edges: usize) -> Graph {
    let v = rng.gen_range(2..=max_edges.min(40) + 1);
    let mut order: Vec<usize> = (0..v).collect();
    for i in (1..v).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut edges = std::collections::BTreeSet::new();
    for i in 1..v {
        let parent = order[rng.gen_range(0..i)];
        let (a, b) = (order[i], parent);
        edges.insert((a.min(b), a.max(b)));
    }
    let capacity = (v * (v - 1) / 2).min(max_edges);
    let target = rng.gen_range(edges.len()..=capacity);
    while edges.len() < target {
        let a = rng.gen_range(0..v);
        let b = rng.gen_range(0..v);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(v, edges).expect("random edges are simple")
}

/// Union-find component count.
pub fn components(vertex_count: usize, edges: &[(u32, u32)]) -> usize {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = vertex_count;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

/// Rank over ℚ by plain Gaussian elimination on a dense matrix.
pub fn rational_rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut m = rows;
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != BigRational::from_integer(0.into()))
        else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r == rank || m[r][c] == BigRational::from_integer(0.into()) {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for j in c..cols {
                let delta = &f * &m[rank][j];
                m[r][j] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

/// dim ker ∂1 from the dense vertex-by-edge incidence matrix.
pub fn incidence_nullity(g: &Graph) -> usize {
    let zero = BigRational::from_integer(0.into());
    let mut rows = vec![vec![zero; g.edge_count()]; g.vertex_count()];
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        rows[u as usize][j] = BigRational::from_integer((-1).into());
        rows[v as usize][j] = BigRational::from_integer(1.into());
    }
    g.edge_count() - rational_rank(rows)
}

/// `k` random rationals, not all zero, summing to zero.
pub fn zero_sum_weights(rng: &mut ChaCha8Rng, k: usize) -> Vec<BigRational> {
    loop {
        let mut w: Vec<BigRational> = (0..k - 1)
            .map(|_| {
                BigRational::new(
                    BigInt::from(rng.gen_range(-12i64..=12)),
                    BigInt::from(rng.gen_range(1i64..=7)),
                )
            })
            .collect();
        let total: BigRational = w.iter().sum();
        w.push(-total);
        if w.iter().any(|x| *x != BigRational::from_integer(0.into())) {
            return w;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetGraphFacts {
    pub vertices: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Eccentricity of the identity coset; the graph is vertex-transitive
    /// under left multiplication, so this is the diameter.
    pub eccentricity: usize,
}

/// G(n) from scratch: cosets σ·D_n keyed by the least image array of σ∘δ,
/// neighbours σ∘r for every block reversal r of edges `k..l ⊂ 1..n-1` with
/// `2 <= l-k+1 <= n-2`.
pub fn coset_graph_facts(n: usize) -> CosetGraphFacts {
    let mut dihedral: Vec<Vec<usize>> = Vec::new();
    for r in 0..n {
        dihedral.push((0..n).map(|x| (x + r) % n).collect());
        dihedral.push((0..n).map(|x| (r + n - x) % n).collect());
    }
    let canonical = |s: &[usize]| -> Vec<usize> {
        dihedral
            .iter()
            .map(|d| d.iter().map(|&x| s[x]).collect::<Vec<usize>>())
            .min()
            .expect("dihedral group is nonempty")
    };
    let mut reversals: Vec<Vec<usize>> = Vec::new();
    for size in 2..=n - 2 {
        for k in 0..n - size {
            let l = k + size - 1;
            reversals.push((0..n).map(|x| if (k..=l).contains(&x) { k + l - x } else { x }).collect());
        }
    }
    let start = canonical(&(0..n).collect::<Vec<_>>());
    let mut dist: std::collections::HashMap<Vec<usize>, usize> = [(start.clone(), 0)].into();
    let mut queue = std::collections::VecDeque::from([start]);
    let (mut min_degree, mut max_degree, mut eccentricity) = (usize::MAX, 0, 0);
    while let Some(s) = queue.pop_front() {
        let ds = dist[&s];
        eccentricity = eccentricity.max(ds);
        let mut nbrs: Vec<Vec<usize>> = reversals
            .iter()
            .map(|r| canonical(&r.iter().map(|&x| s[x]).collect::<Vec<_>>()))
            .filter(|t| *t != s)
            .collect();
        nbrs.sort();
        nbrs.dedup();
        min_degree = min_degree.min(nbrs.len());
        max_degree = max_degree.max(nbrs.len());
        for t in nbrs {
            if !dist.contains_key(&t) {
                dist.insert(t.clone(), ds + 1);
                queue.push_back(t);
            }
        }
    }
    CosetGraphFacts {
        vertices: dist.len(),
        min_degree,
        max_degree,
        eccentricity,
    }
}

/// `1 − cos(2π/m)`, the gap of the m-cycle.
pub fn cycle_gap(m: usize) -> f64 {
    1.0 - (2.0 * PI / m as f64).cos()
}
