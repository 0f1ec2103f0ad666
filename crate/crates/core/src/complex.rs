//! The coset graph G(n), the square complex B(n) built on it, balls around
//! the identity coset, link graphs and separated-set packing.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polygon::{self, Diagonal};
use crate::symmetry::{blocks_commute, CosetSpace, GeneratorSet, Permutation};

/// Documented default capacity limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Capacity {
    pub full_graph_max_n: usize,
    pub ball_max_n: usize,
    pub link_max_n: usize,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity {
            full_graph_max_n: 9,
            ball_max_n: 12,
            link_max_n: 200,
        }
    }
}

/// Which generator pairs span a square 2-cell.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceRule {
    /// Every pair of non-crossing diagonals `{e, f}` spans the square
    /// `(a, a·e, a·e·f', a·f)` with `f'` the image of `f` after twisting
    /// along `e`. These are the cells dual to codimension-2 faces of the
    /// associahedral tiling.
    #[default]
    NonCrossing,
    /// Every pair of generators that commute as permutations spans the square
    /// `(a, a·e, a·e·f, a·f)`.
    Commuting,
}

/// A 2-dimensional cell complex: a simple graph plus polygonal faces given
/// as vertex cycles.
#[derive(Clone, Debug)]
pub struct TwoComplex {
    graph: Graph,
    faces: Vec<Vec<u32>>,
    face_edges: Vec<Vec<(u32, i8)>>,
}

fn cycle_key(cycle: &[u32]) -> Vec<u32> {
    let m = cycle.len();
    let mut best: Option<Vec<u32>> = None;
    for rev in [false, true] {
        let seq: Vec<u32> = if rev {
            cycle.iter().rev().copied().collect()
        } else {
            cycle.to_vec()
        };
        for s in 0..m {
            let rot: Vec<u32> = (0..m).map(|i| seq[(s + i) % m]).collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

impl TwoComplex {
    /// Validates the faces, drops repeats (up to rotation and reversal of the
    /// boundary cycle, keeping the first traversal) and records each face's
    /// signed edge sequence. Edges are oriented from low to high id.
    pub fn new(graph: Graph, faces: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut kept = Vec::with_capacity(faces.len());
        let mut face_edges = Vec::with_capacity(faces.len());
        for face in faces {
            if face.len() < 3 {
                return Err(Error::domain(format!("face {face:?} has fewer than 3 vertices")));
            }
            let distinct: HashSet<_> = face.iter().collect();
            if distinct.len() != face.len() {
                return Err(Error::domain(format!("face {face:?} repeats a vertex")));
            }
            if !seen.insert(cycle_key(&face)) {
                continue;
            }
            let mut signed = Vec::with_capacity(face.len());
            for i in 0..face.len() {
                let (u, v) = (face[i] as usize, face[(i + 1) % face.len()] as usize);
                let e = graph.edge_index(u, v).ok_or_else(|| {
                    Error::domain(format!("face {face:?} uses a missing edge ({u}, {v})"))
                })?;
                signed.push((e as u32, if u < v { 1 } else { -1 }));
            }
            kept.push(face);
            face_edges.push(signed);
        }
        Ok(TwoComplex {
            graph,
            faces: kept,
            face_edges,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<u32>] {
        &self.faces
    }

    /// Per face, the traversed edges with sign +1 when traversed low to high.
    pub fn face_edges(&self) -> &[Vec<(u32, i8)>] {
        &self.face_edges
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Subcomplex induced on `keep` (ascending): an edge survives iff both
    /// endpoints do, a face iff all its vertices do.
    pub fn induced(&self, keep: &[usize]) -> (TwoComplex, Vec<usize>) {
        let (graph, map) = self.graph.induced(keep);
        let mut new_id = vec![u32::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i as u32;
        }
        let faces = self
            .faces
            .iter()
            .filter_map(|f| {
                f.iter()
                    .map(|&v| {
                        let id = new_id[v as usize];
                        (id != u32::MAX).then_some(id)
                    })
                    .collect::<Option<Vec<u32>>>()
            })
            .collect();
        let c = TwoComplex::new(graph, faces).expect("induced faces stay valid");
        (c, map)
    }

    /// Faces as vertex-cycle lines.
    pub fn faces_text(&self) -> String {
        let mut out = String::new();
        for f in &self.faces {
            let parts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    /// Generator steps that return to the same coset.
    pub loops: usize,
    /// Pairs of generators reaching the same neighbour from one coset.
    pub collisions: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FaceStats {
    pub candidates: usize,
    pub degenerate_dropped: usize,
    pub outside_ball: usize,
    pub faces: usize,
}

/// The coset graph G(n), or the ball of radius `radius` around the identity
/// coset when built with a radius. Vertex ids follow BFS order from the
/// identity coset, so `levels` is non-decreasing.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    n: usize,
    radius: Option<usize>,
    space: CosetSpace,
    gens: GeneratorSet,
    reps: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    levels: Vec<u32>,
    graph: Graph,
    stats: GraphStats,
}

impl CosetGraph {
    fn explore(n: usize, radius: Option<usize>) -> Result<Self> {
        polygon::check_polygon(n)?;
        let space = CosetSpace::new(n);
        let gens = GeneratorSet::new(n)?;
        let root = space.canonical(&Permutation::identity(n)).into_inner();
        let mut reps = vec![root.clone()];
        let mut index = HashMap::from([(root, 0u32)]);
        let mut levels = vec![0u32];
        let mut next = 0;
        while next < reps.len() {
            let level = levels[next];
            if radius.is_some_and(|r| level as usize >= r) {
                break;
            }
            let here = reps[next].clone();
            for (_, t) in gens.iter() {
                let c = space.canonical(&here.compose(t)).into_inner();
                if !index.contains_key(&c) {
                    index.insert(c.clone(), reps.len() as u32);
                    reps.push(c);
                    levels.push(level + 1);
                }
            }
            next += 1;
        }

        let mut stats = GraphStats::default();
        let mut edges = Vec::new();
        for (u, rep) in reps.iter().enumerate() {
            let mut seen = HashSet::new();
            for (_, t) in gens.iter() {
                let c = space.canonical(&rep.compose(t)).into_inner();
                let Some(&v) = index.get(&c) else { continue };
                if v as usize == u {
                    stats.loops += 1;
                } else if !seen.insert(v) {
                    stats.collisions += 1;
                } else {
                    edges.push((u, v as usize));
                }
            }
        }
        let graph = Graph::from_edges(reps.len(), edges)?;
        Ok(CosetGraph {
            n,
            radius,
            space,
            gens,
            reps,
            index,
            levels,
            graph,
            stats,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn radius(&self) -> Option<usize> {
        self.radius
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn space(&self) -> &CosetSpace {
        &self.space
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn stats(&self) -> GraphStats {
        self.stats
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        let top = self.levels.iter().copied().max().unwrap_or(0) as usize;
        let mut sizes = vec![0; top + 1];
        for &l in &self.levels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// Vertex id of the coset containing `p`, if it was explored.
    pub fn vertex_of(&self, p: &Permutation) -> Option<usize> {
        let c = self.space.canonical(p).into_inner();
        self.index.get(&c).map(|&v| v as usize)
    }
}

/// G(n) in full. Rejects `n` above `capacity.full_graph_max_n`.
pub fn build_coset_graph(n: usize, capacity: &Capacity) -> Result<CosetGraph> {
    if n > capacity.full_graph_max_n {
        return Err(Error::Capacity {
            what: "coset graph G(n)",
            n,
            limit: capacity.full_graph_max_n,
        });
    }
    CosetGraph::explore(n, None)
}

/// The radius-`k` ball of G(n) explored directly from the identity coset,
/// without building the whole graph.
pub fn build_ball_graph(n: usize, k: usize, capacity: &Capacity) -> Result<CosetGraph> {
    if n > capacity.ball_max_n {
        return Err(Error::Capacity {
            what: "ball B(n,k)",
            n,
            limit: capacity.ball_max_n,
        });
    }
    CosetGraph::explore(n, Some(k))
}

/// Generator index triples `(e, f', f)` spanning squares
/// `(a, a·e, a·e·f', a·f)` under the given rule.
fn square_generators(gens: &GeneratorSet, rule: FaceRule) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (e, f) = (gens.diagonal(i), gens.diagonal(j));
            match rule {
                FaceRule::NonCrossing => {
                    if e.crosses_unchecked(f) {
                        continue;
                    }
                    let moved = e.transport(f);
                    let m = gens.index_of(&moved).expect("transported diagonal is a generator");
                    out.push((i, m, j));
                }
                FaceRule::Commuting => {
                    if blocks_commute(e, f) {
                        out.push((i, j, j));
                    }
                }
            }
        }
    }
    out
}

/// A coset graph together with its square 2-cells: B(n), or B(n, k) when the
/// graph is a ball.
#[derive(Clone, Debug)]
pub struct CosetComplex {
    graph: CosetGraph,
    complex: TwoComplex,
    rule: FaceRule,
    face_stats: FaceStats,
}

impl CosetComplex {
    pub fn coset_graph(&self) -> &CosetGraph {
        &self.graph
    }

    pub fn complex(&self) -> &TwoComplex {
        &self.complex
    }

    pub fn rule(&self) -> FaceRule {
        self.rule
    }

    pub fn face_stats(&self) -> FaceStats {
        self.face_stats
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    /// Identity coset (always vertex 0).
    pub fn root(&self) -> usize {
        0
    }
}

/// Attaches the square faces to a coset graph. Squares whose four cosets are
/// not distinct are dropped and counted; squares leaving an explored ball
/// are skipped.
pub fn attach_faces(g: CosetGraph, rule: FaceRule) -> Result<CosetComplex> {
    let squares = square_generators(&g.gens, rule);
    let mut stats = FaceStats::default();
    let mut faces = Vec::new();
    for rep in &g.reps {
        for &(e, moved, f) in &squares {
            stats.candidates += 1;
            let re = rep.compose(g.gens.permutation(e));
            let corners = [
                rep.clone(),
                re.compose(g.gens.permutation(moved)),
                rep.compose(g.gens.permutation(f)),
            ];
            let ids: Option<Vec<usize>> = [&corners[0], &re, &corners[1], &corners[2]]
                .iter()
                .map(|p| g.vertex_of(p))
                .collect();
            let Some(ids) = ids else {
                stats.outside_ball += 1;
                continue;
            };
            let distinct: HashSet<_> = ids.iter().collect();
            if distinct.len() < 4 {
                stats.degenerate_dropped += 1;
                continue;
            }
            faces.push(ids.into_iter().map(|v| v as u32).collect());
        }
    }
    let complex = TwoComplex::new(g.graph.clone(), faces)?;
    stats.faces = complex.face_count();
    Ok(CosetComplex {
        graph: g,
        complex,
        rule,
        face_stats: stats,
    })
}

/// B(n) with the default face rule.
pub fn build_b(n: usize, capacity: &Capacity) -> Result<CosetComplex> {
    attach_faces(build_coset_graph(n, capacity)?, FaceRule::NonCrossing)
}

/// B(n, k) explored directly (usable beyond the full-graph capacity).
pub fn build_ball(n: usize, k: usize, capacity: &Capacity) -> Result<CosetComplex> {
    attach_faces(build_ball_graph(n, k, capacity)?, FaceRule::NonCrossing)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallMetadata {
    pub n: usize,
    pub k: usize,
    /// Ball vertex id to B(n) vertex id.
    pub vertex_map: Vec<usize>,
    pub level_sizes: Vec<usize>,
}

/// Subcomplex of `b` induced on cosets within distance `k` of the identity.
pub fn ball_complex(b: &CosetComplex, k: usize) -> Result<(TwoComplex, BallMetadata)> {
    let n = b.n();
    if n >= 2 && k > n - 2 {
        return Err(Error::domain(format!("ball radius {k} exceeds n - 2 = {}", n - 2)));
    }
    let levels = b.graph.levels();
    let keep: Vec<usize> = (0..levels.len()).filter(|&v| levels[v] as usize <= k).collect();
    let (c, map) = b.complex.induced(&keep);
    let mut level_sizes = vec![0; k + 1];
    for &v in &keep {
        level_sizes[levels[v] as usize] += 1;
    }
    Ok((
        c,
        BallMetadata {
            n,
            k,
            vertex_map: map,
            level_sizes,
        },
    ))
}

/// A ball with the identity vertex (id 0) removed: A(n, 2) for radius 2.
pub fn punctured_ball(ball: &TwoComplex) -> (TwoComplex, Vec<usize>) {
    let keep: Vec<usize> = (1..ball.vertex_count()).collect();
    ball.induced(&keep)
}

/// L(n): diagonals (in `polygon::diagonals` order), adjacent when their
/// interiors are disjoint.
pub fn link_graph(n: usize, capacity: &Capacity) -> Result<Graph> {
    if n > capacity.link_max_n {
        return Err(Error::Capacity {
            what: "link graph L(n)",
            n,
            limit: capacity.link_max_n,
        });
    }
    let ds = polygon::diagonals(n)?;
    let mut edges = Vec::new();
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            if !ds[i].crosses_unchecked(&ds[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(ds.len(), edges)
}

/// Index of each diagonal of the n-gon inside L(n + 1) (same block, larger
/// polygon).
pub fn link_embedding(n: usize) -> Result<Vec<usize>> {
    let big = polygon::diagonals(n + 1)?;
    polygon::diagonals(n)?
        .iter()
        .map(|d| {
            let lifted = Diagonal::new(d.k(), d.l(), n + 1)?;
            big.binary_search(&lifted)
                .map_err(|_| Error::Consistency(format!("{d} has no image in L({})", n + 1)))
        })
        .collect()
}

/// Greedy maximal set with pairwise distance at least `min_dist`, scanning
/// vertices in ascending id order.
pub fn greedy_separated_set(g: &Graph, min_dist: u32) -> Vec<usize> {
    assert!(min_dist >= 1);
    let mut blocked = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    for v in 0..g.vertex_count() {
        if blocked[v] {
            continue;
        }
        chosen.push(v);
        for (w, &d) in g.bfs_bounded(v, min_dist - 1).iter().enumerate() {
            if d < min_dist {
                blocked[w] = true;
            }
        }
    }
    chosen
}

pub fn is_separated(g: &Graph, set: &[usize], min_dist: u32) -> bool {
    set.iter().all(|&a| {
        let d = g.bfs_distances(a);
        set.iter().all(|&b| a == b || d[b] >= min_dist)
    })
}

/// Every vertex outside `set` is within `min_dist - 1` of some member.
pub fn is_maximal(g: &Graph, set: &[usize], min_dist: u32) -> bool {
    let mut covered = vec![false; g.vertex_count()];
    for &a in set {
        for (w, d) in g.bfs_distances(a).into_iter().enumerate() {
            if d < min_dist {
                covered[w] = true;
            }
        }
    }
    covered.into_iter().all(|c| c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingReport {
    pub n: usize,
    pub min_dist: u32,
    pub set_size: usize,
    pub separated: bool,
    pub maximal: bool,
    pub m_value: u64,
    pub lower_bound: u64,
    pub members: Vec<usize>,
}

pub fn packing_report(n: usize, capacity: &Capacity) -> Result<PackingReport> {
    let g = build_coset_graph(n, capacity)?;
    let set = greedy_separated_set(g.graph(), 5);
    let m = polygon::m_formula(n)?.value;
    Ok(PackingReport {
        n,
        min_dist: 5,
        set_size: set.len(),
        separated: is_separated(g.graph(), &set, 5),
        maximal: is_maximal(g.graph(), &set, 5),
        m_value: m,
        lower_bound: m * set.len() as u64,
        members: set,
    })
}
