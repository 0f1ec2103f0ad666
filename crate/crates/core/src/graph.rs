use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const UNREACHABLE: u32 = u32::MAX;

/// Simple undirected graph with a sorted, deduplicated edge list `(u, v)`,
/// `u < v`. Edge ids are positions in that list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<u32>>,
}

impl Graph {
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            list.push((u.min(v) as u32, u.max(v) as u32));
        }
        list.sort_unstable();
        list.dedup();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &list {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: list,
            adjacency,
        })
    }

    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3);
        Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m))).unwrap()
    }

    pub fn complete(m: usize) -> Self {
        Graph::from_edges(m, (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    /// Every edge replaced by a path of length two through a new vertex.
    /// New vertices follow the originals, in edge-id order.
    pub fn subdivision(&self) -> Graph {
        let base = self.vertex_count;
        Graph::from_edges(
            base + self.edges.len(),
            self.edges.iter().enumerate().flat_map(|(i, &(u, v))| {
                [(u as usize, base + i), (v as usize, base + i)]
            }),
        )
        .unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v) as u32, u.max(v) as u32);
        self.edges.binary_search(&key).ok()
    }

    pub fn bfs_distances(&self, root: usize) -> Vec<u32> {
        self.bfs_bounded(root, UNREACHABLE)
    }

    /// BFS distances, not exploring beyond `limit`.
    pub fn bfs_bounded(&self, root: usize, limit: u32) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            if du >= limit {
                continue;
            }
            for &w in &self.adjacency[u] {
                let w = w as usize;
                if dist[w] == UNREACHABLE {
                    dist[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w as usize);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.component_count() == 1
    }

    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        let d = self.bfs_distances(v);
        if d.contains(&UNREACHABLE) {
            None
        } else {
            d.into_iter().max()
        }
    }

    /// Exact diameter by BFS from every vertex; `None` if disconnected.
    pub fn diameter(&self) -> Option<u32> {
        (0..self.vertex_count)
            .into_par_iter()
            .map(|v| self.eccentricity(v))
            .try_reduce(|| 0, |a, b| Some(a.max(b)))
    }

    /// Induced subgraph on `keep` (ascending old ids). Returns the graph and
    /// the new-to-old vertex map.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![u32::MAX; self.vertex_count];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i as u32;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            let (a, b) = (new_id[u as usize], new_id[v as usize]);
            (a != u32::MAX && b != u32::MAX).then_some((a as usize, b as usize))
        });
        (
            Graph::from_edges(keep.len(), edges).expect("induced edges are valid"),
            keep.to_vec(),
        )
    }

    /// Edge-list text: a `# n=<n> type=<kind>` header then `u v` per line.
    pub fn to_edge_list(&self, n: usize, kind: &str) -> String {
        let mut out = format!("# n={n} type={kind}\n");
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list format written by [`Graph::to_edge_list`]. The
    /// vertex count is one more than the largest id unless `vertex_count`
    /// says otherwise.
    pub fn parse_edge_list(text: &str, vertex_count: Option<usize>) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut max_id = None::<usize>;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => {
                    max_id = Some(max_id.unwrap_or(0).max(u).max(v));
                    edges.push((u, v));
                }
                _ => {
                    return Err(Error::domain(format!(
                        "edge list line {}: expected `u v`, got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        let count = vertex_count.unwrap_or(max_id.map_or(0, |m| m + 1));
        Graph::from_edges(count, edges)
    }
}
