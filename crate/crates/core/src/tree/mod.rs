//! Trees, palms, distances and end-palm decomposition.

mod decompose;
mod palm;
mod random;

pub use decompose::{decompose, Decomposition, EndPalm, EndPath};
pub use palm::{build_olive, build_palm, build_regular_palm, PalmEmbedding, PalmSpec};
pub use random::{random_tree, random_tree_with_rng};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected, unweighted tree on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted, and neighbor lists are
/// sorted ascending, so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTree(
                "a tree needs at least one vertex".into(),
            ));
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidTree(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        if normalized.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "expected {} edges for {n} vertices, got {}",
                n - 1,
                normalized.len()
            )));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidTree(format!(
                "parallel edge {}-{}",
                w[0].0, w[0].1
            )));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let tree = Tree {
            edges: normalized,
            adjacency,
        };
        // n - 1 edges plus connectivity rules out cycles.
        let reached = tree.bfs_distances(0).iter().filter(|d| d.is_some()).count();
        if reached != n {
            return Err(Error::InvalidTree(format!(
                "graph is disconnected ({reached} of {n} vertices reachable from 0)"
            )));
        }
        Ok(tree)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Tree::new(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// True for paths of any length, including the single vertex.
    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        self.bfs_distances(source)
            .into_iter()
            .map(|d| d.expect("tree is connected"))
            .collect()
    }

    /// Vertices in breadth-first order from `source`, ties broken by index.
    pub fn bfs_order(&self, source: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut order = Vec::with_capacity(self.len());
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// All-pairs distances via one breadth-first traversal per vertex.
    pub fn all_pairs_distance(&self) -> DistanceTable {
        let n = self.len();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(self.distances_from(s).into_iter().map(|d| d as u32));
        }
        DistanceTable { n, data }
    }
}

/// Symmetric `n x n` table of shortest-path lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    data: Vec<u32>,
}

impl DistanceTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.data[u * self.n + v] as usize
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.data.iter().copied().max().unwrap_or(0) as usize
    }
}
