//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so every graph in this
//! crate has at most [`MAX_VERTICES`] vertices. Edges are kept sorted as pairs
//! `(u, v)` with `u < v`; the position of an edge in [`Graph::edges`] is its
//! *edge index*, which colorings and cut masks refer to.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order is irrelevant, but the
    /// same unordered pair may only appear once.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange(a));
            }
            if b >= n {
                return Err(Error::VertexOutOfRange(b));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u] >> v & 1 == 1 {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            let mut higher = row & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                edges.push((u, v));
            }
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Index of edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// Indices of the edges incident with `v`.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i)
            .collect()
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reach_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.reach_within(v, left);
            left &= !comp;
            out.push(bits(comp).collect());
        }
        out
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Keeps the vertices in `keep` (in increasing order, relabeled densely)
    /// and drops the listed edges. Returns the new graph and the map from new
    /// labels to old ones.
    pub fn induced_and_spanning_subgraph(
        &self,
        keep: &[usize],
        drop_edges: &[Edge],
    ) -> Result<(Graph, Vec<usize>)> {
        let mut keep_mask = 0u64;
        for &v in keep {
            if v >= self.n {
                return Err(Error::VertexOutOfRange(v));
            }
            keep_mask |= 1 << v;
        }
        let mut dropped = vec![false; self.m()];
        for &(u, v) in drop_edges {
            let idx = self.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?;
            dropped[idx] = true;
        }
        let label_map: Vec<usize> = bits(keep_mask).collect();
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &old) in label_map.iter().enumerate() {
            new_label[old] = i;
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, &(u, v))| !dropped[i] && keep_mask >> u & 1 == 1 && keep_mask >> v & 1 == 1)
            .map(|(_, &(u, v))| (new_label[u], new_label[v]));
        let sub = Graph::new(label_map.len(), edges)?;
        Ok((sub, label_map))
    }

    pub fn induced(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        self.induced_and_spanning_subgraph(keep, &[])
    }

    pub fn without_edges(&self, drop_edges: &[Edge]) -> Result<Graph> {
        let all: Vec<usize> = (0..self.n).collect();
        Ok(self.induced_and_spanning_subgraph(&all, drop_edges)?.0)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_adjacency(adj)
    }

    /// Adds the given edges; fails if any already exists.
    pub fn with_edges(&self, extra: &[Edge]) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain(extra.iter().copied()))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bit positions of `mask`, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
