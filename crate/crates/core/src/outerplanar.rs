//! Outerplanarity via the forbidden minors `K_4` and `K_{2,3}`.
//!
//! The search branches on vertex deletions and edge contractions until the
//! graph has as many vertices as the target, then looks for the target as a
//! spanning subgraph. Minors already shown not to contain the target are
//! remembered by canonical form.

use std::collections::HashSet;

use serde::Serialize;

use crate::bounds::pd_via_blocks;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::solver::SolveBudget;
use crate::stats::is_triangle_free;

/// Largest order accepted by the minor search.
pub const MAX_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ForbiddenMinor {
    K4,
    K23,
}

impl ForbiddenMinor {
    pub fn graph(self) -> Graph {
        match self {
            ForbiddenMinor::K4 => Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            ForbiddenMinor::K23 => Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        }
        .expect("fixed graphs are valid")
    }
}

/// One step of the reduction, in terms of original vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum MinorOp {
    Delete { vertices: Vec<usize> },
    Contract { a: Vec<usize>, b: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub minor: ForbiddenMinor,
    /// `branch_sets[i]` is the set of original vertices forming target vertex `i`.
    pub branch_sets: Vec<Vec<usize>>,
    pub operations: Vec<MinorOp>,
}

impl MinorWitness {
    /// Checks the minor model directly: disjoint connected branch sets with
    /// an edge between every pair the target needs.
    pub fn verify(&self, g: &Graph) -> bool {
        let target = self.minor.graph();
        if self.branch_sets.len() != target.n() {
            return false;
        }
        let mut used = 0u64;
        let mut masks = Vec::new();
        for set in &self.branch_sets {
            let mut mask = 0u64;
            for &v in set {
                if v >= g.n() || (used | mask) >> v & 1 == 1 {
                    return false;
                }
                mask |= 1 << v;
            }
            if mask == 0 || g.reach_within(set[0], mask) != mask {
                return false;
            }
            used |= mask;
            masks.push(mask);
        }
        target.edges().iter().all(|&(i, j)| bits(masks[i]).any(|v| g.neighbor_mask(v) & masks[j] != 0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum OuterplanarCheck {
    Outerplanar,
    NotOuterplanar(MinorWitness),
}

impl OuterplanarCheck {
    pub fn is_outerplanar(&self) -> bool {
        matches!(self, OuterplanarCheck::Outerplanar)
    }
}

pub fn is_outerplanar(g: &Graph) -> Result<OuterplanarCheck> {
    if g.n() > MAX_ORDER {
        return Err(Error::BudgetExceeded(format!("minor search over n={} > {MAX_ORDER} vertices", g.n())));
    }
    for minor in [ForbiddenMinor::K4, ForbiddenMinor::K23] {
        if let Some(w) = find_minor(g, minor) {
            return Ok(OuterplanarCheck::NotOuterplanar(w));
        }
    }
    Ok(OuterplanarCheck::Outerplanar)
}

pub fn find_minor(g: &Graph, minor: ForbiddenMinor) -> Option<MinorWitness> {
    let target = minor.graph();
    let mut search = MinorSearch { target: &target, failed: HashSet::new(), ops: Vec::new() };
    let branch: Vec<u64> = (0..g.n()).map(|v| 1u64 << v).collect();
    let sets = search.run(g.adjacency().to_vec(), branch)?;
    Some(MinorWitness {
        minor,
        branch_sets: sets.into_iter().map(|m| bits(m).collect()).collect(),
        operations: search.ops,
    })
}

struct MinorSearch<'a> {
    target: &'a Graph,
    failed: HashSet<Vec<u64>>,
    ops: Vec<MinorOp>,
}

impl MinorSearch<'_> {
    fn run(&mut self, mut adj: Vec<u64>, mut branch: Vec<u64>) -> Option<Vec<u64>> {
        let pushed = self.ops.len();
        // A vertex of degree at most 1 is never needed by a 2-connected minor.
        while let Some(v) = (0..adj.len()).find(|&v| adj[v].count_ones() <= 1) {
            self.ops.push(MinorOp::Delete { vertices: bits(branch[v]).collect() });
            adj = without_vertex(&adj, v);
            branch.remove(v);
        }
        let found = self.explore(&adj, &branch);
        if found.is_none() {
            self.ops.truncate(pushed);
        }
        found
    }

    fn explore(&mut self, adj: &[u64], branch: &[u64]) -> Option<Vec<u64>> {
        let n = adj.len();
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        if n < self.target.n() || m < self.target.m() {
            return None;
        }
        if n == self.target.n() {
            return self.embed(adj, branch);
        }
        let h = Graph::from_adjacency(adj.to_vec());
        let key = canonical_form(&h).graph.adjacency().to_vec();
        if self.failed.contains(&key) {
            return None;
        }
        for (u, v) in h.edges().to_vec() {
            self.ops.push(MinorOp::Contract { a: bits(branch[u]).collect(), b: bits(branch[v]).collect() });
            let (next, next_branch) = contract(adj, branch, u, v);
            if let Some(found) = self.run(next, next_branch) {
                return Some(found);
            }
            self.ops.pop();
        }
        for v in 0..n {
            self.ops.push(MinorOp::Delete { vertices: bits(branch[v]).collect() });
            let mut next_branch = branch.to_vec();
            next_branch.remove(v);
            if let Some(found) = self.run(without_vertex(adj, v), next_branch) {
                return Some(found);
            }
            self.ops.pop();
        }
        self.failed.insert(key);
        None
    }

    /// Looks for the target as a spanning subgraph by trying every bijection.
    fn embed(&self, adj: &[u64], branch: &[u64]) -> Option<Vec<u64>> {
        let n = adj.len();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if self.target.edges().iter().all(|&(i, j)| adj[perm[i]] >> perm[j] & 1 == 1) {
                return Some(perm.iter().map(|&p| branch[p]).collect());
            }
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Drops bit `v` from a mask and shifts the higher bits down.
fn squeeze(mask: u64, v: usize) -> u64 {
    let low = mask & ((1u64 << v) - 1);
    let high = if v + 1 >= 64 { 0 } else { (mask >> (v + 1)) << v };
    low | high
}

fn without_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    adj.iter().enumerate().filter(|&(w, _)| w != v).map(|(_, &row)| squeeze(row, v)).collect()
}

/// Merges `v` into `u`.
fn contract(adj: &[u64], branch: &[u64], u: usize, v: usize) -> (Vec<u64>, Vec<u64>) {
    let mut rows = adj.to_vec();
    let merged = (rows[u] | rows[v]) & !(1u64 << u | 1u64 << v);
    rows[u] = merged;
    for w in bits(merged) {
        rows[w] |= 1 << u;
    }
    let mut branch = branch.to_vec();
    branch[u] |= branch[v];
    branch.remove(v);
    (without_vertex(&rows, v), branch)
}

/// pd of a connected outerplanar graph: 1 exactly when triangle-free,
/// otherwise the maximum over blocks.
pub fn outerplanar_pd(g: &Graph, budget: &SolveBudget) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_outerplanar(g)?.is_outerplanar() {
        return Err(Error::Precondition("graph is not outerplanar".into()));
    }
    if is_triangle_free(g) {
        return Ok(1);
    }
    let pd = pd_via_blocks(g, budget)?;
    assert!(pd >= 2, "an outerplanar graph with a triangle has pd >= 2, solver says {pd}");
    Ok(pd)
}
