//! Exact chromatic index by backtracking inside the Vizing envelope `{Δ, Δ+1}`.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph};

pub fn chromatic_index(g: &Graph) -> Result<usize> {
    Ok(optimal_proper_edge_coloring(g)?.k())
}

/// A proper edge coloring with exactly `χ'(g)` colors.
pub fn optimal_proper_edge_coloring(g: &Graph) -> Result<EdgeColoring> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let delta = g.max_degree();
    if let Some(c) = proper_edge_coloring_with(g, delta) {
        return Ok(c);
    }
    Ok(proper_edge_coloring_with(g, delta + 1).expect("Vizing: Δ+1 colors always suffice"))
}

/// Searches for a proper edge coloring with at most `k` colors.
pub fn proper_edge_coloring_with(g: &Graph, k: usize) -> Option<EdgeColoring> {
    if k == 0 || k > 63 || k < g.max_degree() {
        return None;
    }
    // Each color class is a matching.
    if g.m() > k * (g.n() / 2) {
        return None;
    }
    let order = edge_order(g);
    let mut search = Backtrack {
        g,
        k,
        order: &order,
        used: vec![0; g.n()],
        colors: vec![0; g.m()],
    };
    if !search.run(0, 0) {
        return None;
    }
    let used = search.colors.iter().copied().max().unwrap_or(1);
    Some(EdgeColoring::new(g.clone(), search.colors, used).expect("colors lie in range"))
}

/// Edges at a maximum-degree vertex first, then the rest in BFS order.
fn edge_order(g: &Graph) -> Vec<usize> {
    let hub = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let mut placed = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    let mut queue = std::collections::VecDeque::from([hub]);
    let mut seen = 1u64 << hub;
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            let e = g.edge_index(v, w).unwrap();
            if !placed[e] {
                placed[e] = true;
                order.push(e);
            }
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                queue.push_back(w);
            }
        }
    }
    order.extend((0..g.m()).filter(|&e| !placed[e]));
    order
}

struct Backtrack<'a> {
    g: &'a Graph,
    k: usize,
    order: &'a [usize],
    used: Vec<u64>,
    colors: Vec<usize>,
}

impl Backtrack<'_> {
    fn run(&mut self, idx: usize, max_used: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let e = self.order[idx];
        let (u, v) = self.g.edges()[e];
        // A fresh color is interchangeable with any other fresh one.
        let limit = self.k.min(max_used + 1);
        let mut free = !(self.used[u] | self.used[v]) & low_mask(limit);
        while free != 0 {
            let bit = free & free.wrapping_neg();
            free &= free - 1;
            let c = bit.trailing_zeros() as usize + 1;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.colors[e] = c;
            if self.run(idx + 1, max_used.max(c)) {
                return true;
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
        }
        self.colors[e] = 0;
        false
    }
}
