//! Canonical labeling by partition refinement and individualization.
//!
//! Two graphs are isomorphic iff their canonical forms are equal. The search
//! refines an ordered vertex partition by neighbor counts, individualizes
//! vertices of the first non-singleton cell, and keeps the smallest relabeled
//! adjacency over all discrete leaves. Interchangeable twins inside a cell are
//! tried only once.

use crate::graph::{bits, Graph};

type Partition = Vec<Vec<usize>>;

#[derive(Debug, Clone)]
pub struct Canonical {
    pub graph: Graph,
    /// `labeling[v]` is the canonical label of original vertex `v`.
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.n();
    if n == 0 {
        return Canonical { graph: g.clone(), labeling: Vec::new() };
    }
    let mut cells: Partition = Vec::new();
    let max_deg = g.max_degree();
    for d in 0..=max_deg {
        let cell: Vec<usize> = (0..n).filter(|&v| g.degree(v) == d).collect();
        if !cell.is_empty() {
            cells.push(cell);
        }
    }
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, cells, &mut best);
    let (rows, labeling) = best.expect("at least one leaf");
    Canonical { graph: Graph::from_adjacency(rows), labeling }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.m() == b.m()
        && degree_sequence(a) == degree_sequence(b)
        && canonical_form(a).graph == canonical_form(b).graph
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut labeling = vec![0; g.n()];
        for (i, c) in cells.iter().enumerate() {
            labeling[c[0]] = i;
        }
        let rows = relabeled_rows(g, &labeling);
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, labeling));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, next, best);
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = !(1u64 << u | 1u64 << v);
    g.neighbor_mask(u) & strip == g.neighbor_mask(v) & strip
}

/// Splits cells by neighbor counts into each splitter cell until stable.
/// Sub-cells are ordered by count, which keeps the result label-invariant.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut out: Partition = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    out.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((g.neighbor_mask(v) & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        out.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if out.len() != cells.len() {
                changed = true;
            }
            cells = out;
            s += 1;
        }
    }
    cells
}

fn relabeled_rows(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for v in 0..g.n() {
        for w in bits(g.neighbor_mask(v)) {
            rows[labeling[v]] |= 1 << labeling[w];
        }
    }
    rows
}
