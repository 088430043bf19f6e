//! Edge colorings, proper sets and proper cuts.
//!
//! A set of edges is *proper* when no two of its edges share an endpoint and a
//! color. A proper cut separating `u` and `v` exists iff some vertex set `S`
//! with `u ∈ S`, `v ∉ S` has a proper crossing set `E[S, V∖S]`: any cut `F`
//! contains the crossing set of `u`'s component in `G − F`, and subsets of
//! proper sets are proper. All searches here run over such sides `S`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Edge, Graph};

pub const MAX_COLORS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: Graph,
    colors: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    /// `colors[i]` is the color of `graph.edges()[i]`, in `1..=k`.
    pub fn new(graph: Graph, colors: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 || k > MAX_COLORS {
            return Err(Error::InvalidColoring(format!("color count k={k} must lie in 1..={MAX_COLORS}")));
        }
        if colors.len() != graph.m() {
            return Err(Error::InvalidColoring(format!(
                "{} colors given for {} edges",
                colors.len(),
                graph.m()
            )));
        }
        if let Some((i, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            let (u, v) = graph.edges()[i];
            return Err(Error::InvalidColoring(format!("edge {u}-{v} has color {c} outside 1..={k}")));
        }
        Ok(EdgeColoring { graph, colors, k })
    }

    pub fn uniform(graph: Graph) -> Self {
        let colors = vec![1; graph.m()];
        EdgeColoring { graph, colors, k: 1 }
    }

    /// Builds a coloring from `(u, v, color)` triples covering every edge once.
    pub fn from_triples(graph: Graph, triples: &[(usize, usize, usize)], k: usize) -> Result<Self> {
        let mut colors = vec![0; graph.m()];
        for &(u, v, c) in triples {
            let i = graph.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?;
            if colors[i] != 0 {
                return Err(Error::InvalidColoring(format!("edge {u}-{v} colored twice")));
            }
            colors[i] = c;
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            let (u, v) = graph.edges()[i];
            return Err(Error::InvalidColoring(format!("edge {u}-{v} has no color")));
        }
        EdgeColoring::new(graph, colors, k)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.graph.edge_index(u, v).map(|i| self.colors[i])
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        self.colors.iter().fold(0u64, |acc, &c| acc | 1 << (c - 1)).count_ones() as usize
    }

    /// Renumbers colors by first appearance in edge order, so permuted color
    /// classes give equal results.
    pub fn canonical_colors(&self) -> Vec<usize> {
        let mut map = vec![0; self.k + 1];
        let mut next = 0;
        self.colors
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect()
    }

    /// Text form: a `k=<int>` header, then one `u v color` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("k={}\n", self.k);
        for (&(u, v), c) in self.graph.edges().iter().zip(&self.colors) {
            writeln!(out, "{u} {v} {c}").unwrap();
        }
        out
    }

    /// Parses the text form for the given graph. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse_text(graph: Graph, text: &str) -> Result<Self> {
        let bad = |line: usize, what: &str| Error::InvalidColoring(format!("line {line}: {what}"));
        let mut k = None;
        let mut triples = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if k.is_none() {
                let value = line.strip_prefix("k=").ok_or_else(|| bad(i + 1, "expected header k=<int>"))?;
                k = Some(value.trim().parse::<usize>().map_err(|_| bad(i + 1, "k is not an integer"))?);
                continue;
            }
            let fields: Vec<usize> = line
                .split_whitespace()
                .map(|f| f.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad(i + 1, "expected three integers"))?;
            match fields[..] {
                [u, v, c] => triples.push((u, v, c)),
                _ => return Err(bad(i + 1, "expected `u v color`")),
            }
        }
        let k = k.ok_or_else(|| Error::InvalidColoring("missing header k=<int>".into()))?;
        EdgeColoring::from_triples(graph, &triples, k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    /// Sorted vertex list of the side containing the first vertex of the pair.
    pub side: Vec<usize>,
    pub crossing_edges: Vec<Edge>,
    pub separated_pair: (usize, usize),
}

impl CutWitness {
    pub fn from_side(g: &Graph, side_mask: u64, pair: (usize, usize)) -> Self {
        CutWitness {
            side: bits(side_mask).collect(),
            crossing_edges: crossing_edges(g, side_mask),
            separated_pair: pair,
        }
    }

    /// Recomputes the crossing set from `side` and checks that it matches,
    /// separates the pair and is proper under `coloring`.
    pub fn is_valid_for(&self, coloring: &EdgeColoring) -> bool {
        let g = coloring.graph();
        if self.side.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mask = self.side.iter().fold(0u64, |m, &v| m | 1 << v);
        let (u, v) = self.separated_pair;
        mask >> u & 1 == 1
            && mask >> v & 1 == 0
            && crossing_edges(g, mask) == self.crossing_edges
            && is_proper_set(coloring, &self.crossing_edges).unwrap_or(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCertificate {
    pub coloring: EdgeColoring,
    /// One witness per unordered pair, in order `(0,1), (0,2), …, (n-2,n-1)`.
    pub witnesses: Vec<CutWitness>,
}

impl PdCertificate {
    /// Re-checks every witness from scratch.
    pub fn check(&self) -> bool {
        let n = self.coloring.graph().n();
        self.witnesses.len() == n * (n - 1) / 2
            && pairs(n).zip(&self.witnesses).all(|(p, w)| w.separated_pair == p && w.is_valid_for(&self.coloring))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Certified(PdCertificate),
    Failed { pair: (usize, usize) },
}

impl Verification {
    pub fn certificate(self) -> Option<PdCertificate> {
        match self {
            Verification::Certified(c) => Some(c),
            Verification::Failed { .. } => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Verification::Certified(_))
    }
}

/// Unordered vertex pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

pub fn crossing_edges(g: &Graph, side_mask: u64) -> Vec<Edge> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| (side_mask >> u & 1) != (side_mask >> v & 1))
        .collect()
}

pub fn is_matching(edges: &[Edge]) -> bool {
    let mut seen = 0u64;
    for &(u, v) in edges {
        if seen >> u & 1 == 1 || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << u | 1 << v;
    }
    true
}

pub fn is_proper_set(coloring: &EdgeColoring, edges: &[Edge]) -> Result<bool> {
    let g = coloring.graph();
    let mut seen = vec![0u64; g.n()];
    for &(u, v) in edges {
        let c = coloring.color_of(u, v).ok_or(Error::MissingEdge(u, v))?;
        let bit = 1u64 << (c - 1);
        if seen[u] & bit != 0 || seen[v] & bit != 0 {
            return Ok(false);
        }
        seen[u] |= bit;
        seen[v] |= bit;
    }
    Ok(true)
}

fn side_is_proper(coloring: &EdgeColoring, side_mask: u64) -> bool {
    let g = coloring.graph();
    let mut seen = [0u64; 64];
    for (&(u, v), &c) in g.edges().iter().zip(coloring.colors()) {
        if (side_mask >> u & 1) == (side_mask >> v & 1) {
            continue;
        }
        let bit = 1u64 << (c - 1);
        if seen[u] & bit != 0 || seen[v] & bit != 0 {
            return false;
        }
        seen[u] |= bit;
        seen[v] |= bit;
    }
    true
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange(w));
        }
    }
    if u == v {
        return Err(Error::SamePair(u));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Finds a proper cut separating `u` from `v`, returning the witness whose
/// side (as a sorted vertex list) is lexicographically smallest.
pub fn find_proper_cut(coloring: &EdgeColoring, u: usize, v: usize) -> Result<Option<CutWitness>> {
    check_pair(coloring.graph(), u, v)?;
    Ok(search_sides(coloring, u, v, 0, 0).map(|side| CutWitness::from_side(coloring.graph(), side, (u, v))))
}

// Preorder over sorted vertex lists visits them in lexicographic order.
fn search_sides(coloring: &EdgeColoring, u: usize, v: usize, prefix: u64, next: usize) -> Option<u64> {
    if prefix >> u & 1 == 1 && side_is_proper(coloring, prefix) {
        return Some(prefix);
    }
    let n = coloring.graph().n();
    for x in next..n {
        if x == v {
            continue;
        }
        // Without u below x the list can never contain u.
        if x > u && prefix >> u & 1 == 0 {
            break;
        }
        if let Some(side) = search_sides(coloring, u, v, prefix | 1 << x, x + 1) {
            return Some(side);
        }
    }
    None
}

/// Checks that every pair of distinct vertices has a proper cut. Pairs are
/// checked in parallel; the reported failure is the first in pair order.
pub fn verify_pd_coloring(coloring: &EdgeColoring) -> Result<Verification> {
    let g = coloring.graph();
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all: Vec<(usize, usize)> = pairs(g.n()).collect();
    let found: Vec<Option<CutWitness>> = all
        .par_iter()
        .map(|&(u, v)| find_proper_cut(coloring, u, v).expect("pair is valid"))
        .collect();
    let mut witnesses = Vec::with_capacity(found.len());
    for (pair, w) in all.into_iter().zip(found) {
        match w {
            Some(w) => witnesses.push(w),
            None => return Ok(Verification::Failed { pair }),
        }
    }
    Ok(Verification::Certified(PdCertificate { coloring: coloring.clone(), witnesses }))
}

/// Witness derived from an explicit edge cut `cut`: the side is `u`'s
/// component in `G − cut`, whose crossing set lies inside `cut`. Returns
/// `None` if `cut` does not separate the pair or the crossing set is not
/// proper.
pub fn witness_from_cut(coloring: &EdgeColoring, cut: &[Edge], u: usize, v: usize) -> Result<Option<CutWitness>> {
    let g = coloring.graph();
    check_pair(g, u, v)?;
    let rest = g.without_edges(cut)?;
    let side = rest.reach_within(u, rest.vertex_mask());
    if side >> v & 1 == 1 {
        return Ok(None);
    }
    let w = CutWitness::from_side(g, side, (u, v));
    Ok(is_proper_set(coloring, &w.crossing_edges)?.then_some(w))
}

/// Restricts `coloring` to `subgraph`, whose vertex `i` is `label_map[i]` in
/// the colored graph.
pub fn restrict_coloring(coloring: &EdgeColoring, subgraph: &Graph, label_map: &[usize]) -> Result<EdgeColoring> {
    if label_map.len() != subgraph.n() {
        return Err(Error::Precondition(format!(
            "label map has {} entries for {} vertices",
            label_map.len(),
            subgraph.n()
        )));
    }
    let colors = subgraph
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (u, v) = (label_map[a], label_map[b]);
            coloring.color_of(u, v).ok_or(Error::MissingEdge(u, v))
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeColoring::new(subgraph.clone(), colors, coloring.k())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k4_minus_e() -> EdgeColoring {
        // v1..v4 -> 0..3, missing v2v4.
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        EdgeColoring::from_triples(g, &[(0, 1, 1), (0, 2, 1), (2, 3, 1), (0, 3, 2), (1, 2, 2)], 2).unwrap()
    }

    #[test]
    fn coloring_validation() {
        let g = cycle(3);
        assert!(EdgeColoring::new(g.clone(), vec![1, 2], 2).is_err());
        assert!(EdgeColoring::new(g.clone(), vec![1, 2, 3], 2).is_err());
        assert!(EdgeColoring::new(g.clone(), vec![1, 1, 1], 0).is_err());
        assert!(EdgeColoring::from_triples(g.clone(), &[(0, 1, 1), (1, 2, 1)], 1).is_err());
        assert!(EdgeColoring::from_triples(g, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 1, 1)], 1).is_err());
    }

    #[test]
    fn text_round_trip_and_errors() {
        let c = k4_minus_e();
        let back = EdgeColoring::parse_text(c.graph().clone(), &c.to_text()).unwrap();
        assert_eq!(back, c);
        let g = c.graph().clone();
        assert!(EdgeColoring::parse_text(g.clone(), "0 1 1\n").is_err());
        assert!(EdgeColoring::parse_text(g.clone(), "k=2\n0 1\n").is_err());
        assert!(EdgeColoring::parse_text(g, "k=2\n0 1 x\n").is_err());
    }

    #[test]
    fn matchings_are_proper() {
        let c = EdgeColoring::uniform(cycle(6));
        assert!(is_proper_set(&c, &[(0, 1), (2, 3), (4, 5)]).unwrap());
        assert!(!is_proper_set(&c, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(is_proper_set(&c, &[(0, 3)]), Err(Error::MissingEdge(0, 3)));
    }

    #[test]
    fn monochromatic_star_is_not_proper() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = EdgeColoring::uniform(star);
        assert!(!is_proper_set(&c, &[(0, 1), (0, 2)]).unwrap());
        assert!(is_proper_set(&c, &[(0, 3)]).unwrap());
    }

    #[test]
    fn c5_uniform_cut_between_nonadjacent() {
        let c = EdgeColoring::uniform(cycle(5));
        let w = find_proper_cut(&c, 0, 2).unwrap().unwrap();
        assert_eq!(w.side, vec![0, 1]);
        assert_eq!(w.crossing_edges, vec![(0, 4), (1, 2)]);
        assert!(is_matching(&w.crossing_edges));
        assert!(w.is_valid_for(&c));
    }

    #[test]
    fn k3_uniform_has_no_cut() {
        let c = EdgeColoring::uniform(cycle(3));
        for (u, v) in pairs(3) {
            assert_eq!(find_proper_cut(&c, u, v).unwrap(), None);
        }
        assert_eq!(verify_pd_coloring(&c).unwrap(), Verification::Failed { pair: (0, 1) });
    }

    #[test]
    fn k4_minus_e_pair_v1_v3() {
        let c = k4_minus_e();
        let w = find_proper_cut(&c, 0, 2).unwrap().unwrap();
        assert!(w.is_valid_for(&c));
        // {v1v4, v1v3, v2v3} is one valid cut.
        let wanted = witness_from_cut(&c, &[(0, 3), (0, 2), (1, 2)], 0, 2).unwrap().unwrap();
        assert!(wanted.is_valid_for(&c));
        assert!(w.side <= wanted.side);
        assert!(verify_pd_coloring(&c).unwrap().is_certified());
    }

    #[test]
    fn pair_errors() {
        let c = EdgeColoring::uniform(cycle(4));
        assert_eq!(find_proper_cut(&c, 1, 1), Err(Error::SamePair(1)));
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let d = EdgeColoring::uniform(g);
        assert_eq!(find_proper_cut(&d, 0, 2), Err(Error::Disconnected));
        assert_eq!(verify_pd_coloring(&d), Err(Error::Disconnected));
    }

    #[test]
    fn k3_with_two_colors_verifies() {
        let g = cycle(3);
        let c = EdgeColoring::new(g, vec![1, 1, 2], 2).unwrap();
        let cert = verify_pd_coloring(&c).unwrap().certificate().unwrap();
        assert!(cert.check());
    }

    #[test]
    fn restriction_keeps_colors() {
        let c5 = EdgeColoring::new(cycle(5), vec![1, 1, 1, 1, 1], 1).unwrap();
        let (p4, map) = c5.graph().induced(&[0, 1, 2, 3]).unwrap();
        let r = restrict_coloring(&c5, &p4, &map).unwrap();
        assert_eq!(r.k(), 1);
        assert!(verify_pd_coloring(&r).unwrap().is_certified());
        let bogus = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(restrict_coloring(&c5, &bogus, &[0, 2]), Err(Error::MissingEdge(0, 2)));
    }

    #[test]
    fn canonical_colors_ignore_permutation() {
        let g = cycle(4);
        let a = EdgeColoring::new(g.clone(), vec![2, 1, 2, 3], 3).unwrap();
        let b = EdgeColoring::new(g, vec![3, 2, 3, 1], 3).unwrap();
        assert_eq!(a.canonical_colors(), b.canonical_colors());
        assert_eq!(a.used_colors(), 3);
    }
}
