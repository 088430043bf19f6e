//! Lower and upper bounds on pd, block composition and the minimum-size
//! census.

use serde::Serialize;

use crate::blocks::block_decomposition;
use crate::chromatic::chromatic_index;
use crate::enumerate::enumerate_connected_graphs;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{common_neighbor_bound, pd_exact, LowerBoundReason, PdOutcome, SolveBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerReason {
    Trivial,
    CommonNeighbor,
    CommonNeighborAdjacent,
    Subgraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperReason {
    ChromaticIndexMinusOne,
    HalfOrder,
    BlockComposition,
    FamilyFormula,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lower: usize,
    pub lower_reason: LowerReason,
    /// The pair behind a common-neighbor bound.
    pub lower_pair: Option<(usize, usize)>,
    pub upper: usize,
    pub upper_reason: UpperReason,
    pub chi_prime: usize,
    pub consistent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CommonNeighborBound {
    pub value: usize,
    /// A pair achieving `value`; `None` when the bound is the trivial 1.
    pub pair: Option<(usize, usize)>,
    pub common: usize,
    pub adjacent: bool,
}

fn require_nontrivial_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `max ⌈t/2⌉ + [uv ∈ E]` over pairs with `t ≥ 1` common neighbors,
/// floored at 1.
pub fn lower_bound_common_neighbors(g: &Graph) -> Result<CommonNeighborBound> {
    require_nontrivial_connected(g)?;
    Ok(match common_neighbor_bound(g) {
        (value, Some(LowerBoundReason::CommonNeighbors { pair, common, adjacent, .. })) => {
            CommonNeighborBound { value, pair: Some(pair), common, adjacent }
        }
        (value, _) => CommonNeighborBound { value, pair: None, common: 0, adjacent: false },
    })
}

/// `min{max(χ' − 1, 1), ⌈n/2⌉}` with the common-neighbor lower bound.
pub fn upper_bound(g: &Graph) -> Result<BoundReport> {
    require_nontrivial_connected(g)?;
    let cn = lower_bound_common_neighbors(g)?;
    let chi_prime = chromatic_index(g)?;
    let via_chi = chi_prime.saturating_sub(1).max(1);
    let half = g.n().div_ceil(2);
    let (upper, upper_reason) = if half < via_chi {
        (half, UpperReason::HalfOrder)
    } else {
        (via_chi, UpperReason::ChromaticIndexMinusOne)
    };
    let lower_reason = match cn.pair {
        None => LowerReason::Trivial,
        Some(_) if cn.adjacent => LowerReason::CommonNeighborAdjacent,
        Some(_) => LowerReason::CommonNeighbor,
    };
    Ok(BoundReport {
        lower: cn.value,
        lower_reason,
        lower_pair: cn.pair,
        upper,
        upper_reason,
        chi_prime,
        consistent: cn.value <= upper,
    })
}

/// Tightens [`upper_bound`] with family formulas and with the per-block
/// bounds (pd is the maximum over blocks, and each block is a subgraph).
pub fn refined_bounds(g: &Graph) -> Result<BoundReport> {
    let mut report = upper_bound(g)?;
    if let Some(pd) = family_formula(g) {
        if pd < report.upper {
            report.upper = pd;
            report.upper_reason = UpperReason::FamilyFormula;
        }
    } else {
        let blocks = block_decomposition(g)?;
        if blocks.len() > 1 {
            let mut upper = 1;
            let mut lower = 1;
            for i in 0..blocks.len() {
                let (block, _) = blocks.block_graph(g, i);
                let r = refined_bounds(&block)?;
                upper = upper.max(r.upper);
                lower = lower.max(r.lower);
            }
            if upper < report.upper {
                report.upper = upper;
                report.upper_reason = UpperReason::BlockComposition;
            }
            if lower > report.lower {
                report.lower = lower;
                report.lower_reason = LowerReason::Subgraph;
                report.lower_pair = None;
            }
        }
    }
    report.consistent = report.lower <= report.upper;
    Ok(report)
}

/// pd of a recognized family: trees, cycles, complete and complete
/// bipartite graphs, wheels and fans.
pub fn family_formula(g: &Graph) -> Option<usize> {
    let (n, m) = (g.n(), g.m());
    if n < 2 || !g.is_connected() {
        return None;
    }
    if m == n - 1 {
        return Some(1);
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if degrees.iter().all(|&d| d == 2) {
        return Some(if n == 3 { 2 } else { 1 });
    }
    if m == n * (n - 1) / 2 {
        return Some(n.div_ceil(2));
    }
    if let Some(larger) = complete_bipartite_larger_side(g) {
        return Some(larger.div_ceil(2));
    }
    // Wheels and fans: a dominating hub over a cycle or path.
    let hub = (0..n).find(|&v| degrees[v] == n - 1)?;
    let rest: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
    let (rim, _) = g.induced(&rest).ok()?;
    if !rim.is_connected() {
        return None;
    }
    let rim_degrees: Vec<usize> = (0..rim.n()).map(|v| rim.degree(v)).collect();
    if rim.n() >= 3 && rim_degrees.iter().all(|&d| d == 2) {
        return Some(if rim.n() % 3 == 0 { 2 } else { 3 });
    }
    if rim.m() + 1 == rim.n() && rim_degrees.iter().all(|&d| d <= 2) {
        return Some(if rim.n() == 1 { 1 } else { 2 });
    }
    None
}

fn complete_bipartite_larger_side(g: &Graph) -> Option<usize> {
    // The side of vertex 0 is its non-neighborhood.
    let side = g.vertex_mask() & !g.neighbor_mask(0);
    let other = g.neighbor_mask(0);
    let (a, b) = (side.count_ones() as usize, other.count_ones() as usize);
    if g.m() != a * b {
        return None;
    }
    let ok = crate::graph::bits(side).all(|v| g.neighbor_mask(v) == other)
        && crate::graph::bits(other).all(|v| g.neighbor_mask(v) == side);
    ok.then_some(a.max(b))
}

/// The maximum of the given per-block values, aligned with the blocks of
/// [`block_decomposition`].
pub fn compose_blocks(g: &Graph, block_pd_values: &[usize]) -> Result<usize> {
    let blocks = block_decomposition(g)?;
    if block_pd_values.len() != blocks.len() {
        return Err(Error::Precondition(format!(
            "{} block values supplied for {} blocks",
            block_pd_values.len(),
            blocks.len()
        )));
    }
    Ok(block_pd_values.iter().copied().max().unwrap_or(1))
}

/// Exact pd of every block (family formula where recognized, otherwise the
/// solver), in block order.
pub fn block_pd_values(g: &Graph, budget: &SolveBudget) -> Result<Vec<usize>> {
    let blocks = block_decomposition(g)?;
    (0..blocks.len())
        .map(|i| {
            let (block, _) = blocks.block_graph(g, i);
            match family_formula(&block) {
                Some(pd) => Ok(pd),
                None => pd_exact(&block, budget)?.into_result().map(|r| r.value),
            }
        })
        .collect()
}

pub fn pd_via_blocks(g: &Graph, budget: &SolveBudget) -> Result<usize> {
    compose_blocks(g, &block_pd_values(g, budget)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalEntry {
    pub n: usize,
    pub k: usize,
    /// `None` when no connected graph of order `n` has pd `k`.
    pub min_size: Option<usize>,
    /// graph6 of the first graph (in enumeration order) attaining the minimum.
    pub witness: Option<String>,
    /// `n − 1` for `k = 1`, `n + 2k − 4` otherwise.
    pub formula: usize,
}

impl ExtremalEntry {
    pub fn matches_formula(&self) -> bool {
        self.min_size == Some(self.formula)
    }
}

pub fn extremal_formula(n: usize, k: usize) -> usize {
    if k == 1 {
        n - 1
    } else {
        n + 2 * k - 4
    }
}

/// Minimum size of a connected graph of order `n` with pd exactly `k`, by
/// scanning enumerated graphs in order of size.
pub fn extremal_min_size_census(n: usize, k: usize, budget: &SolveBudget) -> Result<ExtremalEntry> {
    if k < 1 || k > n.div_ceil(2) {
        return Err(Error::Precondition(format!("k={k} outside 1..=ceil({n}/2)")));
    }
    let graphs = enumerate_connected_graphs(n)?;
    let mut found: Option<(usize, String)> = None;
    for g in &graphs {
        if found.as_ref().is_some_and(|(m, _)| g.m() > *m) {
            break;
        }
        match pd_exact(g, budget)? {
            PdOutcome::Exact(r) if r.value == k => {
                found = Some((g.m(), crate::graph6::to_graph6(g)));
                break;
            }
            PdOutcome::Exact(_) => {}
            PdOutcome::Unknown { lower, upper, reason, .. } => {
                if (lower..=upper).contains(&k) {
                    return Err(Error::BudgetExceeded(format!("{reason}; pd in [{lower},{upper}]")));
                }
            }
        }
    }
    Ok(ExtremalEntry {
        n,
        k,
        min_size: found.as_ref().map(|(m, _)| *m),
        witness: found.map(|(_, w)| w),
        formula: extremal_formula(n, k),
    })
}
