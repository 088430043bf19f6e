//! Exact proper disconnection number and the matching-cut test.
//!
//! For a fixed color count `k`, edges are colored one at a time in a fixed
//! order. Color labels are introduced in increasing order (the first edge is
//! always color 1), which removes the `k!` relabelings of each coloring.
//!
//! Only *bonds* are tracked: cuts `E[S, V∖S]` where both sides induce
//! connected subgraphs. Any proper cut separating `u` and `v` contains a bond
//! separating them (shrink to `u`'s component, then to `v`'s component of the
//! remainder), so a pair is satisfiable iff one of its bonds is proper. A bond
//! dies as soon as two colored edges in it share an endpoint and a color, which
//! can never be undone by coloring more edges. A branch is pruned the moment
//! some pair has no live bond left.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::chromatic_index;
use crate::coloring::{pairs, verify_pd_coloring, CutWitness, EdgeColoring, PdCertificate};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::stats::common_neighbor_count;

/// Hard limits of the bitmask engine.
pub const ENGINE_MAX_VERTICES: usize = 11;
pub const ENGINE_MAX_EDGES: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct SolveBudget {
    pub max_colors: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Cap on colored-edge assignments across all color counts tried.
    pub node_limit: u64,
    pub time_limit: Duration,
    /// Explore root branches on the rayon pool. Results, including node
    /// counts, are identical to the sequential run.
    pub parallel: bool,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_colors: 6,
            max_vertices: ENGINE_MAX_VERTICES,
            max_edges: 30,
            node_limit: 200_000_000,
            time_limit: Duration::from_secs(600),
            parallel: false,
        }
    }
}

impl SolveBudget {
    fn validate(&self) -> Result<()> {
        if self.max_colors == 0 || self.max_vertices == 0 || self.max_edges == 0 || self.node_limit == 0 {
            return Err(Error::Precondition("budget caps must be positive".into()));
        }
        if self.time_limit.is_zero() {
            return Err(Error::Precondition("time limit must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerBoundReason {
    /// Every coloring with `colors` colors was refuted by exhaustive search.
    Exhausted { colors: usize, nodes: u64 },
    /// `t` common neighbors of the pair force at least `bound` colors.
    CommonNeighbors { pair: (usize, usize), common: usize, adjacent: bool, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdResult {
    pub value: usize,
    pub certificate: PdCertificate,
    pub lower_bound_trace: Vec<LowerBoundReason>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PdOutcome {
    Exact(PdResult),
    /// The budget ran out; `lower ≤ pd ≤ upper` is still certified.
    Unknown { lower: usize, upper: usize, nodes: u64, reason: String },
}

impl PdOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            PdOutcome::Exact(r) => Some(r.value),
            PdOutcome::Unknown { .. } => None,
        }
    }

    pub fn into_result(self) -> Result<PdResult> {
        match self {
            PdOutcome::Exact(r) => Ok(r),
            PdOutcome::Unknown { lower, upper, reason, .. } => {
                Err(Error::BudgetExceeded(format!("{reason}; pd in [{lower},{upper}]")))
            }
        }
    }

    /// `"3"` or `"unknown[2,3]"`.
    pub fn label(&self) -> String {
        match self {
            PdOutcome::Exact(r) => r.value.to_string(),
            PdOutcome::Unknown { lower, upper, .. } => format!("unknown[{lower},{upper}]"),
        }
    }
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

/// The best pair for the common-neighbor lower bound, if it beats 1.
pub(crate) fn common_neighbor_bound(g: &Graph) -> (usize, Option<LowerBoundReason>) {
    let mut best = (1, None);
    for (u, v) in pairs(g.n()) {
        let common = common_neighbor_count(g, u, v);
        if common == 0 {
            continue;
        }
        let adjacent = g.has_edge(u, v);
        let bound = common.div_ceil(2) + adjacent as usize;
        if bound > best.0 {
            best = (bound, Some(LowerBoundReason::CommonNeighbors { pair: (u, v), common, adjacent, bound }));
        }
    }
    best
}

/// `min{max(χ'−1, 1), ⌈n/2⌉}`.
pub(crate) fn theorem_upper_bound(g: &Graph) -> usize {
    let half = g.n().div_ceil(2);
    let chi = chromatic_index(g).map(|c| c.saturating_sub(1).max(1)).unwrap_or(1);
    half.min(chi)
}

/// Exact pd by increasing color count. Never returns a wrong value: if the
/// budget runs out the outcome is `Unknown` with certified bounds.
pub fn pd_exact(g: &Graph, budget: &SolveBudget) -> Result<PdOutcome> {
    require_nontrivial_connected(g)?;
    budget.validate()?;
    let max_vertices = budget.max_vertices.min(ENGINE_MAX_VERTICES);
    let max_edges = budget.max_edges.min(ENGINE_MAX_EDGES);
    let (cn_bound, cn_reason) = common_neighbor_bound(g);
    if g.n() > max_vertices || g.m() > max_edges {
        return Ok(PdOutcome::Unknown {
            lower: cn_bound,
            upper: theorem_upper_bound(g),
            nodes: 0,
            reason: format!("graph with n={} m={} exceeds the size caps", g.n(), g.m()),
        });
    }

    let engine = Engine::new(g);
    let deadline = Instant::now() + budget.time_limit;
    let mut trace = Vec::new();
    let mut total = 0u64;
    for k in 1..=budget.max_colors {
        let remaining = budget.node_limit - total;
        match engine.solve(k, remaining, deadline, budget.parallel) {
            KOutcome::Found { colors, nodes } => {
                total += nodes;
                if let Some(r) = cn_reason {
                    trace.push(r);
                }
                let coloring = EdgeColoring::new(g.clone(), colors, k).expect("engine colors are in range");
                let certificate = verify_pd_coloring(&coloring)?
                    .certificate()
                    .expect("a coloring accepted by the engine verifies");
                return Ok(PdOutcome::Exact(PdResult { value: k, certificate, lower_bound_trace: trace, nodes: total }));
            }
            KOutcome::Exhausted { nodes } => {
                total += nodes;
                trace.push(LowerBoundReason::Exhausted { colors: k, nodes });
            }
            KOutcome::OutOfBudget { nodes, reason } => {
                total += nodes;
                return Ok(PdOutcome::Unknown {
                    lower: k.max(cn_bound),
                    upper: theorem_upper_bound(g),
                    nodes: total,
                    reason,
                });
            }
        }
    }
    Ok(PdOutcome::Unknown {
        lower: (budget.max_colors + 1).max(cn_bound),
        upper: theorem_upper_bound(g),
        nodes: total,
        reason: format!("more than max_colors={} colors needed", budget.max_colors),
    })
}

/// Whether some coloring with at most `k` colors makes `g` proper
/// disconnected; returns such a coloring.
pub fn find_pd_coloring(g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    require_nontrivial_connected(g)?;
    if g.n() > ENGINE_MAX_VERTICES || g.m() > ENGINE_MAX_EDGES {
        return Err(Error::BudgetExceeded(format!("n={} m={} exceeds the engine limits", g.n(), g.m())));
    }
    let far = Instant::now() + Duration::from_secs(3600 * 24);
    match Engine::new(g).solve(k, u64::MAX, far, false) {
        KOutcome::Found { colors, .. } => {
            let used = colors.iter().copied().max().unwrap_or(1);
            Ok(Some(EdgeColoring::new(g.clone(), colors, used.max(1))?))
        }
        KOutcome::Exhausted { .. } => Ok(None),
        KOutcome::OutOfBudget { reason, .. } => Err(Error::BudgetExceeded(reason)),
    }
}

/// Calls `visit` on every coloring with colors in `1..=k` (not reduced by
/// color symmetry) under which `g` is proper disconnected.
pub fn for_each_pd_coloring(g: &Graph, k: usize, mut visit: impl FnMut(&[usize])) -> Result<()> {
    require_nontrivial_connected(g)?;
    if g.n() > ENGINE_MAX_VERTICES || g.m() > ENGINE_MAX_EDGES {
        return Err(Error::BudgetExceeded(format!("n={} m={} exceeds the engine limits", g.n(), g.m())));
    }
    let engine = Engine::new(g);
    let mut state = engine.fresh_state();
    let mut colors = vec![0; g.m()];
    engine.enumerate_all(&mut state, 0, k, &mut colors, &mut visit);
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingCutCheck {
    /// A matching cut for every pair, in pair order.
    AllPairs(Vec<CutWitness>),
    Failing { pair: (usize, usize) },
}

impl MatchingCutCheck {
    pub fn holds(&self) -> bool {
        matches!(self, MatchingCutCheck::AllPairs(_))
    }
}

/// Whether every pair of vertices is separated by a matching cut, by direct
/// enumeration of vertex bipartitions.
pub fn pd_is_one(g: &Graph) -> Result<MatchingCutCheck> {
    require_nontrivial_connected(g)?;
    if g.n() > 24 {
        return Err(Error::BudgetExceeded(format!("bipartition enumeration over n={} vertices", g.n())));
    }
    let n = g.n();
    let matching_sides: Vec<u64> = (1u64..(1 << (n - 1)))
        .map(|s| s << 1 | 1)
        .chain(std::iter::once(1))
        .filter(|&s| s != g.vertex_mask())
        .filter(|&s| {
            let mut touched = 0u64;
            g.edges().iter().all(|&(u, v)| {
                if (s >> u & 1) == (s >> v & 1) {
                    return true;
                }
                let ends = 1u64 << u | 1u64 << v;
                let ok = touched & ends == 0;
                touched |= ends;
                ok
            })
        })
        .collect();
    let mut sorted = matching_sides;
    sorted.sort_unstable();
    let mut witnesses = Vec::new();
    for (u, v) in pairs(n) {
        let hit = sorted.iter().find(|&&s| (s >> u & 1) != (s >> v & 1));
        match hit {
            Some(&s) => {
                let side = if s >> u & 1 == 1 { s } else { g.vertex_mask() & !s };
                witnesses.push(CutWitness::from_side(g, side, (u, v)));
            }
            None => return Ok(MatchingCutCheck::Failing { pair: (u, v) }),
        }
    }
    Ok(MatchingCutCheck::AllPairs(witnesses))
}

struct Bond {
    edges: u64,
    pairs: u64,
}

/// Precomputed bond structure of one graph.
struct Engine<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    bonds: Vec<Bond>,
    bonds_of_edge: Vec<Vec<usize>>,
    initial_alive: Vec<u32>,
}

#[derive(Clone)]
struct State {
    colors: Vec<usize>,
    /// `at[v * 65 + c]`: mask of colored edges at `v` with color `c`.
    at: Vec<u64>,
    dead: Vec<bool>,
    alive: Vec<u32>,
    trail: Vec<usize>,
}

enum KOutcome {
    Found { colors: Vec<usize>, nodes: u64 },
    Exhausted { nodes: u64 },
    OutOfBudget { nodes: u64, reason: String },
}

enum Step {
    Ok,
    Conflict,
}

struct Limits<'a> {
    node_limit: u64,
    deadline: Instant,
    my_index: usize,
    winner: &'a AtomicUsize,
}

type BranchResult = (std::result::Result<Option<Vec<usize>>, Abort>, u64);

enum Abort {
    Nodes,
    Time,
    Cancelled,
}

const ROOT_DEPTH: usize = 4;

impl<'a> Engine<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        let full = g.vertex_mask();
        let pair_index = |u: usize, v: usize| -> usize {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            a * n - a * (a + 1) / 2 + (b - a - 1)
        };
        let mut bonds = Vec::new();
        // Sides containing vertex 0; the complement names the same cut.
        for rest in 0u64..(1 << (n - 1)) {
            let side = rest << 1 | 1;
            if side == full {
                continue;
            }
            let other = full & !side;
            if g.reach_within(0, side) != side {
                continue;
            }
            let o = other.trailing_zeros() as usize;
            if g.reach_within(o, other) != other {
                continue;
            }
            let mut edges = 0u64;
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                if (side >> u & 1) != (side >> v & 1) {
                    edges |= 1 << i;
                }
            }
            let mut sep = 0u64;
            for u in bits(side) {
                for v in bits(other) {
                    sep |= 1 << pair_index(u, v);
                }
            }
            bonds.push(Bond { edges, pairs: sep });
        }
        let mut bonds_of_edge = vec![Vec::new(); g.m()];
        for (b, bond) in bonds.iter().enumerate() {
            for e in bits(bond.edges) {
                bonds_of_edge[e].push(b);
            }
        }
        let pair_count = n * (n - 1) / 2;
        let mut initial_alive = vec![0u32; pair_count];
        for bond in &bonds {
            for p in bits(bond.pairs) {
                initial_alive[p] += 1;
            }
        }
        Engine { g, order: edge_order(g), bonds, bonds_of_edge, initial_alive }
    }

    fn fresh_state(&self) -> State {
        State {
            colors: vec![0; self.g.m()],
            at: vec![0; self.g.n() * 65],
            dead: vec![false; self.bonds.len()],
            alive: self.initial_alive.clone(),
            trail: Vec::new(),
        }
    }

    /// Colors edge `e` with `c`, killing bonds that now contain a clash.
    /// Returns the trail length to undo to.
    fn assign(&self, st: &mut State, e: usize, c: usize) -> (usize, Step) {
        let mark = st.trail.len();
        let (a, b) = self.g.edges()[e];
        let clash = st.at[a * 65 + c] | st.at[b * 65 + c];
        let mut step = Step::Ok;
        if clash != 0 {
            for &bi in &self.bonds_of_edge[e] {
                if st.dead[bi] || self.bonds[bi].edges & clash == 0 {
                    continue;
                }
                st.dead[bi] = true;
                st.trail.push(bi);
                for p in bits(self.bonds[bi].pairs) {
                    st.alive[p] -= 1;
                    if st.alive[p] == 0 {
                        step = Step::Conflict;
                    }
                }
            }
        }
        st.colors[e] = c;
        st.at[a * 65 + c] |= 1 << e;
        st.at[b * 65 + c] |= 1 << e;
        (mark, step)
    }

    fn unassign(&self, st: &mut State, e: usize, mark: usize) {
        let (a, b) = self.g.edges()[e];
        let c = st.colors[e];
        st.at[a * 65 + c] &= !(1 << e);
        st.at[b * 65 + c] &= !(1 << e);
        st.colors[e] = 0;
        while st.trail.len() > mark {
            let bi = st.trail.pop().unwrap();
            st.dead[bi] = false;
            for p in bits(self.bonds[bi].pairs) {
                st.alive[p] += 1;
            }
        }
    }

    /// Surviving colorings of the first `depth` edges in search order, each
    /// as `(prefix colors, max color used)`.
    fn root_prefixes(&self, k: usize, depth: usize, nodes: &mut u64) -> Vec<(Vec<usize>, usize)> {
        let mut out = Vec::new();
        let mut st = self.fresh_state();
        let mut prefix = Vec::new();
        self.collect_prefixes(&mut st, k, depth, 0, &mut prefix, &mut out, nodes);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn collect_prefixes(
        &self,
        st: &mut State,
        k: usize,
        depth: usize,
        max_used: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, usize)>,
        nodes: &mut u64,
    ) {
        let idx = prefix.len();
        if idx == depth {
            out.push((prefix.clone(), max_used));
            return;
        }
        let e = self.order[idx];
        for c in 1..=k.min(max_used + 1) {
            *nodes += 1;
            let (mark, step) = self.assign(st, e, c);
            if let Step::Ok = step {
                prefix.push(c);
                self.collect_prefixes(st, k, depth, max_used.max(c), prefix, out, nodes);
                prefix.pop();
            }
            self.unassign(st, e, mark);
        }
    }

    fn solve(&self, k: usize, node_limit: u64, deadline: Instant, parallel: bool) -> KOutcome {
        let depth = ROOT_DEPTH.min(self.g.m());
        let mut nodes = 0u64;
        let prefixes = self.root_prefixes(k, depth, &mut nodes);
        if nodes > node_limit {
            return KOutcome::OutOfBudget { nodes, reason: "node limit reached".into() };
        }
        let winner = AtomicUsize::new(usize::MAX);
        let run_branch = |i: usize, limit: u64| -> (std::result::Result<Option<Vec<usize>>, Abort>, u64) {
            let (prefix, max_used) = &prefixes[i];
            let mut st = self.fresh_state();
            for (j, &c) in prefix.iter().enumerate() {
                let (_, step) = self.assign(&mut st, self.order[j], c);
                debug_assert!(matches!(step, Step::Ok));
            }
            let limits = Limits { node_limit: limit, deadline, my_index: i, winner: &winner };
            let mut count = 0u64;
            let r = self.dfs(&mut st, depth, k, *max_used, &limits, &mut count);
            if let Ok(true) = r {
                winner.fetch_min(i, Ordering::SeqCst);
            }
            (r.map(|found| found.then(|| st.colors.clone())), count)
        };

        let results: Vec<BranchResult> = if parallel {
            (0..prefixes.len()).into_par_iter().map(|i| run_branch(i, node_limit)).collect()
        } else {
            let mut out = Vec::new();
            let mut used = nodes;
            for i in 0..prefixes.len() {
                let r = run_branch(i, node_limit.saturating_sub(used));
                used += r.1;
                let stop = !matches!(r.0, Ok(None));
                out.push(r);
                if stop {
                    break;
                }
            }
            out
        };

        for (r, count) in results {
            nodes += count;
            match r {
                Ok(Some(colors)) if nodes <= node_limit => return KOutcome::Found { colors, nodes },
                Ok(Some(_)) | Err(Abort::Nodes) => {
                    return KOutcome::OutOfBudget { nodes, reason: "node limit reached".into() }
                }
                Err(Abort::Time) => return KOutcome::OutOfBudget { nodes, reason: "time limit reached".into() },
                Err(Abort::Cancelled) => unreachable!("only branches after the winner are cancelled"),
                Ok(None) => {
                    if nodes > node_limit {
                        return KOutcome::OutOfBudget { nodes, reason: "node limit reached".into() };
                    }
                }
            }
        }
        KOutcome::Exhausted { nodes }
    }

    fn dfs(
        &self,
        st: &mut State,
        idx: usize,
        k: usize,
        max_used: usize,
        limits: &Limits,
        count: &mut u64,
    ) -> std::result::Result<bool, Abort> {
        if idx == self.order.len() {
            return Ok(true);
        }
        let e = self.order[idx];
        for c in 1..=k.min(max_used + 1) {
            *count += 1;
            if *count > limits.node_limit {
                return Err(Abort::Nodes);
            }
            if *count & 0xfff == 0 {
                if Instant::now() > limits.deadline {
                    return Err(Abort::Time);
                }
                if limits.winner.load(Ordering::Relaxed) < limits.my_index {
                    return Err(Abort::Cancelled);
                }
            }
            let (mark, step) = self.assign(st, e, c);
            if let Step::Ok = step {
                match self.dfs(st, idx + 1, k, max_used.max(c), limits, count) {
                    Ok(true) => return Ok(true),
                    Ok(false) => {}
                    Err(a) => {
                        self.unassign(st, e, mark);
                        return Err(a);
                    }
                }
            }
            self.unassign(st, e, mark);
        }
        Ok(false)
    }

    fn enumerate_all(
        &self,
        st: &mut State,
        idx: usize,
        k: usize,
        colors: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if idx == self.order.len() {
            colors.copy_from_slice(&st.colors);
            visit(colors);
            return;
        }
        let e = self.order[idx];
        for c in 1..=k {
            let (mark, step) = self.assign(st, e, c);
            if let Step::Ok = step {
                self.enumerate_all(st, idx + 1, k, colors, visit);
            }
            self.unassign(st, e, mark);
        }
    }
}

/// Edges in BFS order from a maximum-degree vertex, so that the bonds around
/// early vertices fill up (and clash) as soon as possible.
fn edge_order(g: &Graph) -> Vec<usize> {
    let start = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
    let mut placed = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    let mut queue = std::collections::VecDeque::from([start]);
    let mut seen = 1u64 << start;
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                queue.push_back(w);
            }
            // Edges back into visited vertices first closes short cycles.
            for x in g.neighbors(w) {
                if seen >> x & 1 == 1 {
                    let e = g.edge_index(w, x).unwrap();
                    if !placed[e] {
                        placed[e] = true;
                        order.push(e);
                    }
                }
            }
        }
    }
    order.extend((0..g.m()).filter(|&e| !placed[e]));
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn pd(g: &Graph) -> usize {
        pd_exact(g, &SolveBudget::default()).unwrap().value().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(pd(&cycle(3)), 2);
        assert_eq!(pd(&cycle(5)), 1);
        assert_eq!(pd(&complete(4)), 2);
        assert_eq!(pd(&Graph::new(2, [(0, 1)]).unwrap()), 1);
    }

    #[test]
    fn edge_order_covers_every_edge_once() {
        let g = complete(6);
        let mut o = edge_order(&g);
        o.sort_unstable();
        assert_eq!(o, (0..15).collect::<Vec<_>>());
    }

    #[test]
    fn trace_records_exhausted_counts() {
        let r = pd_exact(&complete(4), &SolveBudget::default()).unwrap().into_result().unwrap();
        assert!(matches!(r.lower_bound_trace[0], LowerBoundReason::Exhausted { colors: 1, .. }));
        assert!(r.certificate.check());
    }

    #[test]
    fn node_budget_gives_unknown_with_bounds() {
        let budget = SolveBudget { node_limit: 3, ..SolveBudget::default() };
        match pd_exact(&complete(5), &budget).unwrap() {
            PdOutcome::Unknown { lower, upper, .. } => {
                assert!(lower <= 3 && upper == 3);
                assert!(lower >= 2);
            }
            other => panic!("expected unknown, got {other:?}"),
        }
    }

    #[test]
    fn size_caps_give_unknown() {
        let budget = SolveBudget { max_vertices: 4, ..SolveBudget::default() };
        let out = pd_exact(&cycle(6), &budget).unwrap();
        assert_eq!(out.label(), "unknown[1,1]");
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = complete(6);
        let seq = pd_exact(&g, &SolveBudget::default()).unwrap();
        let par = pd_exact(&g, &SolveBudget { parallel: true, ..SolveBudget::default() }).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn errors() {
        let b = SolveBudget::default();
        assert_eq!(pd_exact(&Graph::empty(1).unwrap(), &b), Err(Error::TrivialGraph));
        assert_eq!(pd_exact(&Graph::new(3, [(0, 1)]).unwrap(), &b), Err(Error::Disconnected));
        let bad = SolveBudget { node_limit: 0, ..SolveBudget::default() };
        assert!(pd_exact(&cycle(4), &bad).is_err());
    }

    #[test]
    fn matching_cuts() {
        assert!(pd_is_one(&cycle(4)).unwrap().holds());
        assert_eq!(pd_is_one(&cycle(3)).unwrap(), MatchingCutCheck::Failing { pair: (0, 1) });
        let tree = Graph::new(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        match pd_is_one(&tree).unwrap() {
            MatchingCutCheck::AllPairs(ws) => {
                assert_eq!(ws.len(), 10);
                let c = EdgeColoring::uniform(tree.clone());
                assert!(ws.iter().all(|w| w.is_valid_for(&c)));
            }
            other => panic!("{other:?}"),
        }
    }
}
