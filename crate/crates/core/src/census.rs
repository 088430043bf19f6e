//! Exhaustive theorem checks over every connected graph of a given order.
//!
//! Rows come out in enumeration order and carry no timing data, so reports
//! are byte-identical whatever the thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::block_decomposition;
use crate::bounds::upper_bound;
use crate::classify::classify_diameter2_outerplanar;
use crate::coloring::{restrict_coloring, verify_pd_coloring, EdgeColoring, Verification};
use crate::enumerate::enumerate_connected_graphs;
use crate::error::Result;
use crate::families::{color_complete, color_via_chromatic_index};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::outerplanar::is_outerplanar;
use crate::solver::{pd_exact, pd_is_one, MatchingCutCheck, PdOutcome, SolveBudget};
use crate::stats::{diameter, is_triangle_free};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub passed: bool,
    /// What was compared; on failure, the offending pair, cut or subgraph.
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub triangle_free: bool,
    pub outerplanar: bool,
    pub pd_one_matching_cuts: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// The exact value, or `unknown[lo,hi]`.
    pub pd: String,
    pub chi_prime: usize,
    pub delta: usize,
    pub diameter: usize,
    pub nodes: u64,
    pub flags: Flags,
    pub checks: Vec<CheckOutcome>,
}

impl ReportRow {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn is_unknown(&self) -> bool {
        self.pd.starts_with("unknown")
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn outcome(check: &'static str, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome { check, passed, detail: detail.into() }
}

fn verifies(coloring: &EdgeColoring) -> Result<std::result::Result<(), (usize, usize)>> {
    Ok(match verify_pd_coloring(coloring)? {
        Verification::Certified(_) => Ok(()),
        Verification::Failed { pair } => Err(pair),
    })
}

/// Computes pd and every check that applies to `g`.
pub fn analyze_graph(g: &Graph, budget: &SolveBudget) -> Result<ReportRow> {
    let outcome_pd = pd_exact(g, budget)?;
    let bounds = upper_bound(g)?;
    let matching = pd_is_one(g)?;
    let triangle_free = is_triangle_free(g);
    let outerplanar = is_outerplanar(g)?.is_outerplanar();
    let diam = diameter(g).expect("connected");
    let mut checks = Vec::new();

    // Constructions behind the upper bound verify regardless of pd.
    let chi = color_via_chromatic_index(g);
    checks.push(match chi {
        Ok(f) => outcome(
            "chromatic_index_coloring",
            f.coloring.used_colors() <= bounds.chi_prime.saturating_sub(1).max(1),
            format!("{} colors from chi'={}", f.coloring.used_colors(), bounds.chi_prime),
        ),
        Err(e) => outcome("chromatic_index_coloring", false, e.to_string()),
    });
    let kn = color_complete(g.n())?;
    let all: Vec<usize> = (0..g.n()).collect();
    let restricted = restrict_coloring(&kn.coloring, g, &all)?;
    checks.push(match verifies(&restricted)? {
        Ok(()) => outcome("complete_graph_restriction", true, format!("{} colors", restricted.k())),
        Err(pair) => outcome("complete_graph_restriction", false, format!("no proper cut for pair {pair:?}")),
    });

    let nodes = match &outcome_pd {
        PdOutcome::Exact(r) => r.nodes,
        PdOutcome::Unknown { nodes, .. } => *nodes,
    };
    if let PdOutcome::Exact(result) = &outcome_pd {
        let pd = result.value;
        checks.push(outcome("certificate", result.certificate.check(), "every pair has a listed proper cut"));

        let chain = bounds.lower <= pd && pd <= bounds.upper;
        let pair = bounds.lower_pair.map(|p| format!(" via pair {p:?}")).unwrap_or_default();
        checks.push(outcome(
            "bound_chain",
            chain,
            format!("{}{pair} <= pd={pd} <= {} ({:?})", bounds.lower, bounds.upper, bounds.upper_reason),
        ));

        checks.push(match &matching {
            MatchingCutCheck::AllPairs(_) => outcome(
                "matching_cut_equivalence",
                pd == 1,
                format!("every pair has a matching cut, pd={pd}"),
            ),
            MatchingCutCheck::Failing { pair } => outcome(
                "matching_cut_equivalence",
                pd > 1,
                format!("pair {pair:?} has no matching cut, pd={pd}"),
            ),
        });

        let blocks = block_decomposition(g)?;
        if blocks.len() > 1 {
            let values: Option<Vec<usize>> = (0..blocks.len())
                .map(|i| Ok(pd_exact(&blocks.block_graph(g, i).0, budget)?.value()))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .collect();
            if let Some(values) = values {
                let max = values.iter().copied().max().unwrap();
                checks.push(outcome(
                    "block_composition",
                    max == pd,
                    format!("block values {values:?}, pd={pd}"),
                ));
            }
        }

        if outerplanar {
            checks.push(outcome(
                "outerplanar_triangle_free",
                (pd == 1) == triangle_free,
                format!("triangle_free={triangle_free}, pd={pd}"),
            ));
            if diam == 2 {
                let class = classify_diameter2_outerplanar(g)?;
                let consistent = class.reconstructs(g) && (pd == 2) == class.is_named();
                checks.push(outcome(
                    "diameter2_classification",
                    consistent,
                    format!("{:?}, pd={pd}", class.classification),
                ));
            }
        }

        checks.push(subgraph_monotonicity(g, &result.certificate.coloring)?);
    }

    Ok(ReportRow {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        pd: outcome_pd.label(),
        chi_prime: bounds.chi_prime,
        delta: g.max_degree(),
        diameter: diam,
        nodes,
        flags: Flags { triangle_free, outerplanar, pd_one_matching_cuts: matching.holds() },
        checks,
    })
}

/// The optimal coloring restricted to each connected subgraph with one edge
/// or one vertex removed still verifies.
fn subgraph_monotonicity(g: &Graph, coloring: &EdgeColoring) -> Result<CheckOutcome> {
    let mut tried = 0;
    for &(u, v) in g.edges() {
        let h = g.without_edges(&[(u, v)])?;
        if !h.is_connected() {
            continue;
        }
        tried += 1;
        let all: Vec<usize> = (0..g.n()).collect();
        if let Err(pair) = verifies(&restrict_coloring(coloring, &h, &all)?)? {
            return Ok(outcome("subgraph_monotonicity", false, format!("G-{u}{v}: no proper cut for {pair:?}")));
        }
    }
    for x in 0..g.n() {
        let keep: Vec<usize> = (0..g.n()).filter(|&w| w != x).collect();
        let (h, map) = g.induced(&keep)?;
        if h.n() < 2 || !h.is_connected() {
            continue;
        }
        tried += 1;
        if let Err(pair) = verifies(&restrict_coloring(coloring, &h, &map)?)? {
            let pair = (map[pair.0], map[pair.1]);
            return Ok(outcome("subgraph_monotonicity", false, format!("G-{x}: no proper cut for {pair:?}")));
        }
    }
    Ok(outcome("subgraph_monotonicity", true, format!("{tried} subgraphs")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub schema: u32,
    pub n: usize,
    pub graphs: usize,
    pub failed: usize,
    pub unknown: usize,
    pub rows: Vec<ReportRow>,
}

impl CensusReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(TSV_HEADER);
        for row in &self.rows {
            out.push_str(&tsv_line(row));
        }
        out
    }
}

pub const TSV_HEADER: &str =
    "graph6\tn\tm\tpd\tchi_prime\tdelta\tdiameter\ttriangle_free\touterplanar\tpd_one_matching_cuts\tnodes\tchecks\tfailures\n";

pub fn tsv_line(row: &ReportRow) -> String {
    let checks: Vec<String> = row
        .checks
        .iter()
        .map(|c| format!("{}={}", c.check, if c.passed { "pass" } else { "FAIL" }))
        .collect();
    let failures: Vec<String> = row.failures().map(|c| format!("{}: {}", c.check, c.detail)).collect();
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
        row.graph6,
        row.n,
        row.m,
        row.pd,
        row.chi_prime,
        row.delta,
        row.diameter,
        row.flags.triangle_free,
        row.flags.outerplanar,
        row.flags.pd_one_matching_cuts,
        row.nodes,
        checks.join(","),
        if failures.is_empty() { "-".to_string() } else { failures.join("; ") },
    )
}

/// Analyzes `graphs` in parallel on the current rayon pool, keeping order.
pub fn analyze_all(graphs: &[Graph], budget: &SolveBudget) -> Result<Vec<ReportRow>> {
    graphs.par_iter().map(|g| analyze_graph(g, budget)).collect()
}

/// Every connected graph on `n` vertices, analyzed on the current rayon
/// pool. Install a sized pool around the call to control parallelism.
pub fn run_census(n: usize, budget: &SolveBudget) -> Result<CensusReport> {
    let graphs = enumerate_connected_graphs(n)?;
    let rows = analyze_all(&graphs, budget)?;
    Ok(CensusReport {
        schema: SCHEMA_VERSION,
        n,
        graphs: rows.len(),
        failed: rows.iter().filter(|r| !r.all_passed()).count(),
        unknown: rows.iter().filter(|r| r.is_unknown()).count(),
        rows,
    })
}
