use std::fmt;

use pdisc_core::bounds::{extremal_formula, extremal_min_size_census, refined_bounds, upper_bound};
use pdisc_core::census::run_census;
use pdisc_core::classify::classify_diameter2_outerplanar;
use pdisc_core::coloring::{verify_pd_coloring, EdgeColoring, Verification};
use pdisc_core::families::{build_family, color_extremal, color_pd_one, colored_family, ColoredFamily, FamilySpec};
use pdisc_core::graph6::{parse_graph6, to_graph6};
use pdisc_core::solver::{pd_exact, LowerBoundReason, PdOutcome};
use pdisc_core::Error;
use serde_json::{json, Value};

use crate::output::{coloring_compact, coloring_json, emit, json_document, read_graphs, read_input, witness_line};
use crate::{Command, Common, Format};

#[derive(Debug)]
pub enum Failure {
    /// A theorem check or verification failed.
    Check(String),
    /// Bad input, bad options or an unmet precondition.
    Input(String),
    /// A solver budget ran out; the report was still written.
    Budget(String),
}

impl Failure {
    /// Process exit status: 1 for failed checks, 2 for bad input, 3 for an
    /// exhausted budget.
    pub fn status(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Check(m) => write!(f, "check failed: {m}"),
            Failure::Input(m) => write!(f, "{m}"),
            Failure::Budget(m) => write!(f, "budget exhausted: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(m) => Failure::Budget(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

pub fn run(command: &Command, common: &Common) -> Result<(), Failure> {
    match command {
        Command::Exact { input } => exact(common, &read_graphs(input.as_deref())?),
        Command::Verify { graph, coloring } => {
            let g = parse_graph6(graph.trim())?;
            let text = read_input(coloring.as_deref())?;
            verify(common, EdgeColoring::parse_text(g, &text)?)
        }
        Command::Construct { family } => construct(common, &family.parse::<FamilySpec>()?),
        Command::Bounds { input, refined } => bounds(common, &read_graphs(input.as_deref())?, *refined),
        Command::Classify { input } => classify(common, &read_graphs(input.as_deref())?),
        Command::Census { n } => census(common, *n),
        Command::Extremal { n } => extremal(common, *n),
    }
}

fn trace_text(trace: &[LowerBoundReason]) -> String {
    let parts: Vec<String> = trace
        .iter()
        .map(|r| match r {
            LowerBoundReason::Exhausted { colors, .. } => format!("no {colors}-coloring"),
            LowerBoundReason::CommonNeighbors { pair, bound, .. } => {
                format!("pair {}-{} forces {bound}", pair.0, pair.1)
            }
        })
        .collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join("; ")
    }
}

fn exact(common: &Common, graphs: &[pdisc_core::Graph]) -> Result<(), Failure> {
    let budget = common.budget();
    let outcomes = graphs.iter().map(|g| pd_exact(g, &budget)).collect::<Result<Vec<_>, _>>()?;
    let unknown = outcomes.iter().filter(|o| o.value().is_none()).count();
    let text = match common.format {
        Format::Tsv => {
            let mut s = String::from("graph6\tn\tm\tpd\tnodes\tlower_bound\tcoloring\n");
            for (g, o) in graphs.iter().zip(&outcomes) {
                let (nodes, trace, coloring) = match o {
                    PdOutcome::Exact(r) => {
                        (r.nodes, trace_text(&r.lower_bound_trace), coloring_compact(&r.certificate.coloring))
                    }
                    PdOutcome::Unknown { nodes, reason, .. } => (*nodes, reason.clone(), "-".into()),
                };
                s.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{nodes}\t{trace}\t{coloring}\n",
                    to_graph6(g),
                    g.n(),
                    g.m(),
                    o.label()
                ));
            }
            s
        }
        Format::Json => {
            let results: Vec<Value> = graphs
                .iter()
                .zip(&outcomes)
                .map(|(g, o)| match o {
                    PdOutcome::Exact(r) => json!({
                        "graph6": to_graph6(g), "n": g.n(), "m": g.m(),
                        "pd": r.value, "label": o.label(), "nodes": r.nodes,
                        "lower_bound_trace": r.lower_bound_trace,
                        "coloring": coloring_json(&r.certificate.coloring),
                        "witnesses": r.certificate.witnesses,
                    }),
                    PdOutcome::Unknown { lower, upper, nodes, reason } => json!({
                        "graph6": to_graph6(g), "n": g.n(), "m": g.m(),
                        "pd": null, "label": o.label(), "nodes": nodes,
                        "lower": lower, "upper": upper, "reason": reason,
                    }),
                })
                .collect();
            json_document("exact", json!({ "results": results }))
        }
    };
    emit(common, &text)?;
    if unknown > 0 {
        return Err(Failure::Budget(format!("{unknown} graph(s) left unknown")));
    }
    Ok(())
}

fn verify(common: &Common, coloring: EdgeColoring) -> Result<(), Failure> {
    let verdict = verify_pd_coloring(&coloring)?;
    let text = match (&verdict, common.format) {
        (Verification::Certified(cert), Format::Tsv) => {
            let mut s = format!("status\tverified\ncolors\t{}\nu\tv\tside\tcut\n", coloring.used_colors());
            cert.witnesses.iter().for_each(|w| s.push_str(&witness_line(w)));
            s
        }
        (Verification::Failed { pair }, Format::Tsv) => format!("status\tfailed\npair\t{}\t{}\n", pair.0, pair.1),
        (Verification::Certified(cert), Format::Json) => json_document(
            "verify",
            json!({ "status": "verified", "colors": coloring.used_colors(), "witnesses": cert.witnesses }),
        ),
        (Verification::Failed { pair }, Format::Json) => {
            json_document("verify", json!({ "status": "failed", "pair": [pair.0, pair.1] }))
        }
    };
    emit(common, &text)?;
    match verdict {
        Verification::Certified(_) => Ok(()),
        Verification::Failed { pair } => {
            Err(Failure::Check(format!("no proper cut separates {} and {}", pair.0, pair.1)))
        }
    }
}

fn construct(common: &Common, spec: &FamilySpec) -> Result<(), Failure> {
    let family = colored_family(spec)?;
    let status = if family.certificate.check() { "verified" } else { "failed" };
    let text = match common.format {
        Format::Tsv => format!(
            "family\t{spec}\ngraph6\t{}\nn\t{}\nm\t{}\nlabeling\t{}\nclaimed_pd\t{}\nstatus\t{status}\ncoloring\t{}\n",
            to_graph6(&family.graph),
            family.graph.n(),
            family.graph.m(),
            family.labeling_doc,
            family.claimed_pd,
            coloring_compact(&family.coloring),
        ),
        Format::Json => json_document(
            "construct",
            json!({
                "family": spec.to_string(),
                "graph6": to_graph6(&family.graph),
                "n": family.graph.n(), "m": family.graph.m(),
                "labeling": family.labeling_doc,
                "claimed_pd": family.claimed_pd,
                "status": status,
                "coloring": coloring_json(&family.coloring),
                "coloring_text": family.coloring.to_text(),
            }),
        ),
    };
    emit(common, &text)?;
    if status != "verified" {
        return Err(Failure::Check(format!("{spec}: explicit coloring does not verify")));
    }
    Ok(())
}

fn bounds(common: &Common, graphs: &[pdisc_core::Graph], refined: bool) -> Result<(), Failure> {
    let reports = graphs
        .iter()
        .map(|g| if refined { refined_bounds(g) } else { upper_bound(g) })
        .collect::<Result<Vec<_>, _>>()?;
    let text = match common.format {
        Format::Tsv => {
            let mut s = String::from("graph6\tlower\tlower_reason\tlower_pair\tupper\tupper_reason\tchi_prime\tconsistent\n");
            for (g, r) in graphs.iter().zip(&reports) {
                let pair = r.lower_pair.map(|(u, v)| format!("{u}-{v}")).unwrap_or_else(|| "-".into());
                s.push_str(&format!(
                    "{}\t{}\t{}\t{pair}\t{}\t{}\t{}\t{}\n",
                    to_graph6(g),
                    r.lower,
                    tag(&r.lower_reason),
                    r.upper,
                    tag(&r.upper_reason),
                    r.chi_prime,
                    r.consistent
                ));
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = graphs
                .iter()
                .zip(&reports)
                .map(|(g, r)| {
                    let mut v = serde_json::to_value(r).expect("report serializes");
                    v["graph6"] = json!(to_graph6(g));
                    v
                })
                .collect();
            json_document("bounds", json!({ "results": rows }))
        }
    };
    emit(common, &text)?;
    if let Some((g, _)) = graphs.iter().zip(&reports).find(|(_, r)| !r.consistent) {
        return Err(Failure::Check(format!("{}: lower bound exceeds upper bound", to_graph6(g))));
    }
    Ok(())
}

/// The serde tag of a unit enum variant.
fn tag<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_value(value).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

fn classify(common: &Common, graphs: &[pdisc_core::Graph]) -> Result<(), Failure> {
    let classes = graphs.iter().map(classify_diameter2_outerplanar).collect::<Result<Vec<_>, _>>()?;
    let text = match common.format {
        Format::Tsv => {
            let mut s = String::from("graph6\tclassification\tfamily\tisomorphism\n");
            for (g, c) in graphs.iter().zip(&classes) {
                let (family, iso) = match &c.witness {
                    Some(w) => {
                        let iso: Vec<String> = w.isomorphism.iter().map(usize::to_string).collect();
                        (w.family.clone(), iso.join(","))
                    }
                    None => ("-".into(), "-".into()),
                };
                s.push_str(&format!("{}\t{}\t{family}\t{iso}\n", to_graph6(g), tag(&c.classification)));
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = graphs
                .iter()
                .zip(&classes)
                .map(|(g, c)| {
                    let mut v = serde_json::to_value(c).expect("class serializes");
                    v["graph6"] = json!(to_graph6(g));
                    v
                })
                .collect();
            json_document("classify", json!({ "results": rows }))
        }
    };
    emit(common, &text)
}

fn census(common: &Common, n: usize) -> Result<(), Failure> {
    let report = run_census(n, &common.budget())?;
    let text = match common.format {
        Format::Tsv => report.to_tsv(),
        Format::Json => report.to_json(),
    };
    emit(common, &text)?;
    if !report.all_passed() {
        return Err(Failure::Check(format!("{} of {} graphs failed a check", report.failed, report.graphs)));
    }
    if report.unknown > 0 {
        return Err(Failure::Budget(format!("{} of {} graphs left unknown", report.unknown, report.graphs)));
    }
    Ok(())
}

struct ExtremalRow {
    k: usize,
    min_size: Option<usize>,
    witness: Option<String>,
    formula: usize,
    construction: ColoredFamily,
    construction_pd: Option<usize>,
}

impl ExtremalRow {
    fn matches(&self) -> bool {
        self.min_size == Some(self.formula)
            && self.construction.graph.m() == self.formula
            && self.construction_pd == Some(self.k)
    }
}

fn extremal(common: &Common, n: usize) -> Result<(), Failure> {
    let budget = common.budget();
    let mut rows = Vec::new();
    for k in 1..=n.div_ceil(2) {
        let entry = extremal_min_size_census(n, k, &budget)?;
        let construction = if k == 1 {
            color_pd_one(&build_family(&FamilySpec::Path(n))?)?
        } else {
            color_extremal(n, k)?
        };
        let construction_pd = pd_exact(&construction.graph, &budget)?.value();
        rows.push(ExtremalRow {
            k,
            min_size: entry.min_size,
            witness: entry.witness,
            formula: extremal_formula(n, k),
            construction,
            construction_pd,
        });
    }
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    let text = match common.format {
        Format::Tsv => {
            let mut s = String::from(
                "n\tk\tmin_size\tformula\twitness\tconstruction\tconstruction_size\tconstruction_pd\tmatches\n",
            );
            for r in &rows {
                s.push_str(&format!(
                    "{n}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.k,
                    opt(r.min_size),
                    r.formula,
                    r.witness.as_deref().unwrap_or("-"),
                    to_graph6(&r.construction.graph),
                    r.construction.graph.m(),
                    opt(r.construction_pd),
                    r.matches()
                ));
            }
            s
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": n, "k": r.k, "min_size": r.min_size, "formula": r.formula,
                        "witness": r.witness,
                        "construction": to_graph6(&r.construction.graph),
                        "construction_size": r.construction.graph.m(),
                        "construction_pd": r.construction_pd,
                        "matches": r.matches(),
                    })
                })
                .collect();
            json_document("extremal", json!({ "n": n, "results": items }))
        }
    };
    emit(common, &text)?;
    if rows.iter().any(|r| r.construction_pd.is_none()) {
        return Err(Failure::Budget("construction pd left unknown".into()));
    }
    if let Some(r) = rows.iter().find(|r| !r.matches()) {
        return Err(Failure::Check(format!("k={}: minimum size {:?} vs formula {}", r.k, r.min_size, r.formula)));
    }
    Ok(())
}
