//! Named graph families and their explicit pd-colorings.
//!
//! Labelings (all 0-based):
//!
//! | family | labels |
//! |---|---|
//! | `path:n`, `cycle:n` | consecutive vertices `0..n` |
//! | `complete:n` | `v_i → i−1` |
//! | `kmn:m,n` | `x_i → i−1`, `y_j → m+j−1` |
//! | `wheel:n` | hub `0`, rim `v_i → i` for `i = 1..=n` |
//! | `fan:n` | hub `0`, path `v_i → i` for `i = 1..=n` |
//! | `hypercube:d` | bit strings `0..2^d`, adjacent when differing in one bit |
//! | `k4e` | `v_i → i−1`, missing edge `v_2 v_4` |
//! | `fminus14` | `y → 0`, path `v_1..v_4 → 1..4`, `y ~ v_1, v_3, v_4` |
//! | `fminus15` | `z → 0`, path `v_1..v_5 → 1..5`, `z ~ v_1, v_2, v_4, v_5` |
//! | `fprime` | `C_6` on `v_1..v_6 → 0..5` plus `v_1v_3, v_3v_5, v_1v_5` |
//! | `dfam:r;i,j,…` | `wheel:r` without rim edges `v_i v_{i+1}` (indices mod `r`) |
//! | `extremal:n,k` | `a_1 → 0`, `a_2 → 1`, `b_j → j+1`, pendants at `a_1` |

use std::fmt;
use std::str::FromStr;

use crate::chromatic::optimal_proper_edge_coloring;
use crate::coloring::{
    find_proper_cut, is_matching, pairs, verify_pd_coloring, witness_from_cut, EdgeColoring, PdCertificate,
    Verification,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};
use crate::solver::{pd_is_one, MatchingCutCheck};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Fan(usize),
    Hypercube(usize),
    K4MinusE,
    FMinus14,
    FMinus15,
    FPrime,
    /// A wheel with `rim` rim vertices minus the rim edges `v_i v_{i+1}`.
    WheelMinusRim { rim: usize, deleted: Vec<usize> },
    Extremal { n: usize, k: usize },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let order = match self {
            Path(n) if *n >= 1 => *n,
            Cycle(n) if *n >= 3 => *n,
            Complete(n) if *n >= 1 => *n,
            CompleteBipartite(m, n) if *m >= 1 && *n >= 1 => m + n,
            Wheel(n) if *n >= 3 => n + 1,
            Fan(n) if *n >= 1 => n + 1,
            Hypercube(d) if *d >= 1 && *d <= 6 => 1 << d,
            K4MinusE => 4,
            FMinus14 => 5,
            FMinus15 | FPrime => 6,
            WheelMinusRim { rim, deleted } => {
                if *rim < 3 {
                    return Err(invalid(format!("wheel rim must have at least 3 vertices, got {rim}")));
                }
                let mut seen = vec![false; *rim + 1];
                for &i in deleted {
                    if i == 0 || i > *rim || std::mem::replace(&mut seen[i], true) {
                        return Err(invalid(format!("rim edge index {i} is out of range 1..={rim} or repeated")));
                    }
                }
                if deleted.is_empty() || deleted.len() > rim - 1 {
                    return Err(invalid(format!(
                        "must delete between 1 and {} rim edges, got {}",
                        rim - 1,
                        deleted.len()
                    )));
                }
                rim + 1
            }
            Extremal { n, k } => {
                if *k < 2 || *k > n.div_ceil(2) {
                    return Err(invalid(format!("extremal graph needs 2 <= k <= ceil(n/2), got n={n} k={k}")));
                }
                *n
            }
            other => return Err(invalid(format!("parameters out of range for {other}"))),
        };
        if order > MAX_VERTICES {
            return Err(Error::TooManyVertices(order));
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Graph> {
        build_family(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            Wheel(n) => write!(f, "wheel:{n}"),
            Fan(n) => write!(f, "fan:{n}"),
            Hypercube(d) => write!(f, "hypercube:{d}"),
            K4MinusE => write!(f, "k4e"),
            FMinus14 => write!(f, "fminus14"),
            FMinus15 => write!(f, "fminus15"),
            FPrime => write!(f, "fprime"),
            WheelMinusRim { rim, deleted } => {
                let list: Vec<String> = deleted.iter().map(usize::to_string).collect();
                write!(f, "dfam:{rim};{}", list.join(","))
            }
            Extremal { n, k } => write!(f, "extremal:{n},{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `name[:params]`, e.g. `wheel:6`, `kmn:3,5`, `extremal:8,3`,
    /// `dfam:5;1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let ints = |text: &str| -> Result<Vec<usize>> {
            if text.trim().is_empty() {
                return Ok(Vec::new());
            }
            text.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| invalid(format!("bad integer {p:?} in {s:?}"))))
                .collect()
        };
        let args = if name == "dfam" { Vec::new() } else { ints(params)? };
        let want = |count: usize| -> Result<()> {
            if args.len() == count {
                Ok(())
            } else {
                Err(invalid(format!("{name} takes {count} parameter(s), got {:?}", params)))
            }
        };
        let spec = match name {
            "path" => want(1).map(|_| FamilySpec::Path(args[0]))?,
            "cycle" => want(1).map(|_| FamilySpec::Cycle(args[0]))?,
            "complete" | "kn" => want(1).map(|_| FamilySpec::Complete(args[0]))?,
            "kmn" => want(2).map(|_| FamilySpec::CompleteBipartite(args[0], args[1]))?,
            "wheel" => want(1).map(|_| FamilySpec::Wheel(args[0]))?,
            "fan" => want(1).map(|_| FamilySpec::Fan(args[0]))?,
            "hypercube" | "qn" => want(1).map(|_| FamilySpec::Hypercube(args[0]))?,
            "k4e" => want(0).map(|_| FamilySpec::K4MinusE)?,
            "fminus14" => want(0).map(|_| FamilySpec::FMinus14)?,
            "fminus15" => want(0).map(|_| FamilySpec::FMinus15)?,
            "fprime" => want(0).map(|_| FamilySpec::FPrime)?,
            "extremal" => want(2).map(|_| FamilySpec::Extremal { n: args[0], k: args[1] })?,
            "dfam" => {
                let (rim, rest) = params
                    .split_once(';')
                    .ok_or_else(|| invalid("dfam syntax is dfam:<rim>;<i>,<j>,…"))?;
                let rim = ints(rim)?;
                if rim.len() != 1 {
                    return Err(invalid("dfam needs a single rim size"));
                }
                FamilySpec::WheelMinusRim { rim: rim[0], deleted: ints(rest)? }
            }
            _ => return Err(invalid(format!("unknown family {name:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn complete_edges(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn rim_edge(rim: usize, i: usize) -> Edge {
    (i, i % rim + 1)
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    spec.validate()?;
    match spec {
        Path(n) => Graph::new(*n, (1..*n).map(|i| (i - 1, i))),
        Cycle(n) => Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n))),
        Complete(n) => Graph::new(*n, complete_edges(*n)),
        CompleteBipartite(m, n) => Graph::new(m + n, (0..*m).flat_map(|i| (0..*n).map(move |j| (i, m + j)))),
        Wheel(n) => Graph::new(n + 1, (1..=*n).flat_map(|i| [(0, i), rim_edge(*n, i)])),
        Fan(n) => Graph::new(n + 1, (1..=*n).map(|i| (0, i)).chain((2..=*n).map(|i| (i - 1, i)))),
        Hypercube(d) => {
            let n = 1usize << d;
            Graph::new(n, (0..n).flat_map(|v| (0..*d).map(move |b| (v, v ^ 1 << b)).filter(|&(v, w)| v < w)))
        }
        K4MinusE => Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
        FMinus14 => Graph::new(5, [(1, 2), (2, 3), (3, 4), (0, 1), (0, 3), (0, 4)]),
        FMinus15 => Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (0, 1), (0, 2), (0, 4), (0, 5)]),
        FPrime => Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 2), (2, 4), (0, 4)])),
        WheelMinusRim { rim, deleted } => {
            let gone: Vec<Edge> = deleted.iter().map(|&i| rim_edge(*rim, i)).collect();
            Graph::new(
                rim + 1,
                (1..=*rim).map(|i| (0, i)).chain((1..=*rim).map(|i| rim_edge(*rim, i)).filter(|e| !gone.contains(e))),
            )
        }
        Extremal { n, k } => {
            let b = 2 * k - 3;
            let core = (2..2 + b).flat_map(|j| [(0, j), (1, j)]);
            let pendants = (2 + b..*n).map(|p| (0, p));
            Graph::new(*n, core.chain([(0, 1)]).chain(pendants))
        }
    }
}

/// A graph with an explicit coloring and the certificate that it works.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredFamily {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub claimed_pd: usize,
    pub labeling_doc: String,
    pub certificate: PdCertificate,
}

impl ColoredFamily {
    fn certify(coloring: EdgeColoring, claimed_pd: usize, labeling_doc: impl Into<String>) -> Result<Self> {
        let certificate = match verify_pd_coloring(&coloring)? {
            Verification::Certified(c) => c,
            Verification::Failed { pair } => {
                return Err(Error::InvalidColoring(format!("no proper cut for pair {pair:?}")));
            }
        };
        Ok(ColoredFamily {
            graph: coloring.graph().clone(),
            coloring,
            claimed_pd,
            labeling_doc: labeling_doc.into(),
            certificate,
        })
    }
}

/// `c(v_i v_j) = ((i + j − 1) mod ⌈n/2⌉) + 1`.
pub fn color_complete(n: usize) -> Result<ColoredFamily> {
    if n < 2 {
        return Err(invalid(format!("complete graph coloring needs n >= 2, got {n}")));
    }
    let a = n.div_ceil(2);
    let g = build_family(&FamilySpec::Complete(n))?;
    let colors = g.edges().iter().map(|&(u, v)| (u + 1 + v + 1 - 1) % a + 1).collect();
    ColoredFamily::certify(EdgeColoring::new(g, colors, a)?, a, "v_i -> i-1")
}

/// The `K_{n,n}` coloring `c(x_i y_j) = ((i + j − 1) mod ⌈n/2⌉) + 1`
/// restricted to `x_1..x_m`; all-ones for stars.
pub fn color_complete_bipartite(m: usize, n: usize) -> Result<ColoredFamily> {
    if m < 1 || m > n {
        return Err(invalid(format!("need 1 <= m <= n, got m={m} n={n}")));
    }
    let g = build_family(&FamilySpec::CompleteBipartite(m, n))?;
    let doc = "x_i -> i-1, y_j -> m+j-1";
    if m == 1 {
        return ColoredFamily::certify(EdgeColoring::uniform(g), 1, doc);
    }
    let a = n.div_ceil(2);
    let colors = g.edges().iter().map(|&(x, y)| (x + 1 + (y - m + 1) - 1) % a + 1).collect();
    ColoredFamily::certify(EdgeColoring::new(g, colors, a)?, a, doc)
}

/// Two colors when `3 | n`, otherwise three.
pub fn color_wheel(n: usize) -> Result<ColoredFamily> {
    if n < 3 {
        return Err(invalid(format!("wheel needs n >= 3, got {n}")));
    }
    let g = build_family(&FamilySpec::Wheel(n))?;
    let doc = "hub -> 0, rim v_i -> i";
    let mut triples = Vec::with_capacity(2 * n);
    if n.is_multiple_of(3) {
        // Spokes to v_{3i} and rim edges v_{3j+1} v_{3j+2} get color 2.
        for i in 1..=n {
            triples.push((0, i, if i % 3 == 0 { 2 } else { 1 }));
            triples.push((i, i % n + 1, if i % 3 == 1 { 2 } else { 1 }));
        }
        return ColoredFamily::certify(EdgeColoring::from_triples(g, &triples, 2)?, 2, doc);
    }
    // Properly 3-color the rim, then give each spoke the color missing at its
    // rim vertex, so every rim vertex has a proper star.
    let mut rim = vec![0; n + 1];
    for (i, c) in rim.iter_mut().enumerate().take(n).skip(1) {
        *c = (i - 1) % 3 + 1;
    }
    rim[n] = (1..=3).find(|&c| c != rim[n - 1] && c != rim[1]).unwrap();
    for i in 1..=n {
        let before = if i == 1 { rim[n] } else { rim[i - 1] };
        let spoke = (1..=3).find(|&c| c != before && c != rim[i]).unwrap();
        triples.push((i, i % n + 1, rim[i]));
        triples.push((0, i, spoke));
    }
    ColoredFamily::certify(EdgeColoring::from_triples(g, &triples, 3)?, 3, doc)
}

/// Restriction of the 2-coloring of `W_{3⌈n/3⌉}`; `F_{1,1}` is a single
/// edge and gets one color.
pub fn color_fan(n: usize) -> Result<ColoredFamily> {
    if n < 1 {
        return Err(invalid("fan needs n >= 1"));
    }
    let g = build_family(&FamilySpec::Fan(n))?;
    let doc = "hub -> 0, path v_i -> i";
    if n == 1 {
        return ColoredFamily::certify(EdgeColoring::uniform(g), 1, doc);
    }
    let wheel = color_wheel(3 * n.div_ceil(3))?;
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| wheel.coloring.color_of(u, v).expect("fan edges lie in the wheel"))
        .collect();
    ColoredFamily::certify(EdgeColoring::new(g, colors, 2)?, 2, doc)
}

/// All-ones coloring of a graph where every pair has a matching cut.
pub fn color_pd_one(g: &Graph) -> Result<ColoredFamily> {
    match pd_is_one(g)? {
        MatchingCutCheck::AllPairs(_) => ColoredFamily::certify(EdgeColoring::uniform(g.clone()), 1, "input labels"),
        MatchingCutCheck::Failing { pair } => {
            Err(Error::Precondition(format!("no matching cut separates {} and {}", pair.0, pair.1)))
        }
    }
}

/// Optimal proper edge coloring with its last color class merged into
/// class 1, giving `χ' − 1` colors (one color when `χ' = 1`).
pub fn color_via_chromatic_index(g: &Graph) -> Result<ColoredFamily> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let proper = optimal_proper_edge_coloring(g)?;
    let chi = proper.k();
    if chi == 1 {
        return ColoredFamily::certify(EdgeColoring::uniform(g.clone()), 1, "input labels");
    }
    let colors = proper.colors().iter().map(|&c| if c == chi { 1 } else { c }).collect();
    ColoredFamily::certify(EdgeColoring::new(g.clone(), colors, chi - 1)?, chi - 1, "input labels")
}

/// A pd-coloring of one component of `G − M`. `vertices[i]` is the label in
/// `G` of vertex `i` of `coloring`'s graph.
#[derive(Debug, Clone)]
pub struct ComponentColoring {
    pub vertices: Vec<usize>,
    pub coloring: EdgeColoring,
}

/// Colors `M` with one new color on top of pd-colorings of the components
/// of `G − M`. Single-vertex components need no entry.
pub fn compose_matching_removal(g: &Graph, matching: &[Edge], components: &[ComponentColoring]) -> Result<ColoredFamily> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_matching(matching) {
        return Err(Error::Precondition("edge set is not a matching".into()));
    }
    let rest = g.without_edges(matching)?;
    let mut colors = vec![0; g.m()];
    let mut covered = vec![false; g.n()];
    let mut ell = 0;
    for comp in components {
        let mut sorted = comp.vertices.clone();
        sorted.sort_unstable();
        let expected = rest.reach_within(sorted[0], rest.vertex_mask());
        let given = sorted.iter().fold(0u64, |m, &v| m | 1 << v);
        sorted.dedup();
        if given != expected || sorted.len() != comp.vertices.len() {
            return Err(Error::Precondition(format!(
                "vertices {:?} are not a component of G - M",
                comp.vertices
            )));
        }
        let (induced, _) = rest.induced(&sorted)?;
        let mut mapped = vec![0; comp.vertices.len()];
        for (i, &v) in comp.vertices.iter().enumerate() {
            mapped[i] = sorted.binary_search(&v).unwrap();
        }
        if comp.coloring.graph().relabel(&mapped) != induced {
            return Err(Error::Precondition(format!("coloring graph does not match component {:?}", sorted)));
        }
        for (&(a, b), &c) in comp.coloring.graph().edges().iter().zip(comp.coloring.colors()) {
            colors[g.edge_index(comp.vertices[a], comp.vertices[b]).unwrap()] = c;
        }
        for &v in &comp.vertices {
            covered[v] = true;
        }
        ell = ell.max(comp.coloring.k());
    }
    for component in rest.components() {
        if component.len() > 1 && !covered[component[0]] {
            return Err(Error::Precondition(format!("no coloring given for component {component:?}")));
        }
    }
    for &(u, v) in matching {
        colors[g.edge_index(u, v).ok_or(Error::MissingEdge(u, v))?] = ell + 1;
    }
    let k = if matching.is_empty() { ell.max(1) } else { ell + 1 };
    let coloring = EdgeColoring::new(g.clone(), colors, k)?;

    // Witnesses: M alone between components, F ∪ M inside one.
    let comp_of = |v: usize| components.iter().find(|c| c.vertices.contains(&v));
    let mut witnesses = Vec::new();
    for (x, y) in pairs(g.n()) {
        let same = rest.reach_within(x, rest.vertex_mask()) >> y & 1 == 1;
        let mut cut: Vec<Edge> = matching.to_vec();
        if same {
            let comp = comp_of(x).expect("component with two vertices has a coloring");
            let lx = comp.vertices.iter().position(|&v| v == x).unwrap();
            let ly = comp.vertices.iter().position(|&v| v == y).unwrap();
            let inner = find_proper_cut(&comp.coloring, lx, ly)?.ok_or_else(|| {
                Error::InvalidColoring(format!("component coloring has no proper cut for {x} and {y}"))
            })?;
            cut.extend(inner.crossing_edges.iter().map(|&(a, b)| (comp.vertices[a], comp.vertices[b])));
        }
        let w = witness_from_cut(&coloring, &cut, x, y)?
            .ok_or_else(|| Error::InvalidColoring(format!("composed cut fails for pair ({x}, {y})")))?;
        witnesses.push(w);
    }
    let certificate = PdCertificate { coloring: coloring.clone(), witnesses };
    debug_assert!(certificate.check());
    Ok(ColoredFamily {
        graph: g.clone(),
        coloring,
        claimed_pd: k,
        labeling_doc: "input labels".into(),
        certificate,
    })
}

/// The minimum-size graph of order `n` with pd `k`: the `K_{2,2k−3}` block
/// plus `a_1a_2` gets `k` colors by matching composition, pendant edges get
/// color 1.
pub fn color_extremal(n: usize, k: usize) -> Result<ColoredFamily> {
    let spec = FamilySpec::Extremal { n, k };
    let g = build_family(&spec)?;
    let b = 2 * k - 3;
    let block_vertices: Vec<usize> = (0..2 + b).collect();
    let (block, _) = g.induced(&block_vertices)?;
    // Inside the block, K_{2,b} relabeled so that a_1, a_2 are the small side.
    let base = if b >= 2 {
        let kb = color_complete_bipartite(2, b)?;
        kb.coloring
    } else {
        EdgeColoring::uniform(build_family(&FamilySpec::CompleteBipartite(2, b))?)
    };
    let component = ComponentColoring { vertices: (0..2 + b).collect(), coloring: base };
    let composed = compose_matching_removal(&block, &[(0, 1)], &[component])?;
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| composed.coloring.color_of(u, v).unwrap_or(1))
        .collect();
    ColoredFamily::certify(
        EdgeColoring::new(g, colors, k)?,
        k,
        "a_1 -> 0, a_2 -> 1, b_j -> j+1, pendants attached to a_1",
    )
}

/// Builds the family together with its explicit coloring, where one exists.
pub fn colored_family(spec: &FamilySpec) -> Result<ColoredFamily> {
    use FamilySpec::*;
    spec.validate()?;
    match spec {
        Path(n) if *n >= 2 => color_pd_one(&build_family(spec)?),
        Cycle(3) => color_complete(3),
        Cycle(_) | Hypercube(_) => color_pd_one(&build_family(spec)?),
        Complete(n) => color_complete(*n),
        CompleteBipartite(m, n) if m <= n => color_complete_bipartite(*m, *n),
        Wheel(n) => color_wheel(*n),
        Fan(n) => color_fan(*n),
        Extremal { n, k } => color_extremal(*n, *k),
        K4MinusE => ColoredFamily::certify(
            EdgeColoring::from_triples(
                build_family(spec)?,
                &[(0, 1, 1), (0, 2, 1), (2, 3, 1), (0, 3, 2), (1, 2, 2)],
                2,
            )?,
            2,
            "v_i -> i-1",
        ),
        FPrime => ColoredFamily::certify(
            EdgeColoring::from_triples(
                build_family(spec)?,
                &[(0, 4, 2), (2, 3, 2), (1, 2, 2), (0, 1, 1), (3, 4, 1), (4, 5, 1), (0, 5, 1), (0, 2, 1), (2, 4, 1)],
                2,
            )?,
            2,
            "v_i -> i-1",
        ),
        // Subgraphs of a fan: restrict the fan coloring.
        FMinus14 | FMinus15 | WheelMinusRim { .. } => {
            let g = build_family(spec)?;
            let (hub, fan_order) = fan_embedding(spec);
            let fan = color_fan(fan_order)?;
            let colors = g
                .edges()
                .iter()
                .map(|&(u, v)| fan.coloring.color_of(hub[u], hub[v]).expect("edge lies in the fan"))
                .collect();
            ColoredFamily::certify(EdgeColoring::new(g, colors, 2)?, 2, "see family table")
        }
        other => Err(invalid(format!("no explicit coloring for {other}"))),
    }
}

/// Maps a fan subgraph's labels into `F_{1,r}` (hub `0`, path `1..=r`).
fn fan_embedding(spec: &FamilySpec) -> (Vec<usize>, usize) {
    match spec {
        // Path v_1..v_4 with y: y is the fan hub, the path stays in order.
        FamilySpec::FMinus14 => ((0..5).collect(), 4),
        FamilySpec::FMinus15 => ((0..6).collect(), 5),
        FamilySpec::WheelMinusRim { rim, deleted } => {
            // Cut the rim open after the first deleted edge; the rest is a
            // path that the fan contains.
            let start = deleted[0] % rim + 1;
            let mut map = vec![0; rim + 1];
            for step in 0..*rim {
                let v = (start - 1 + step) % rim + 1;
                map[v] = step + 1;
            }
            (map, *rim)
        }
        _ => unreachable!("only fan subgraphs"),
    }
}
