use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use pdisc_core::coloring::{CutWitness, EdgeColoring};
use pdisc_core::graph6::parse_graph6;
use pdisc_core::Graph;
use serde_json::{json, Value};

use crate::commands::Failure;
use crate::Common;

pub fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

/// Parses one graph6 string per non-empty line, naming the line on error.
pub fn read_graphs(path: Option<&Path>) -> Result<Vec<Graph>, Failure> {
    let text = read_input(path)?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line).map_err(|e| Failure::Input(format!("line {}: {e}", i + 1)))?);
    }
    if graphs.is_empty() {
        return Err(Failure::Input("no graph6 input".into()));
    }
    Ok(graphs)
}

pub fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Input(format!("cannot write output: {e}")))
        }
    }
}

pub fn json_document(command: &str, body: Value) -> String {
    let mut doc = json!({ "schema": 1, "command": command });
    if let (Some(map), Value::Object(extra)) = (doc.as_object_mut(), body) {
        map.extend(extra);
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    s.push('\n');
    s
}

/// `u-v:c` per edge, space separated.
pub fn coloring_compact(c: &EdgeColoring) -> String {
    let parts: Vec<String> =
        c.graph().edges().iter().zip(c.colors()).map(|(&(u, v), col)| format!("{u}-{v}:{col}")).collect();
    parts.join(" ")
}

pub fn coloring_json(c: &EdgeColoring) -> Value {
    let edges: Vec<[usize; 3]> = c.graph().edges().iter().zip(c.colors()).map(|(&(u, v), &col)| [u, v, col]).collect();
    json!({ "k": c.k(), "edges": edges })
}

pub fn witness_line(w: &CutWitness) -> String {
    let side: Vec<String> = w.side.iter().map(usize::to_string).collect();
    let cut: Vec<String> = w.crossing_edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{}\t{}\t{}\t{}\n", w.separated_pair.0, w.separated_pair.1, side.join(","), cut.join(","))
}
