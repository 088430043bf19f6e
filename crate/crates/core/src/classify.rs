//! Recognition of the outerplanar diameter-2 graphs with pd 2: wheels with
//! some rim edges removed, and three sporadic graphs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::families::{build_family, FamilySpec};
use crate::graph::Graph;
use crate::outerplanar::is_outerplanar;
use crate::stats::diameter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Diam2Kind {
    FamilyD,
    FMinus15,
    FMinus14,
    FPrime,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diam2Witness {
    /// Family string of the matched graph, e.g. `dfam:5;1,3` or `fprime`.
    pub family: String,
    /// `isomorphism[v]` is the vertex of the family graph matched to input
    /// vertex `v`.
    pub isomorphism: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diam2Class {
    pub classification: Diam2Kind,
    pub witness: Option<Diam2Witness>,
}

impl Diam2Class {
    pub fn is_named(&self) -> bool {
        self.classification != Diam2Kind::Other
    }

    /// Whether the witness maps `g` exactly onto the family graph it names.
    pub fn reconstructs(&self, g: &Graph) -> bool {
        let Some(w) = &self.witness else {
            return !self.is_named();
        };
        let Ok(spec) = w.family.parse::<FamilySpec>() else {
            return false;
        };
        let Ok(target) = build_family(&spec) else {
            return false;
        };
        let mut seen = vec![false; g.n()];
        let bijective = w.isomorphism.len() == g.n()
            && target.n() == g.n()
            && w.isomorphism.iter().all(|&x| x < g.n() && !std::mem::replace(&mut seen[x], true));
        bijective && g.relabel(&w.isomorphism) == target
    }
}

/// Every candidate of order `n`, one per isomorphism class, keyed by
/// canonical adjacency.
fn candidates(n: usize) -> Result<BTreeMap<Vec<u64>, (Diam2Kind, FamilySpec)>> {
    let mut out = BTreeMap::new();
    let mut add = |kind, spec: FamilySpec| -> Result<()> {
        let g = build_family(&spec)?;
        out.entry(canonical_form(&g).graph.adjacency().to_vec()).or_insert((kind, spec));
        Ok(())
    };
    match n {
        5 => add(Diam2Kind::FMinus14, FamilySpec::FMinus14)?,
        6 => {
            add(Diam2Kind::FMinus15, FamilySpec::FMinus15)?;
            add(Diam2Kind::FPrime, FamilySpec::FPrime)?;
        }
        _ => {}
    }
    if n >= 4 {
        let rim = n - 1;
        // Up to rim − 1 deleted edges; deleting the whole rim leaves a star.
        for subset in 1u64..(1 << rim) - 1 {
            let deleted: Vec<usize> = (0..rim).filter(|&i| subset >> i & 1 == 1).map(|i| i + 1).collect();
            add(Diam2Kind::FamilyD, FamilySpec::WheelMinusRim { rim, deleted })?;
        }
    }
    Ok(out)
}

pub fn classify_diameter2_outerplanar(g: &Graph) -> Result<Diam2Class> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match diameter(g) {
        Some(2) => {}
        d => return Err(Error::Precondition(format!("diameter is {}, not 2", d.unwrap_or(0)))),
    }
    if !is_outerplanar(g)?.is_outerplanar() {
        return Err(Error::Precondition("graph is not outerplanar".into()));
    }
    let canon = canonical_form(g);
    let table = candidates(g.n())?;
    let Some((kind, spec)) = table.get(canon.graph.adjacency()) else {
        return Ok(Diam2Class { classification: Diam2Kind::Other, witness: None });
    };
    let target = build_family(spec)?;
    let target_canon = canonical_form(&target);
    let mut from_canonical = vec![0; g.n()];
    for (v, &c) in target_canon.labeling.iter().enumerate() {
        from_canonical[c] = v;
    }
    let isomorphism = canon.labeling.iter().map(|&c| from_canonical[c]).collect();
    Ok(Diam2Class {
        classification: *kind,
        witness: Some(Diam2Witness { family: spec.to_string(), isomorphism }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Graph {
        build_family(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn sporadic_graphs() {
        let fp = fam("fprime").relabel(&[3, 0, 5, 1, 4, 2]);
        let c = classify_diameter2_outerplanar(&fp).unwrap();
        assert_eq!(c.classification, Diam2Kind::FPrime);
        assert!(c.reconstructs(&fp));
        assert_eq!(classify_diameter2_outerplanar(&fam("fminus14")).unwrap().classification, Diam2Kind::FMinus14);
        assert_eq!(classify_diameter2_outerplanar(&fam("fminus15")).unwrap().classification, Diam2Kind::FMinus15);
    }

    #[test]
    fn wheel_minus_one_rim_edge() {
        let g = fam("dfam:5;2").relabel(&[5, 4, 3, 2, 1, 0]);
        let c = classify_diameter2_outerplanar(&g).unwrap();
        assert_eq!(c.classification, Diam2Kind::FamilyD);
        assert!(c.reconstructs(&g));
    }

    #[test]
    fn c5_is_other() {
        let c = classify_diameter2_outerplanar(&fam("cycle:5")).unwrap();
        assert_eq!(c, Diam2Class { classification: Diam2Kind::Other, witness: None });
        assert!(c.reconstructs(&fam("cycle:5")));
    }

    #[test]
    fn preconditions() {
        assert!(classify_diameter2_outerplanar(&fam("path:5")).is_err());
        assert!(classify_diameter2_outerplanar(&fam("kmn:2,3")).is_err());
        assert!(classify_diameter2_outerplanar(&fam("complete:4")).is_err());
        assert!(classify_diameter2_outerplanar(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn wrong_witness_is_rejected() {
        let g = fam("fminus14");
        let mut c = classify_diameter2_outerplanar(&g).unwrap();
        c.witness.as_mut().unwrap().isomorphism.swap(0, 2);
        assert!(!c.reconstructs(&g));
    }
}
