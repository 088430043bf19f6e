use pdisc_core::families::{colored_family, FamilySpec};
use pdisc_core::solver::{pd_exact, SolveBudget};

fn specs() -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut out = vec![K4MinusE, FMinus14, FMinus15, FPrime, Hypercube(3)];
    out.extend((2..=7).map(Path));
    out.extend((3..=8).map(Cycle));
    out.extend((2..=7).map(Complete));
    for m in 1..=4 {
        out.extend((m..=5).map(|n| CompleteBipartite(m, n)));
    }
    out.extend((3..=8).map(Wheel));
    out.extend((1..=7).map(Fan));
    for n in 3..=9usize {
        for k in 2..=n.div_ceil(2) {
            out.push(Extremal { n, k });
        }
    }
    out.push(WheelMinusRim { rim: 5, deleted: vec![1, 3] });
    out.push(WheelMinusRim { rim: 6, deleted: vec![2, 3, 4, 5, 6] });
    out.push(WheelMinusRim { rim: 3, deleted: vec![1] });
    out
}

#[test]
fn explicit_colorings_verify_and_are_optimal() {
    let budget = SolveBudget::default();
    for spec in specs() {
        let fam = colored_family(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
        assert!(fam.certificate.check(), "{spec}");
        assert_eq!(fam.coloring.used_colors(), fam.claimed_pd, "{spec} uses a different number of colors");
        if fam.graph.n() <= 9 {
            let pd = pd_exact(&fam.graph, &budget).unwrap().value().unwrap();
            assert_eq!(pd, fam.claimed_pd, "{spec}");
        }
    }
}

#[test]
fn spec_strings_round_trip() {
    for spec in specs() {
        let text = spec.to_string();
        assert_eq!(text.parse::<FamilySpec>().unwrap(), spec);
    }
}
