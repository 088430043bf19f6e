//! Cross-checks of the engines against slow, independent implementations.

use pdisc_core::blocks::block_decomposition;
use pdisc_core::canon::canonical_form;
use pdisc_core::chromatic::chromatic_index;
use pdisc_core::coloring::{find_proper_cut, is_proper_set, EdgeColoring};
use pdisc_core::enumerate::enumerate_connected_graphs;
use pdisc_core::graph6::{parse_graph6, to_graph6};
use pdisc_core::solver::{pd_exact, SolveBudget};
use pdisc_core::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(p)).collect();
        let g = graph_from_bits(n, &bits);
        if g.is_connected() {
            return g;
        }
    }
}

/// graph6 written straight from the definition: the upper triangle read
/// column by column, as a bit string, cut into 6-bit groups.
fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]
    };
    let mut bitstring: Vec<u8> = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bitstring.push(g.has_edge(i, j) as u8);
        }
    }
    while !bitstring.len().is_multiple_of(6) {
        bitstring.push(0);
    }
    for chunk in bitstring.chunks(6) {
        out.push(chunk.iter().fold(0, |acc, &b| acc * 2 + b) + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Searches every edge subset for a proper one whose removal separates the pair.
fn brute_edge_subset_cut(c: &EdgeColoring, u: usize, v: usize) -> bool {
    let g = c.graph();
    let m = g.m();
    for subset in 0u64..(1 << m) {
        let cut: Vec<(usize, usize)> = (0..m).filter(|&e| subset >> e & 1 == 1).map(|e| g.edges()[e]).collect();
        let proper = cut.iter().enumerate().all(|(i, &(a, b))| {
            cut[..i].iter().all(|&(x, y)| {
                let share = a == x || a == y || b == x || b == y;
                !share || c.color_of(a, b) != c.color_of(x, y)
            })
        });
        if !proper {
            continue;
        }
        let rest = g.without_edges(&cut).unwrap();
        if rest.reach_within(u, rest.vertex_mask()) >> v & 1 == 0 {
            return true;
        }
    }
    false
}

/// pd by trying every coloring with 1, 2, … colors; pairs are checked over
/// vertex bipartitions with an explicit crossing-set test.
fn brute_pd(g: &Graph) -> usize {
    let n = g.n();
    let m = g.m();
    let edges = g.edges();
    let separable = |colors: &[usize], u: usize, v: usize| {
        (0u64..1 << n).any(|side| {
            if side >> u & 1 == 0 || side >> v & 1 == 1 {
                return false;
            }
            let crossing: Vec<usize> =
                (0..m).filter(|&e| (side >> edges[e].0 & 1) != (side >> edges[e].1 & 1)).collect();
            crossing.iter().all(|&e| {
                crossing.iter().all(|&f| {
                    e == f
                        || colors[e] != colors[f]
                        || !(edges[e].0 == edges[f].0
                            || edges[e].0 == edges[f].1
                            || edges[e].1 == edges[f].0
                            || edges[e].1 == edges[f].1)
                })
            })
        })
    };
    for k in 1.. {
        let mut colors = vec![0; m];
        loop {
            if (0..n).all(|u| (u + 1..n).all(|v| separable(&colors, u, v))) {
                return k;
            }
            // Next coloring in base k.
            let mut i = 0;
            while i < m && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!()
}

fn brute_chromatic_index(g: &Graph) -> usize {
    let m = g.m();
    let edges = g.edges();
    for k in 1.. {
        let mut colors = vec![0; m];
        loop {
            let proper = (0..m).all(|e| {
                (0..e).all(|f| {
                    let (a, b) = edges[e];
                    let (x, y) = edges[f];
                    colors[e] != colors[f] || !(a == x || a == y || b == x || b == y)
                })
            });
            if proper {
                return k;
            }
            let mut i = 0;
            while i < m && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!()
}

proptest! {
    #[test]
    fn graph6_matches_reference_encoder(g in arb_graph(20)) {
        prop_assert_eq!(to_graph6(&g), reference_graph6(&g));
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).graph, canonical_form(&h).graph);
    }

    #[test]
    fn proper_sets_are_closed_under_subsets(g in arb_graph(7), seed in any::<u64>()) {
        prop_assume!(g.m() > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let colors: Vec<usize> = (0..g.m()).map(|_| rng.gen_range(1..=3)).collect();
        let c = EdgeColoring::new(g.clone(), colors, 3).unwrap();
        let set: Vec<(usize, usize)> = g.edges().iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
        if is_proper_set(&c, &set).unwrap() {
            for drop in 0..set.len() {
                let mut sub = set.clone();
                sub.remove(drop);
                prop_assert!(is_proper_set(&c, &sub).unwrap());
            }
        }
    }
}

#[test]
fn graph6_reference_at_header_boundaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    for n in [61, 62, 63, 64] {
        let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(0.1)).collect();
        let g = graph_from_bits(n, &bits);
        assert_eq!(to_graph6(&g), reference_graph6(&g), "n={n}");
    }
}

#[test]
fn proper_cut_search_agrees_with_edge_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let g = random_connected(&mut rng, n, 0.6);
        let k = rng.gen_range(1..=3);
        let colors: Vec<usize> = (0..g.m()).map(|_| rng.gen_range(1..=k)).collect();
        let c = EdgeColoring::new(g.clone(), colors, k).unwrap();
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        let found = find_proper_cut(&c, u, v).unwrap();
        if let Some(w) = &found {
            assert!(w.is_valid_for(&c));
        }
        assert_eq!(found.is_some(), brute_edge_subset_cut(&c, u, v), "{g:?} {c:?} pair ({u},{v})");
    }
}

#[test]
fn pd_exact_matches_coloring_brute_force() {
    let budget = SolveBudget::default();
    for n in 2..=5 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let pd = pd_exact(&g, &budget).unwrap().value().unwrap();
            assert_eq!(pd, brute_pd(&g), "{}", to_graph6(&g));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..15 {
        let g = random_connected(&mut rng, 6, 0.35);
        if g.m() > 9 {
            continue;
        }
        assert_eq!(pd_exact(&g, &budget).unwrap().value().unwrap(), brute_pd(&g), "{}", to_graph6(&g));
    }
}

#[test]
fn chromatic_index_matches_brute_force() {
    for n in 2..=5 {
        for g in enumerate_connected_graphs(n).unwrap() {
            assert_eq!(chromatic_index(&g).unwrap(), brute_chromatic_index(&g), "{}", to_graph6(&g));
        }
    }
}

#[test]
fn blocks_match_vertex_removal_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let g = random_connected(&mut rng, n, 0.25);
        let d = block_decomposition(&g).unwrap();

        // A cut vertex is one whose removal disconnects the rest.
        let cut: Vec<usize> = (0..n)
            .filter(|&x| {
                let rest = g.vertex_mask() & !(1 << x);
                rest != 0 && g.reach_within(rest.trailing_zeros() as usize, rest) != rest
            })
            .collect();
        assert_eq!(d.cut_vertices, cut, "{g:?}");

        // Two edges share a block iff no single vertex removal separates
        // their remaining endpoints.
        let mut block_of = vec![usize::MAX; g.m()];
        for (b, es) in d.block_edges.iter().enumerate() {
            for &e in es {
                assert_eq!(block_of[e], usize::MAX, "edge in two blocks");
                block_of[e] = b;
            }
        }
        for e in 0..g.m() {
            for f in e + 1..g.m() {
                let (a, b) = g.edges()[e];
                let (c, dd) = g.edges()[f];
                let together = (0..n).all(|x| {
                    let rest = g.vertex_mask() & !(1 << x);
                    let p = if a == x { b } else { a };
                    let q = if c == x { dd } else { c };
                    g.reach_within(p, rest) >> q & 1 == 1
                });
                assert_eq!(block_of[e] == block_of[f], together, "{g:?} edges {e} {f}");
            }
        }
    }
}

#[test]
fn enumeration_counts_match_known_sequence() {
    // Connected graphs on n unlabeled vertices: 1, 2, 6, 21, 112, 853.
    let counts: Vec<usize> = (2..=7).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 6, 21, 112, 853]);
}

#[test]
fn enumeration_matches_labeled_brute_force() {
    // Minimum adjacency string over all relabelings as a canonical key.
    fn brute_key(g: &Graph) -> Vec<u64> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u64>> = None;
        permute(&mut perm, 0, &mut |p| {
            let rows = g.relabel(p).adjacency().to_vec();
            if best.as_ref().is_none_or(|b| rows < *b) {
                best = Some(rows);
            }
        });
        best.unwrap()
    }
    fn permute(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == p.len() {
            f(p);
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            permute(p, i + 1, f);
            p.swap(i, j);
        }
    }
    for n in 2..=5 {
        let mut keys = std::collections::BTreeSet::new();
        for mask in 0u64..1 << (n * (n - 1) / 2) {
            let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|i| mask >> i & 1 == 1).collect();
            let g = graph_from_bits(n, &bits);
            if g.is_connected() {
                keys.insert(brute_key(&g));
            }
        }
        let ours: std::collections::BTreeSet<Vec<u64>> =
            enumerate_connected_graphs(n).unwrap().iter().map(brute_key).collect();
        assert_eq!(ours, keys, "n={n}");
    }
}
