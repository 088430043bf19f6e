use pdisc_core::blocks::block_decomposition;
use pdisc_core::enumerate::enumerate_connected_graphs;
use pdisc_core::graph6::to_graph6;
use pdisc_core::outerplanar::{is_outerplanar, OuterplanarCheck};
use pdisc_core::Graph;

/// A 2-connected graph is outerplanar iff it has a Hamiltonian cycle whose
/// chords pairwise do not cross when drawn inside it.
fn block_is_outerplanar(b: &Graph) -> bool {
    let n = b.n();
    if n <= 3 {
        return true;
    }
    let mut order = vec![0];
    hamiltonian_search(b, &mut order, &mut |cycle| chords_do_not_cross(b, cycle))
}

fn hamiltonian_search(g: &Graph, path: &mut Vec<usize>, accept: &mut impl FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    if path.len() == n {
        return g.has_edge(path[n - 1], path[0]) && accept(path);
    }
    let last = *path.last().unwrap();
    for w in 0..n {
        if g.has_edge(last, w) && !path.contains(&w) {
            path.push(w);
            if hamiltonian_search(g, path, accept) {
                return true;
            }
            path.pop();
        }
    }
    false
}

fn chords_do_not_cross(g: &Graph, cycle: &[usize]) -> bool {
    let n = cycle.len();
    let mut pos = vec![0; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let chords: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
        .collect();
    chords.iter().all(|&(a, b)| chords.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
}

fn oracle(g: &Graph) -> bool {
    let d = block_decomposition(g).unwrap();
    (0..d.len()).all(|i| block_is_outerplanar(&d.block_graph(g, i).0))
}

#[test]
fn minor_search_matches_hamiltonian_oracle() {
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let check = is_outerplanar(&g).unwrap();
            assert_eq!(check.is_outerplanar(), oracle(&g), "{}", to_graph6(&g));
            if let OuterplanarCheck::NotOuterplanar(w) = &check {
                assert!(w.verify(&g), "{}", to_graph6(&g));
            }
        }
    }
}

#[test]
fn outerplanar_graphs_are_sparse() {
    for n in 2..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            if is_outerplanar(&g).unwrap().is_outerplanar() {
                assert!(g.m() <= 2 * n - 3, "{}", to_graph6(&g));
            }
        }
    }
}
