//! Connected graphs up to isomorphism, by vertex extension.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves a
//! connected graph (e.g. a leaf of a spanning tree), so joining a new vertex to
//! every nonempty subset of every connected `(n−1)`-vertex representative and
//! rejecting repeated canonical forms yields each class exactly once.

use std::collections::BTreeSet;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 7;

/// Orders graphs by size, then by canonical adjacency.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    m: usize,
    rows: Vec<u64>,
}

fn key(g: &Graph) -> Key {
    Key { m: g.m(), rows: g.adjacency().to_vec() }
}

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices, sorted by edge count and then canonical adjacency.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::Precondition(format!("order {n} outside {MIN_ORDER}..={MAX_ORDER}")));
    }
    let mut level = vec![Graph::empty(1)?];
    for order in 2..=n {
        let mut seen: BTreeSet<Key> = BTreeSet::new();
        for base in &level {
            let prev = order - 1;
            for subset in 1u64..(1 << prev) {
                let mut adj = base.adjacency().to_vec();
                adj.push(subset);
                for (v, row) in adj.iter_mut().enumerate().take(prev) {
                    if subset >> v & 1 == 1 {
                        *row |= 1 << prev;
                    }
                }
                let g = Graph::from_adjacency(adj);
                seen.insert(key(&canonical_form(&g).graph));
            }
        }
        level = seen.into_iter().map(|k| Graph::from_adjacency(k.rows)).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three_is_path_and_triangle() {
        let gs = enumerate_connected_graphs(3).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs.iter().map(Graph::m).collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (2..=5).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 21]);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_connected_graphs(1).is_err());
        assert!(enumerate_connected_graphs(8).is_err());
    }
}
