use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralStats {
    /// `None` when the graph is disconnected (or has no vertices).
    pub diameter: Option<usize>,
    pub max_degree: usize,
    pub is_triangle_free: bool,
    pub is_connected: bool,
    /// `common_neighbors[u][v] = |N(u) ∩ N(v)|`.
    pub common_neighbors: Vec<Vec<usize>>,
}

pub fn structural_stats(g: &Graph) -> StructuralStats {
    let n = g.n();
    let common_neighbors = (0..n)
        .map(|u| (0..n).map(|v| common_neighbor_count(g, u, v)).collect())
        .collect();
    StructuralStats {
        diameter: diameter(g),
        max_degree: g.max_degree(),
        is_triangle_free: is_triangle_free(g),
        is_connected: g.is_connected(),
        common_neighbors,
    }
}

pub fn common_neighbor_count(g: &Graph, u: usize, v: usize) -> usize {
    (g.neighbor_mask(u) & g.neighbor_mask(v)).count_ones() as usize
}

pub fn diameter(g: &Graph) -> Option<usize> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    (0..g.n())
        .map(|s| g.distances_from(s).into_iter().map(|d| d.unwrap()).max().unwrap())
        .max()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| g.neighbor_mask(u) & g.neighbor_mask(v) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn c6() {
        let s = structural_stats(&cycle(6));
        assert_eq!(s.diameter, Some(3));
        assert_eq!(s.max_degree, 2);
        assert!(s.is_triangle_free && s.is_connected);
        assert_eq!(s.common_neighbors[0][2], 1);
        assert_eq!(s.common_neighbors[0][3], 0);
    }

    #[test]
    fn k4() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = structural_stats(&k4);
        assert_eq!((s.diameter, s.max_degree, s.is_triangle_free), (Some(1), 3, false));
        assert_eq!(s.common_neighbors[0][1], 2);
    }

    #[test]
    fn disconnected_has_no_diameter() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let s = structural_stats(&g);
        assert_eq!(s.diameter, None);
        assert!(!s.is_connected);
    }
}
