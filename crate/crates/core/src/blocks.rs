//! Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex list of each block.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted edge indices of each block, aligned with `blocks`.
    pub block_edges: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The `i`-th block as a standalone graph, with its label map back into
    /// the parent graph.
    pub fn block_graph(&self, g: &Graph, i: usize) -> (Graph, Vec<usize>) {
        let verts = &self.blocks[i];
        let mut local = vec![usize::MAX; g.n()];
        for (j, &v) in verts.iter().enumerate() {
            local[v] = j;
        }
        let edges = self.block_edges[i].iter().map(|&e| {
            let (u, v) = g.edges()[e];
            (local[u], local[v])
        });
        let graph = Graph::new(verts.len(), edges).expect("block edges are a simple graph");
        (graph, verts.clone())
    }
}

/// Lowpoint DFS with an edge stack. Blocks are listed in order of their
/// smallest edge index.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut st = Dfs {
        g,
        disc: vec![usize::MAX; g.n()],
        low: vec![0; g.n()],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; g.n()],
    };
    st.visit(0, usize::MAX);

    let mut pieces: Vec<(Vec<usize>, Vec<usize>)> = st
        .blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut mask = 0u64;
            for &e in &edges {
                let (u, v) = g.edges()[e];
                mask |= 1 << u | 1 << v;
            }
            (bits(mask).collect(), edges)
        })
        .collect();
    pieces.sort_by_key(|(_, edges)| edges[0]);
    let (blocks, block_edges) = pieces.into_iter().unzip();
    let cut_vertices = (0..g.n()).filter(|&v| st.is_cut[v]).collect();
    Ok(BlockDecomposition { blocks, block_edges, cut_vertices })
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

impl Dfs<'_> {
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in self.g.neighbors(v) {
            let e = self.g.edge_index(v, w).unwrap();
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edge_stack.push(e);
                self.visit(w, v);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent != usize::MAX {
                        self.is_cut[v] = true;
                    }
                    let mut block = Vec::new();
                    while let Some(f) = self.edge_stack.pop() {
                        block.push(f);
                        if f == e {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[v] {
                self.edge_stack.push(e);
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.is_cut[v] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_has_one_block_per_edge() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let bd = block_decomposition(&p4).unwrap();
        assert_eq!(bd.len(), 3);
        assert_eq!(bd.cut_vertices, vec![1, 2]);
        assert!(bd.block_edges.iter().all(|b| b.len() == 1));
    }

    #[test]
    fn k4_is_one_block() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let bd = block_decomposition(&k4).unwrap();
        assert_eq!(bd.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(bd.cut_vertices.is_empty());
    }

    #[test]
    fn bowtie_has_two_blocks() {
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bd = block_decomposition(&g).unwrap();
        assert_eq!(bd.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(bd.cut_vertices, vec![2]);
        let (b1, map) = bd.block_graph(&g, 1);
        assert_eq!((b1.n(), b1.m()), (3, 3));
        assert_eq!(map, vec![2, 3, 4]);
    }

    #[test]
    fn errors() {
        assert_eq!(block_decomposition(&Graph::empty(1).unwrap()), Err(Error::TrivialGraph));
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_decomposition(&g), Err(Error::Disconnected));
    }
}
