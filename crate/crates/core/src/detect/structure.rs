//! Connectivity, blocks, `σ_3` and strong dominating paths and cycles.

use crate::graph::{bits, Graph, VertexMask};

pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let mut seen: VertexMask = 1;
    let mut frontier: VertexMask = 1;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |acc, v| acc | g.neighbors(v)) & !seen;
        seen |= next;
        frontier = next;
    }
    seen == g.vertex_mask()
}

/// Connected, at least 3 vertices, no cut vertex.
pub fn is_2connected(g: &Graph) -> bool {
    g.order() >= 3 && is_connected(g) && blocks(g).cut_vertices == 0
}

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// the cut vertices between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets, ordered by their sorted vertex lists.
    pub blocks: Vec<VertexMask>,
    pub cut_vertices: VertexMask,
    /// Indices into `blocks` of the blocks holding exactly one cut vertex.
    pub end_blocks: Vec<usize>,
}

impl BlockDecomposition {
    pub fn block_vertices(&self, i: usize) -> Vec<usize> {
        bits(self.blocks[i]).collect()
    }

    pub fn cut_vertex_list(&self) -> Vec<usize> {
        bits(self.cut_vertices).collect()
    }

    /// The cut vertex shared by every end block, if there is exactly one
    /// such vertex and at least one end block.
    pub fn common_end_cut_vertex(&self) -> Option<usize> {
        let mut common = self.cut_vertices;
        for &i in &self.end_blocks {
            common &= self.blocks[i];
        }
        (!self.end_blocks.is_empty() && common.count_ones() == 1)
            .then(|| common.trailing_zeros() as usize)
    }
}

struct Lowpoint<'a> {
    g: &'a Graph,
    disc: [u8; 64],
    low: [u8; 64],
    time: u8,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexMask>,
    cuts: VertexMask,
}

impl Lowpoint<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for v in bits(self.g.neighbors(u)) {
            if self.disc[v] == 0 {
                children += 1;
                self.stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cuts |= 1 << u;
                    }
                    let mut block = 0;
                    while let Some((a, b)) = self.stack.pop() {
                        block |= (1 << a) | (1 << b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let mut lp = Lowpoint {
        g,
        disc: [0; 64],
        low: [0; 64],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: 0,
    };
    for v in 0..g.order() {
        if lp.disc[v] == 0 {
            if g.degree(v) == 0 {
                lp.time += 1;
                lp.disc[v] = lp.time;
                lp.blocks.push(1 << v);
            } else {
                lp.visit(v, None);
            }
        }
    }
    let mut blocks = lp.blocks;
    blocks.sort_by_key(|&b| bits(b).collect::<Vec<_>>());
    let cut_vertices = lp.cuts;
    let end_blocks = (0..blocks.len())
        .filter(|&i| (blocks[i] & cut_vertices).count_ones() == 1)
        .collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
        end_blocks,
    }
}

/// `σ_3(G)`: largest degree sum over independent triples, `None` if there is
/// no independent triple.
pub fn sigma3(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = None;
    for u in 0..n {
        let free_u = g.vertex_mask() & !g.neighbors(u) & !crate::graph::low_mask(u + 1);
        for v in bits(free_u) {
            let free_uv = free_u & !g.neighbors(v) & !crate::graph::low_mask(v + 1);
            for w in bits(free_uv) {
                let s = g.degree(u) + g.degree(v) + g.degree(w);
                best = best.max(Some(s));
            }
        }
    }
    best
}

/// Vertices reachable from `from` inside `avail`.
fn reach(g: &Graph, from: usize, avail: VertexMask) -> VertexMask {
    let mut seen = g.neighbors(from) & avail;
    let mut frontier = seen;
    while frontier != 0 {
        let next = bits(frontier).fold(0, |acc, v| acc | g.neighbors(v)) & avail & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// A vertex set dominates strongly iff the vertices off it are independent.
fn off_independent(g: &Graph, on: VertexMask) -> bool {
    let off = g.vertex_mask() & !on;
    bits(off).all(|v| g.neighbors(v) & off == 0)
}

struct DomSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    best: Option<Vec<usize>>,
    /// Only vertices above `root` may be used (cycle search).
    cycle_root: Option<usize>,
}

impl DomSearch<'_> {
    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(0, Vec::len)
    }

    fn extend(&mut self, end: usize, visited: VertexMask, allowed: VertexMask) {
        let len = self.path.len();
        let closes = match self.cycle_root {
            None => true,
            Some(root) => len >= 3 && self.g.has_edge(end, root),
        };
        if closes && len > self.best_len() && off_independent(self.g, visited) {
            self.best = Some(self.path.clone());
        }
        let avail = allowed & !visited;
        if len + (reach(self.g, end, avail).count_ones() as usize) <= self.best_len() {
            return;
        }
        for w in bits(self.g.neighbors(end) & avail) {
            self.path.push(w);
            self.extend(w, visited | (1 << w), allowed);
            self.path.pop();
        }
    }
}

/// A longest path `P` such that every vertex off `P` has all its neighbours
/// on `P`. Exhaustive; intended for small graphs.
pub fn strong_dominating_path(g: &Graph) -> Option<Vec<usize>> {
    let mut s = DomSearch {
        g,
        path: Vec::new(),
        best: None,
        cycle_root: None,
    };
    for v in 0..g.order() {
        s.path.clear();
        s.path.push(v);
        s.extend(v, 1 << v, g.vertex_mask());
        if s.best_len() == g.order() {
            break;
        }
    }
    s.best
}

/// A longest cycle with the same domination property, listed from its
/// smallest vertex.
pub fn strong_dominating_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut s = DomSearch {
        g,
        path: Vec::new(),
        best: None,
        cycle_root: None,
    };
    for root in 0..g.order() {
        s.cycle_root = Some(root);
        s.path.clear();
        s.path.push(root);
        let allowed = g.vertex_mask() & !crate::graph::low_mask(root);
        s.extend(root, 1 << root, allowed);
        if s.best_len() == g.order() {
            break;
        }
    }
    s.best
}
