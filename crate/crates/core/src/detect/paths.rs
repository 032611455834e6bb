//! Exact longest-path search: depth-first extension from every start vertex,
//! pruned by the number of vertices still reachable from the path's end and
//! by trying only one vertex out of each set of unvisited twins.

use crate::graph::{bits, Graph, VertexMask};

/// Vertices reachable from `from` through `avail` (excluding `from` itself).
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

/// For each vertex, the lower-labeled vertices with the same neighbourhood
/// apart from each other. Swapping two such vertices is an automorphism.
fn lower_twins(g: &Graph) -> Vec<VertexMask> {
    let n = g.order();
    (0..n)
        .map(|v| {
            (0..v)
                .filter(|&u| g.neighbors(u) & !(1 << v) == g.neighbors(v) & !(1 << u))
                .fold(0, |acc, u| acc | (1 << u))
        })
        .collect()
}

struct PathSearch<'a> {
    g: &'a Graph,
    twins: Vec<VertexMask>,
    /// Stop as soon as a path of this order exists.
    target: usize,
    best: usize,
    best_path: Vec<usize>,
    path: Vec<usize>,
}

impl PathSearch<'_> {
    fn extend(&mut self, end: usize, visited: VertexMask) -> bool {
        let len = self.path.len();
        if len > self.best {
            self.best = len;
            self.best_path.clone_from(&self.path);
            if len >= self.target {
                return true;
            }
        }
        let avail = self.g.vertex_mask() & !visited;
        let reachable = reach(self.g, end, avail);
        if len + reachable.count_ones() as usize <= self.best {
            return false;
        }
        let candidates = self.g.neighbors(end) & avail;
        for w in bits(candidates) {
            if self.twins[w] & candidates != 0 {
                continue;
            }
            self.path.push(w);
            let done = self.extend(w, visited | (1 << w));
            self.path.pop();
            if done {
                return true;
            }
        }
        false
    }
}

fn search(g: &Graph, target: usize) -> (usize, Vec<usize>) {
    let n = g.order();
    let mut s = PathSearch {
        g,
        twins: lower_twins(g),
        target,
        best: 0,
        best_path: Vec::new(),
        path: Vec::with_capacity(n),
    };
    let mut done_components = 0u64;
    for v in 0..n {
        if done_components & (1 << v) != 0 || s.twins[v] != 0 {
            continue;
        }
        let comp = reach(g, v, g.vertex_mask()) | (1 << v);
        if comp.count_ones() as usize <= s.best {
            done_components |= comp;
            continue;
        }
        s.path.clear();
        s.path.push(v);
        if s.extend(v, 1 << v) {
            break;
        }
        if s.best == comp.count_ones() as usize {
            done_components |= comp;
        }
    }
    (s.best, s.best_path)
}

/// `p(G)`: the number of vertices of a longest path (0 for the empty graph).
pub fn longest_path_order(g: &Graph) -> usize {
    search(g, g.order()).0
}

/// A longest path as a vertex sequence.
pub fn longest_path(g: &Graph) -> Vec<usize> {
    search(g, g.order()).1
}

/// Whether `P_k` is a subgraph, i.e. `p(G) ≥ k`.
pub fn has_path(g: &Graph, k: usize) -> bool {
    let n = g.order();
    match k {
        0 => true,
        _ if k > n => false,
        1 => true,
        2 => g.size() > 0,
        _ => {
            // a P_k needs k − 2 interior vertices of degree >= 2
            let deg2 = g.rows().iter().filter(|r| r.count_ones() >= 2).count();
            deg2 + 2 >= k && search(g, k).0 >= k
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{double_star, h_extremal};

    pub(crate) fn petersen() -> Graph {
        Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(longest_path_order(&Graph::cycle(5).unwrap()), 5);
        assert_eq!(longest_path_order(&double_star(3, 3).unwrap()), 4);
        assert_eq!(longest_path_order(&petersen()), 10);
        assert_eq!(longest_path_order(&Graph::empty(0).unwrap()), 0);
        assert_eq!(longest_path_order(&Graph::empty(3).unwrap()), 1);
        assert!(!has_path(&h_extremal(15, 4, 8).unwrap(), 8));
        assert!(has_path(&h_extremal(15, 4, 8).unwrap(), 7));
        assert!(has_path(&Graph::complete(9).unwrap(), 9));
        assert!(!has_path(&Graph::empty(5).unwrap(), 2));
    }

    #[test]
    fn returned_path_is_a_path() {
        let g = petersen();
        let p = longest_path(&g);
        assert_eq!(p.len(), 10);
        assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
    }

    #[test]
    fn large_sparse_graphs_finish() {
        assert_eq!(longest_path_order(&Graph::path(64).unwrap()), 64);
        assert_eq!(longest_path_order(&Graph::star(64).unwrap()), 3);
        assert!(!has_path(&h_extremal(64, 4, 8).unwrap(), 8));
    }
}
