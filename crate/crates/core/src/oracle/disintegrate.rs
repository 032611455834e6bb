use serde::Serialize;

use crate::detect::structure::blocks;
use crate::graph::{bits, Graph, VertexMask};

/// Result of repeatedly deleting vertices of degree below a threshold.
#[derive(Debug, Clone, Serialize)]
pub struct DisintegrationTrace {
    /// Deleted vertices in deletion order, as labels of the input graph.
    pub deleted: Vec<usize>,
    /// What is left, relabeled `0..core_size` in increasing input label.
    #[serde(serialize_with = "as_graph6")]
    pub core: Graph,
    /// Input labels of the core vertices.
    pub core_labels: Vec<usize>,
    pub core_size: usize,
    /// Connectivity-preserving mode found low-degree vertices but none it
    /// was allowed to delete.
    pub stuck: bool,
}

fn as_graph6<S: serde::Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_graph6())
}

/// Deletes vertices of degree `< delta` until none is left.
///
/// Plain mode always takes the lowest-labeled such vertex. With
/// `preserve_connectivity`, once the current graph has a cut vertex only
/// non-cut vertices of end blocks may go; if none qualifies the run stops
/// with `stuck` set.
pub fn disintegrate(g: &Graph, delta: usize, preserve_connectivity: bool) -> DisintegrationTrace {
    let mut alive: VertexMask = g.vertex_mask();
    let mut deleted = Vec::new();
    let mut stuck = false;
    loop {
        let low: VertexMask = bits(alive)
            .filter(|&v| ((g.neighbors(v) & alive).count_ones() as usize) < delta)
            .fold(0, |acc, v| acc | (1 << v));
        if low == 0 {
            break;
        }
        let allowed = if preserve_connectivity {
            low & deletable(g, alive)
        } else {
            low
        };
        if allowed == 0 {
            stuck = true;
            break;
        }
        let v = allowed.trailing_zeros() as usize;
        alive &= !(1 << v);
        deleted.push(v);
    }
    let core_labels: Vec<usize> = bits(alive).collect();
    DisintegrationTrace {
        deleted,
        core: g.induced_mask(alive),
        core_size: core_labels.len(),
        core_labels,
        stuck,
    }
}

/// Vertices of the current graph whose removal the preserving mode allows.
fn deletable(g: &Graph, alive: VertexMask) -> VertexMask {
    let labels: Vec<usize> = bits(alive).collect();
    let current = g.induced_mask(alive);
    let decomposition = blocks(&current);
    let lift = |mask: VertexMask| bits(mask).fold(0u64, |acc, i| acc | (1 << labels[i]));
    if decomposition.cut_vertices == 0 {
        return alive;
    }
    let in_end_blocks = decomposition
        .end_blocks
        .iter()
        .fold(0, |acc, &i| acc | decomposition.blocks[i]);
    lift(in_end_blocks & !decomposition.cut_vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{g1, h_extremal};

    #[test]
    fn examples() {
        let tri_pendant = Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let t = disintegrate(&tri_pendant, 2, false);
        assert_eq!(t.deleted, vec![3]);
        assert_eq!(t.core, Graph::complete(3).unwrap());

        let star = Graph::star(7).unwrap();
        let t = disintegrate(&star, 2, false);
        assert_eq!(t.core_size, 0);
        assert_eq!(t.deleted, vec![1, 2, 3, 4, 5, 0, 6]);

        let h = h_extremal(12, 4, 8).unwrap();
        let t = disintegrate(&h, 3, false);
        assert!(t.deleted.is_empty());
        assert_eq!(t.core, h);
    }

    #[test]
    fn preserving_mode() {
        // a path only ever loses an end
        let p = Graph::path(5).unwrap();
        let t = disintegrate(&p, 2, true);
        assert_eq!(t.deleted, vec![0, 1, 2, 3, 4]);
        assert!(!t.stuck);

        // the center of G_1 is a cut vertex until only one block is left
        let g = g1(7, 6).unwrap();
        let t = disintegrate(&g, 3, true);
        assert_eq!(t.deleted, vec![1, 2, 3, 4, 0, 5, 6]);

        // two K_4 joined through a degree-2 cut vertex
        let k4 = Graph::complete(4).unwrap();
        let mut g = k4
            .disjoint_union(&k4)
            .unwrap()
            .with_vertex(0b1_0001)
            .unwrap();
        let t = disintegrate(&g, 3, true);
        assert!(t.stuck && t.deleted.is_empty());
        g = g.without_edge(8, 4).unwrap();
        let t = disintegrate(&g, 3, false);
        assert_eq!(t.deleted, vec![8]);
        assert_eq!(t.core_labels, (0..8).collect::<Vec<_>>());
    }
}
