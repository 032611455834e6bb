//! Exact detection: clique counts, long paths, block structure, and the
//! structural classifier for `{P_k, K_m}`-free graphs of large minimum degree.

pub mod classify;
pub mod cliques;
pub mod paths;
pub mod structure;

pub use cliques::{count_cliques, has_clique};
pub use paths::{has_path, longest_path_order};
pub use structure::{blocks, is_2connected, is_connected, BlockDecomposition};

use crate::graph::Graph;

/// Neither `P_k` nor `K_m` is a subgraph.
pub fn is_free(g: &Graph, k: usize, m: usize) -> bool {
    !has_clique(g, m) && !has_path(g, k)
}

/// Adding any missing edge creates `P_k` or `K_m`.
pub fn is_edge_maximal_free(g: &Graph, k: Option<usize>, m: Option<usize>) -> bool {
    g.non_edges().all(|(u, v)| {
        let h = g.with_edge(u, v).expect("non-edge endpoints are valid");
        k.is_some_and(|k| has_path(&h, k)) || m.is_some_and(|m| has_clique(&h, m))
    })
}
