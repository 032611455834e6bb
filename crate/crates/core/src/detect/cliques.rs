use crate::graph::{bits, Graph, VertexMask};
use crate::Clique;

/// `N_r(G)`: the number of `r`-vertex complete subgraphs. `N_0 = 1`.
pub fn count_cliques(g: &Graph, r: usize) -> Clique {
    fn go(g: &Graph, cand: VertexMask, r: usize) -> Clique {
        if r == 0 {
            return 1;
        }
        if r == 1 {
            return cand.count_ones() as Clique;
        }
        if r == 2 {
            return bits(cand)
                .map(|v| (g.neighbors(v) & cand & !((2u64 << v) - 1)).count_ones() as Clique)
                .sum();
        }
        if bits(cand).all(|v| g.neighbors(v) & cand == cand & !(1 << v)) {
            return crate::count::binomial(cand.count_ones() as usize, r)
                .expect("C(64, r) fits in 64 bits");
        }
        let mut total = 0;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = g.neighbors(v) & rest;
            if next.count_ones() as usize >= r - 1 {
                total += go(g, next, r - 1);
            }
        }
        total
    }
    go(g, g.vertex_mask(), r)
}

/// Clique counts `N_0..=N_rmax`.
pub fn clique_profile(g: &Graph, r_max: usize) -> Vec<Clique> {
    (0..=r_max).map(|r| count_cliques(g, r)).collect()
}

/// Whether `K_m` is a subgraph. `m = 0` is always true.
pub fn has_clique(g: &Graph, m: usize) -> bool {
    fn go(g: &Graph, cand: VertexMask, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            if (rest.count_ones() as usize) < need {
                return false;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = g.neighbors(v) & rest;
            if go(g, next, need - 1) {
                return true;
            }
        }
        false
    }
    go(g, g.vertex_mask(), m)
}

/// Whether the vertices of `mask` induce a `K_m` somewhere.
pub fn has_clique_within(g: &Graph, mask: VertexMask, m: usize) -> bool {
    has_clique(&g.induced_mask(mask), m)
}
