//! Labeled builders for the named graph families.
//!
//! Labels are deterministic: Turán parts are consecutive with the largest
//! parts first, joins put the left operand first, and the `G_i` families put
//! their center(s) first and then the blocks in order.

use crate::formulas::{delta_k, h_shape, has_h_minus, turan_part_sizes, HShape};
use crate::graph::{Graph, GraphError};

type Result<T> = std::result::Result<T, GraphError>;

fn bad<T>(kind: &'static str, reason: impl Into<String>) -> Result<T> {
    Err(GraphError::params(kind, reason))
}

/// `T(n, p)`; `p ≥ n` gives `K_n`.
pub fn turan(n: usize, p: usize) -> Result<Graph> {
    if p == 0 {
        return bad("turan", "needs at least one part");
    }
    let mut g = Graph::complete(n)?;
    let mut start = 0;
    for size in turan_part_sizes(n, p) {
        for u in start..start + size {
            for v in u + 1..start + size {
                g.clear_edge(u, v);
            }
        }
        start += size;
    }
    Ok(g)
}

/// `H_n(m, k)`. Accepts `m = k` (the `H_n(k, k)` used for connected path
/// extremal numbers) in addition to `m < k`.
pub fn h_extremal(n: usize, m: usize, k: usize) -> Result<Graph> {
    let shape = h_shape(m, k).map_err(|e| GraphError::params("h_extremal", e.to_string()))?;
    let d = delta_k(k);
    if n < d + 2 {
        return bad("h_extremal", format!("needs n >= δ_k + 2 = {}", d + 2));
    }
    match shape {
        HShape::TuranJoin => turan(d, m - 2)?.join(&Graph::empty(n - d)?),
        HShape::CliqueJoin => Graph::complete(d)?.join(&Graph::empty(n - d)?),
        HShape::CliqueJoinEdge => {
            let rest = Graph::empty(n - d - 2)?.disjoint_union(&Graph::complete(2)?)?;
            Graph::complete(d)?.join(&rest)
        }
    }
}

/// `H_n^-(m, k)`: `T(δ_k, m−2) ∨ (I_{n−δ_k−2} ∪ K_2)` minus the edge between
/// the lower `K_2` vertex and the lowest vertex in a singleton part.
pub fn h_minus(n: usize, m: usize, k: usize) -> Result<Graph> {
    if !(4..=64).contains(&k) || m < 3 || m >= k {
        return bad("h_minus", format!("needs 3 <= m < k, got m={m}, k={k}"));
    }
    if !has_h_minus(m, k) {
        return bad("h_minus", "needs k odd and m − 2 <= δ_k <= 2m − 5");
    }
    let d = delta_k(k);
    if n < d + 4 {
        return bad("h_minus", format!("needs n >= δ_k + 4 = {}", d + 4));
    }
    let rest = Graph::empty(n - d - 2)?.disjoint_union(&Graph::complete(2)?)?;
    let mut g = turan(d, m - 2)?.join(&rest)?;
    let singleton = singleton_part_vertices(d, m - 2)[0];
    g.clear_edge(singleton, n - 2);
    Ok(g)
}

/// Vertices of `T(n, p)` lying in parts of size one.
pub fn singleton_part_vertices(n: usize, p: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut start = 0;
    for size in turan_part_sizes(n, p) {
        if size == 1 {
            out.push(start);
        }
        start += size;
    }
    out
}

/// All graphs obtainable by deleting one edge between a `K_2` vertex and a
/// singleton-part vertex (not only the canonical choice made by [`h_minus`]).
pub fn h_minus_variants(n: usize, m: usize, k: usize) -> Result<Vec<Graph>> {
    let base = h_minus(n, m, k)?;
    let d = delta_k(k);
    let mut full = base.clone();
    full.set_edge(singleton_part_vertices(d, m - 2)[0], n - 2);
    let mut out = Vec::new();
    for s in singleton_part_vertices(d, m - 2) {
        for x in [n - 2, n - 1] {
            out.push(full.without_edge(s, x)?);
        }
    }
    Ok(out)
}

/// Double star: centers 0 and `a` with `a − 1` and `b − 1` leaves.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return bad("double_star", "both sides need at least one vertex");
    }
    Graph::star(a)?
        .disjoint_union(&Graph::star(b)?)?
        .with_edge(0, a)
}

fn g1_blocks(n: usize, k: usize) -> Result<usize> {
    let d = delta_k(k);
    if d == 0 {
        return bad("g1", format!("needs k >= 4, got {k}"));
    }
    if n < 1 + d || !(n - 1).is_multiple_of(d) {
        return bad(
            "g1",
            format!(
                "n − 1 = {} must be a positive multiple of δ_k = {d}",
                n.saturating_sub(1)
            ),
        );
    }
    Ok((n - 1) / d)
}

/// `G_1(n, k) = K_1 ∨ t K_{δ_k}` with `n = 1 + t δ_k`, center 0.
pub fn g1(n: usize, k: usize) -> Result<Graph> {
    let t = g1_blocks(n, k)?;
    Graph::complete(1)?.join(&Graph::copies(t, &Graph::complete(delta_k(k))?)?)
}

fn require_odd(kind: &'static str, k: usize) -> Result<()> {
    if k.is_multiple_of(2) {
        return bad(kind, format!("needs odd k, got {k}"));
    }
    Ok(())
}

/// `G_2`: centers of `G_1(n1, k)` (label 0) and `G_1(n2, k)` (label `n1`) joined.
pub fn g2(n1: usize, n2: usize, k: usize) -> Result<Graph> {
    require_odd("g2", k)?;
    g1(n1, k)?.disjoint_union(&g1(n2, k)?)?.with_edge(0, n1)
}

/// `G_3`: `G_1(n − 1, k)` with one block `K_{δ_k+1}` replaced by the block `b`
/// glued at its vertex `attach`. Center is 0; the remaining `K_{δ_k}` blocks
/// follow, then `b` minus `attach` in its own label order. Freeness and the
/// degree condition of the result are left to the caller.
pub fn g3(n: usize, k: usize, b: &Graph, attach: usize) -> Result<Graph> {
    use crate::detect::structure::is_2connected;
    require_odd("g3", k)?;
    let d = delta_k(k);
    if b.order() != d + 2 {
        return bad(
            "g3",
            format!("block must have δ_k + 2 = {} vertices", d + 2),
        );
    }
    if attach >= b.order() {
        return bad("g3", "attach vertex out of range");
    }
    if !is_2connected(b) {
        return bad("g3", "block must be 2-connected");
    }
    let t = g1_blocks(n.saturating_sub(1), k)?;
    let others: Vec<usize> = (0..b.order()).filter(|&v| v != attach).collect();
    let mut order = vec![attach];
    order.extend(&others);
    let rooted = b.relabel(&order)?;
    let blocks = Graph::copies(t - 1, &Graph::complete(d)?)?;
    let mut g = Graph::complete(1)?.join(&blocks)?;
    let base = g.order();
    let mut rows: Vec<u64> = g.rows().to_vec();
    rows.extend(std::iter::repeat_n(0, d + 1));
    g = Graph::from_rows_unchecked(rows);
    for (u, v) in rooted.edges() {
        let map = |x: usize| if x == 0 { 0 } else { base + x - 1 };
        g.set_edge(map(u), map(v));
    }
    Ok(g)
}

fn g45(n1: usize, n2: usize, join_star_center: bool) -> Result<Graph> {
    if n2 < 4 {
        return bad("g4/g5", format!("needs n2 >= 4, got {n2}"));
    }
    let left = g1(n1, 7)?;
    let star = Graph::star(n2 - 1)?;
    let mut g = left.disjoint_union(&star)?;
    let s = n1;
    for leaf in s + 1..s + n2 - 1 {
        g.set_edge(0, leaf);
    }
    if join_star_center {
        g.set_edge(0, s);
    }
    Ok(g)
}

/// `G_4`: center of `G_1(n1, 7)` joined to every leaf of `K_{1, n2−2}`
/// (star center at label `n1`).
pub fn g4(n1: usize, n2: usize) -> Result<Graph> {
    g45(n1, n2, false)
}

/// `G_5`: as [`g4`] but also joined to the star center.
pub fn g5(n1: usize, n2: usize) -> Result<Graph> {
    g45(n1, n2, true)
}

/// `n/(k−1)` disjoint copies of `T(k−1, m−1)`.
pub fn turan_union(n: usize, k: usize, m: usize) -> Result<Graph> {
    if k < 2 || m < 2 {
        return bad("turan_union", "needs k >= 2 and m >= 2");
    }
    if !n.is_multiple_of(k - 1) {
        return bad(
            "turan_union",
            format!("k − 1 = {} does not divide n = {n}", k - 1),
        );
    }
    Graph::copies(n / (k - 1), &turan(k - 1, m - 1)?)
}

/// `I_2 ∨ t K_2` (`clique = false`) or `K_2 ∨ t K_2`.
pub fn pair_join_matching(t: usize, clique: bool) -> Result<Graph> {
    let top = if clique {
        Graph::complete(2)?
    } else {
        Graph::empty(2)?
    };
    top.join(&Graph::copies(t, &Graph::complete(2)?)?)
}
