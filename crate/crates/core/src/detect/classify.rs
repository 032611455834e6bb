//! Structure of connected `{P_k, K_m}`-free graphs with minimum degree at
//! least `δ_k` and at least `k` vertices.
//!
//! Case (1) is stated as `G ⊆ H ∨ I` (even `k`) or `G ⊆ H ∨ (I ∪ K_2)` (odd
//! `k`) with `H` a `K_{m−1}`-free graph on `δ_k` vertices. The classifier
//! tests the equivalent witness form: a `δ_k`-set `S` inducing no `K_{m−1}`
//! with `G − S` edgeless (even `k`) or with at most one edge (odd `k`).

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canon::are_isomorphic;
use crate::constructions::{g1, g2, g3, g4, g5, pair_join_matching};
use crate::detect::cliques::has_clique_within;
use crate::detect::structure::blocks;
use crate::detect::{is_connected, is_free};
use crate::formulas::delta_k;
use crate::graph::{bits, Graph, VertexMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Class1,
    Class2G1,
    Class2G2,
    Class2G3,
    Class3G4,
    Class3G5,
    Class4I2,
    Class4K2,
    Unclassified,
}

impl ClassTag {
    pub const ALL: [ClassTag; 9] = [
        ClassTag::Class1,
        ClassTag::Class2G1,
        ClassTag::Class2G2,
        ClassTag::Class2G3,
        ClassTag::Class3G4,
        ClassTag::Class3G5,
        ClassTag::Class4I2,
        ClassTag::Class4K2,
        ClassTag::Unclassified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Class1 => "Class1",
            ClassTag::Class2G1 => "Class2-G1",
            ClassTag::Class2G2 => "Class2-G2",
            ClassTag::Class2G3 => "Class2-G3",
            ClassTag::Class3G4 => "Class3-G4",
            ClassTag::Class3G5 => "Class3-G5",
            ClassTag::Class4I2 => "Class4-I2",
            ClassTag::Class4K2 => "Class4-K2",
            ClassTag::Unclassified => "Unclassified",
        }
    }

    /// Parses either the display name or the bare number of the case (1-4).
    pub fn parse_set(s: &str) -> Option<Vec<ClassTag>> {
        if let Some(t) = ClassTag::ALL
            .iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
        {
            return Some(vec![*t]);
        }
        let group = match s {
            "1" => 1,
            "2" => 2,
            "3" => 3,
            "4" => 4,
            _ => return None,
        };
        Some(
            ClassTag::ALL
                .into_iter()
                .filter(|t| t.group() == Some(group))
                .collect(),
        )
    }

    fn group(self) -> Option<u8> {
        match self {
            ClassTag::Class1 => Some(1),
            ClassTag::Class2G1 | ClassTag::Class2G2 | ClassTag::Class2G3 => Some(2),
            ClassTag::Class3G4 | ClassTag::Class3G5 => Some(3),
            ClassTag::Class4I2 | ClassTag::Class4K2 => Some(4),
            ClassTag::Unclassified => None,
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ClassTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parameters of the matching construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// The `δ_k`-set `S` of case (1).
    Set(Vec<usize>),
    /// `G_1(n, k)`.
    G1 {
        n: usize,
    },
    /// `G_2(n1, n2, k)`, `n1 <= n2`.
    G2 {
        n1: usize,
        n2: usize,
    },
    /// `G_3` with the replacing block in graph6, attach vertex 0.
    G3 {
        block: String,
    },
    /// `G_4(n1, n2)` or `G_5(n1, n2)`.
    Split {
        n1: usize,
        n2: usize,
    },
    /// `I_2 ∨ t K_2` or `K_2 ∨ t K_2`.
    PairJoin {
        t: usize,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationOutcome {
    pub class_tag: ClassTag,
    pub witness: Witness,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// First matching case in the fixed order (1), (2), (3), (4).
pub fn classify_structure(
    g: &Graph,
    k: usize,
    m: usize,
) -> Result<ClassificationOutcome, ClassifyError> {
    classify_structure_with(g, k, m, &[])
}

/// As [`classify_structure`] but never reports the classes in `disabled`.
pub fn classify_structure_with(
    g: &Graph,
    k: usize,
    m: usize,
    disabled: &[ClassTag],
) -> Result<ClassificationOutcome, ClassifyError> {
    let n = g.order();
    let d = delta_k(k);
    let fail = |why: String| Err(ClassifyError::Precondition(why));
    if k < 4 || m < 2 {
        return fail(format!("needs k >= 4 and m >= 2, got k={k}, m={m}"));
    }
    if n < k {
        return fail(format!("needs n >= k, got n={n}, k={k}"));
    }
    if !is_connected(g) {
        return fail("graph is not connected".into());
    }
    if g.min_degree().unwrap_or(0) < d {
        return fail(format!("minimum degree is below δ_k = {d}"));
    }
    if !is_free(g, k, m) {
        return fail(format!("graph contains P_{k} or K_{m}"));
    }

    let on = |t: ClassTag| !disabled.contains(&t);
    let found = |class_tag, witness| Ok(ClassificationOutcome { class_tag, witness });

    if on(ClassTag::Class1) {
        if let Some(s) = class1_witness(g, k, m) {
            return found(ClassTag::Class1, Witness::Set(s));
        }
    }
    if m >= d + 2 {
        if on(ClassTag::Class2G1) && (n - 1).is_multiple_of(d) && iso(g, g1(n, k)) {
            return found(ClassTag::Class2G1, Witness::G1 { n });
        }
        if on(ClassTag::Class2G2) && k % 2 == 1 {
            for n1 in 1..=n / 2 {
                if iso(g, g2(n1, n - n1, k)) {
                    return found(ClassTag::Class2G2, Witness::G2 { n1, n2: n - n1 });
                }
            }
        }
        if on(ClassTag::Class2G3) && k % 2 == 1 {
            for b in g3_candidates(g, k, m) {
                if iso(g, g3(n, k, &b, 0)) {
                    let block = b.to_graph6();
                    return found(ClassTag::Class2G3, Witness::G3 { block });
                }
            }
        }
    }
    if k == 7 && m >= 4 {
        for n1 in (3..n).step_by(2) {
            let n2 = n + 1 - n1;
            if on(ClassTag::Class3G4) && iso(g, g4(n1, n2)) {
                return found(ClassTag::Class3G4, Witness::Split { n1, n2 });
            }
            if on(ClassTag::Class3G5) && iso(g, g5(n1, n2)) {
                return found(ClassTag::Class3G5, Witness::Split { n1, n2 });
            }
        }
    }
    if k == 9 && m >= 4 && n.is_multiple_of(2) {
        let t = (n - 2) / 2;
        if on(ClassTag::Class4I2) && iso(g, pair_join_matching(t, false)) {
            return found(ClassTag::Class4I2, Witness::PairJoin { t });
        }
        if on(ClassTag::Class4K2) && m >= 5 && iso(g, pair_join_matching(t, true)) {
            return found(ClassTag::Class4K2, Witness::PairJoin { t });
        }
    }
    found(ClassTag::Unclassified, Witness::None)
}

fn iso(g: &Graph, candidate: Result<Graph, crate::graph::GraphError>) -> bool {
    candidate.is_ok_and(|c| are_isomorphic(g, &c))
}

/// Lexicographically first `δ_k`-set `S` with `G[S]` free of `K_{m−1}` and
/// at most `[k odd]` edges outside `S`.
fn class1_witness(g: &Graph, k: usize, m: usize) -> Option<Vec<usize>> {
    let d = delta_k(k);
    let allowed_edges = k % 2;
    let mut chosen = Vec::with_capacity(d);
    search_cover(g, d, m, allowed_edges, 0, 0, &mut chosen).then_some(chosen)
}

fn search_cover(
    g: &Graph,
    d: usize,
    m: usize,
    allowed_edges: usize,
    from: usize,
    set: VertexMask,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == d {
        let rest = g.vertex_mask() & !set;
        let outside: usize = bits(rest)
            .map(|v| (g.neighbors(v) & rest).count_ones() as usize)
            .sum::<usize>()
            / 2;
        return outside <= allowed_edges && !has_clique_within(g, set, m - 1);
    }
    for v in from..g.order() {
        if g.order() - v < d - chosen.len() {
            break;
        }
        chosen.push(v);
        if search_cover(g, d, m, allowed_edges, v + 1, set | (1 << v), chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Blocks to try for `G_3`: the full rooted family when it is small enough
/// to enumerate, otherwise the blocks of `g` itself rooted at its cut vertex.
fn g3_candidates(g: &Graph, k: usize, m: usize) -> Vec<Graph> {
    let d = delta_k(k);
    if d <= 4 {
        return crate::oracle::g3_block_family(k, m).unwrap_or_default();
    }
    let dec = blocks(g);
    if dec.cut_vertices.count_ones() != 1 {
        return Vec::new();
    }
    let c = dec.cut_vertices.trailing_zeros() as usize;
    dec.blocks
        .iter()
        .filter(|b| b.count_ones() as usize == d + 2)
        .filter_map(|&b| {
            let mut order = vec![c];
            order.extend(bits(b & !(1 << c)));
            g.induced(&order).ok()
        })
        .collect()
}
