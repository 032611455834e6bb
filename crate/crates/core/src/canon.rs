//! Canonical labeling by partition refinement and individualization.
//!
//! The canonical graph is the lexicographically largest relabeling among the
//! leaves of the search tree. Subtrees are skipped only when a known
//! automorphism fixing the current prefix maps them onto an explored subtree,
//! so the result never depends on the input labels.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bits, Graph, MAX_VERTICES};
use crate::graph6;

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonically relabeled graph, followed by the vertex colors for colored input.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Box<str>);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative (colors, if any, are dropped).
    pub fn to_graph(&self) -> Graph {
        let g6 = self.0.split(':').next().unwrap_or_default();
        graph6::decode(g6).expect("canonical codes hold valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl serde::Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// The canonically relabeled graph.
    pub graph: Graph,
    /// `labeling[i]` is the input vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    pub code: CanonicalCode,
}

pub fn canonical(g: &Graph) -> CanonicalCode {
    canonical_form(g).code
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    run(g, None)
}

/// Canonical form up to color-preserving isomorphism.
///
/// # Panics
/// If `colors.len()` differs from the vertex count.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    assert_eq!(colors.len(), g.order(), "one color per vertex");
    run(g, Some(colors))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical(a) == canonical(b)
}

/// Ordered partition: `lab` lists vertices by position, bit `i` of `starts`
/// marks position `i` as the first of a cell.
#[derive(Clone, Copy)]
struct Partition {
    lab: [u8; MAX_VERTICES],
    starts: u64,
}

impl Partition {
    fn cell_end(&self, s: usize, n: usize) -> usize {
        let rest = self.starts & !low(s + 1);
        if rest == 0 {
            n
        } else {
            (rest.trailing_zeros() as usize).min(n)
        }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.starts & low(n) == low(n)
    }
}

fn low(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

type Perm = [u8; MAX_VERTICES];

struct Leaf {
    rows: Vec<u64>,
    lab: Perm,
    path: Vec<u8>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Perm>,
}

const MAX_STORED_AUTOS: usize = 512;

fn run(g: &Graph, colors: Option<&[u32]>) -> CanonicalForm {
    let n = g.order();
    let adj = g.rows();
    let mut lab = [0u8; MAX_VERTICES];
    let mut order: Vec<usize> = (0..n).collect();
    if let Some(c) = colors {
        order.sort_by_key(|&v| (c[v], v));
    }
    let mut starts = if n > 0 { 1u64 } else { 0 };
    for (i, &v) in order.iter().enumerate() {
        lab[i] = v as u8;
        if let Some(c) = colors {
            if i > 0 && c[order[i - 1]] != c[v] {
                starts |= 1 << i;
            }
        }
    }
    let mut search = Search {
        adj,
        n,
        first: None,
        best: None,
        autos: twin_transpositions(adj, colors),
    };
    let mut root = Partition { lab, starts };
    search.refine(&mut root);
    let mut path = Vec::with_capacity(n);
    search.descend(root, 0, &mut path);

    let best = search.best.expect("search visits at least one leaf");
    let graph = Graph::from_rows_unchecked(best.rows);
    let labeling: Vec<usize> = best.lab[..n].iter().map(|&v| v as usize).collect();
    let mut code = graph6::encode(&graph);
    if let Some(c) = colors {
        code.push(':');
        let parts: Vec<String> = labeling.iter().map(|&v| c[v].to_string()).collect();
        code.push_str(&parts.join(","));
    }
    CanonicalForm {
        graph,
        labeling,
        code: CanonicalCode(code.into_boxed_str()),
    }
}

/// Transpositions of vertices with equal neighborhoods outside the pair.
fn twin_transpositions(adj: &[u64], colors: Option<&[u32]>) -> Vec<Perm> {
    let n = adj.len();
    let mut rep: Vec<usize> = (0..n).collect();
    let mut autos = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rep[u] != u {
                continue;
            }
            let same_color = colors.is_none_or(|c| c[u] == c[v]);
            if same_color && adj[u] & !(1 << v) == adj[v] & !(1 << u) {
                rep[v] = u;
                let mut p = identity();
                p[u] = v as u8;
                p[v] = u as u8;
                autos.push(p);
                break;
            }
        }
    }
    autos
}

fn identity() -> Perm {
    let mut p = [0u8; MAX_VERTICES];
    for (i, x) in p.iter_mut().enumerate() {
        *x = i as u8;
    }
    p
}

fn find(parent: &mut [u8], mut x: usize) -> usize {
    while parent[x] as usize != x {
        let up = parent[parent[x] as usize];
        parent[x] = up;
        x = up as usize;
    }
    x
}

impl Search<'_> {
    fn refine(&self, p: &mut Partition) {
        let n = self.n;
        let mut keys = [0u32; MAX_VERTICES];
        loop {
            let mut changed = false;
            let mut ws = 0;
            while ws < n {
                let we = p.cell_end(ws, n);
                let wmask = p.lab[ws..we].iter().fold(0u64, |m, &v| m | (1 << v));
                let mut xs = 0;
                while xs < n {
                    let xe = p.cell_end(xs, n);
                    if xe - xs > 1 {
                        for i in xs..xe {
                            keys[p.lab[i] as usize] =
                                (self.adj[p.lab[i] as usize] & wmask).count_ones();
                        }
                        let k0 = keys[p.lab[xs] as usize];
                        if p.lab[xs + 1..xe].iter().any(|&v| keys[v as usize] != k0) {
                            p.lab[xs..xe].sort_unstable_by_key(|&v| (keys[v as usize], v));
                            for i in xs + 1..xe {
                                if keys[p.lab[i] as usize] != keys[p.lab[i - 1] as usize] {
                                    p.starts |= 1 << i;
                                }
                            }
                            changed = true;
                        }
                    }
                    xs = xe;
                }
                ws = p.cell_end(ws, n);
            }
            if !changed {
                break;
            }
        }
    }

    /// Returns `Some(d)` to abandon every subtree below depth `d`.
    fn descend(&mut self, part: Partition, depth: usize, path: &mut Vec<u8>) -> Option<usize> {
        let n = self.n;
        if part.is_discrete(n) {
            return self.leaf(&part, path);
        }
        // first smallest non-singleton cell
        let (mut ts, mut te) = (0, usize::MAX);
        let mut s = 0;
        while s < n {
            let e = part.cell_end(s, n);
            if e - s > 1 && (te == usize::MAX || e - s < te - ts) {
                ts = s;
                te = e;
            }
            s = e;
        }
        let mut candidates: Vec<u8> = part.lab[ts..te].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<u8> = Vec::with_capacity(candidates.len());
        for &w in &candidates {
            if self.equivalent_to_explored(w, &explored, path) {
                continue;
            }
            explored.push(w);
            let mut child = part;
            let i = child.lab[ts..te].iter().position(|&x| x == w).unwrap() + ts;
            child.lab.swap(ts, i);
            child.starts |= 1 << (ts + 1);
            self.refine(&mut child);
            path.push(w);
            let jump = self.descend(child, depth + 1, path);
            path.pop();
            if let Some(t) = jump {
                if t < depth {
                    return Some(t);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, w: u8, explored: &[u8], path: &[u8]) -> bool {
        if explored.is_empty() || self.autos.is_empty() {
            return false;
        }
        let mut parent = identity();
        let mut any = false;
        for a in &self.autos {
            if path.iter().any(|&p| a[p as usize] != p) {
                continue;
            }
            any = true;
            for (v, &image) in a.iter().enumerate().take(self.n) {
                let (x, y) = (find(&mut parent, v), find(&mut parent, image as usize));
                if x != y {
                    parent[x.max(y)] = x.min(y) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w as usize);
        explored
            .iter()
            .any(|&x| find(&mut parent, x as usize) == root)
    }

    fn leaf(&mut self, part: &Partition, path: &[u8]) -> Option<usize> {
        let n = self.n;
        let mut pos = [0u8; MAX_VERTICES];
        for i in 0..n {
            pos[part.lab[i] as usize] = i as u8;
        }
        let rows: Vec<u64> = (0..n)
            .map(|i| bits(self.adj[part.lab[i] as usize]).fold(0u64, |acc, v| acc | (1 << pos[v])))
            .collect();
        let Some(first) = &self.first else {
            let leaf = Leaf {
                rows,
                lab: part.lab,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                rows: leaf.rows.clone(),
                lab: leaf.lab,
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if rows == first.rows {
            let jump = divergence(path, &first.path);
            let auto = automorphism(&part.lab, &first.lab, n);
            self.store(auto);
            return Some(jump);
        }
        let best = self.best.as_ref().unwrap();
        match rows.cmp(&best.rows) {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    rows,
                    lab: part.lab,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Equal => {
                let jump = divergence(path, &best.path);
                let auto = automorphism(&part.lab, &best.lab, n);
                self.store(auto);
                Some(jump)
            }
            Ordering::Less => None,
        }
    }

    fn store(&mut self, auto: Perm) {
        if self.autos.len() < MAX_STORED_AUTOS {
            self.autos.push(auto);
        }
    }
}

fn divergence(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Maps `from[i]` to `to[i]`.
fn automorphism(from: &Perm, to: &Perm, n: usize) -> Perm {
    let mut p = identity();
    for i in 0..n {
        p[from[i] as usize] = to[i];
    }
    p
}
