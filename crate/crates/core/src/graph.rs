//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is one `u64`; bit `v` of row `u` is set iff `uv` is an
//! edge. All constructors keep the rows symmetric, loop-free and zero above
//! the vertex count.

use std::fmt;

use thiserror::Error;

use crate::graph6;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Bit mask of a vertex set.
pub type VertexMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph would have {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("invalid {kind} parameters: {reason}")]
    InvalidParameters { kind: &'static str, reason: String },
}

impl GraphError {
    pub(crate) fn params(kind: &'static str, reason: impl Into<String>) -> Self {
        GraphError::InvalidParameters {
            kind,
            reason: reason.into(),
        }
    }
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> VertexMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub fn bits(mut mask: VertexMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// The primitive families built by [`Graph::primitive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primitive {
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an explicit edge list; repeated pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty_checked(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn empty_checked(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { rows: vec![0; n] })
    }

    /// Wraps rows that are already known to be a valid adjacency matrix.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        let g = Graph { rows };
        debug_assert!(g.is_well_formed());
        g
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let g = Graph { rows };
        if !g.is_well_formed() {
            return Err(GraphError::params(
                "adjacency",
                "rows must be symmetric, loop-free and within range",
            ));
        }
        Ok(g)
    }

    /// Symmetry, no loops and no bits past the vertex count.
    pub fn is_well_formed(&self) -> bool {
        let n = self.order();
        let outside = !low_mask(n);
        self.rows.iter().enumerate().all(|(u, &row)| {
            row & outside == 0
                && row & (1 << u) == 0
                && bits(row).all(|v| self.rows[v] & (1 << u) != 0)
        })
    }

    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::empty_checked(n)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty_checked(n)?;
        let all = low_mask(n);
        for (u, row) in g.rows.iter_mut().enumerate() {
            *row = all & !(1 << u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty_checked(n)?;
        for i in 1..n {
            g.set_edge(i - 1, i);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::params(
                "cycle",
                format!("needs n >= 3, got {n}"),
            ));
        }
        let mut g = Graph::path(n)?;
        g.set_edge(n - 1, 0);
        Ok(g)
    }

    /// `K_{1,n-1}` with the center labeled 0.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::params("star", "needs n >= 1"));
        }
        let mut g = Graph::empty_checked(n)?;
        for v in 1..n {
            g.set_edge(0, v);
        }
        Ok(g)
    }

    pub fn primitive(kind: Primitive, n: usize) -> Result<Graph, GraphError> {
        match kind {
            Primitive::Complete => Graph::complete(n),
            Primitive::Empty => Graph::empty(n),
            Primitive::Path => Graph::path(n),
            Primitive::Cycle => Graph::cycle(n),
            Primitive::Star => Graph::star(n),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).max()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> VertexMask {
        low_mask(self.order())
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| bits(row & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        self.rows
            .iter()
            .enumerate()
            .flat_map(move |(u, &row)| bits(!row & all & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Copy of the graph with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.set_edge(u, v);
        Ok(g)
    }

    /// Copy of the graph with `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    /// Appends a new vertex adjacent to `neighbors` (a mask over the current vertices).
    pub fn with_vertex(&self, neighbors: VertexMask) -> Result<Graph, GraphError> {
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n + 1));
        }
        let neighbors = neighbors & self.vertex_mask();
        let mut rows = Vec::with_capacity(n + 1);
        rows.extend(
            self.rows
                .iter()
                .enumerate()
                .map(|(u, &r)| r | (((neighbors >> u) & 1) << n)),
        );
        rows.push(neighbors);
        Ok(Graph { rows })
    }

    /// `G ∨ H`: `self` keeps labels `0..|G|`, `other` moves to `|G|..|G|+|H|`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, true)
    }

    /// `G ∪ H` with block-diagonal adjacency, `self` first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, false)
    }

    fn combine(&self, other: &Graph, join: bool) -> Result<Graph, GraphError> {
        let (a, b) = (self.order(), other.order());
        if a + b > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(a + b));
        }
        let left = low_mask(a);
        let right = low_mask(b) << a;
        let mut rows = Vec::with_capacity(a + b);
        rows.extend(self.rows.iter().map(|&r| if join { r | right } else { r }));
        rows.extend(other.rows.iter().map(|&r| {
            let shifted = r << a;
            if join {
                shifted | left
            } else {
                shifted
            }
        }));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// `t` disjoint copies of `g`.
    pub fn copies(t: usize, g: &Graph) -> Result<Graph, GraphError> {
        let total = t.saturating_mul(g.order());
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut acc = Graph::empty(0)?;
        for _ in 0..t {
            acc = acc.disjoint_union(g)?;
        }
        Ok(acc)
    }

    /// Subgraph induced by `set`, relabeled in ascending order of the original labels.
    pub fn induced(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut mask = 0u64;
        for &v in set {
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            mask |= 1 << v;
        }
        Ok(self.induced_mask(mask))
    }

    /// Subgraph induced by the vertices in `mask` (bits past the order are ignored).
    pub fn induced_mask(&self, mask: VertexMask) -> Graph {
        let mask = mask & self.vertex_mask();
        let keep: Vec<usize> = bits(mask).collect();
        let rows = keep
            .iter()
            .map(|&u| {
                let row = self.rows[u] & mask;
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &v)| row & (1 << v) != 0)
                    .fold(0u64, |acc, (j, _)| acc | (1 << j))
            })
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced_mask(self.vertex_mask() & !(1 << v))
    }

    /// Relabels so that vertex `perm[i]` of `self` becomes vertex `i` of the result.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen & (1 << p) != 0 {
                return Err(GraphError::params("relabel", "not a permutation"));
            }
            seen |= 1 << p;
        }
        if perm.len() != n {
            return Err(GraphError::params("relabel", "length mismatch"));
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked<P: Copy + Into<usize>>(&self, perm: &[P]) -> Graph {
        let n = self.order();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &p) in perm.iter().enumerate() {
            pos[p.into()] = i;
        }
        let rows = (0..n)
            .map(|i| bits(self.rows[perm[i].into()]).fold(0u64, |acc, v| acc | (1 << pos[v])))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(u, &r)| !r & all & !(1 << u))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6::encode(self))
    }
}
