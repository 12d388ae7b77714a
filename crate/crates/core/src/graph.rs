//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` adjacency row, so neighbourhood set algebra is
//! plain bit arithmetic. All edit operations return a new [`Graph`].

use std::fmt;

use thiserror::Error;

/// Largest supported order; one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be between 1 and {MAX_ORDER}, got {0}")]
    InvalidOrder(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) already present")]
    EdgePresent(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeAbsent(usize, usize),
    #[error("cannot delete every vertex of the graph")]
    DeleteAll,
    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("canonical form limited to order {max}, got {order}")]
    TooLargeForCanonical { order: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph6: {0}")]
    Graph6(#[from] crate::graph6::Graph6Error),
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with the given edges; duplicates collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::InvalidOrder(n));
        }
        Ok(Self { adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1 << v);
        }
        Ok(g)
    }

    /// Build from raw adjacency rows, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::InvalidOrder(n));
        }
        let all = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & (1 << v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            if row & !all != 0 {
                let w = (row & !all).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
            for w in Bits(row) {
                if adj[w] & (1 << v) == 0 {
                    return Err(GraphError::Asymmetric(v, w));
                }
            }
        }
        Ok(Self { adj })
    }

    /// Rows already known to be symmetric and loop-free.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Self::from_adjacency(adj.clone()).is_ok());
        Self { adj }
    }

    /// Graph whose upper-triangle edges are the set bits of `mask`, in
    /// column order (0,1),(0,2),(1,2),(0,3),… with (0,1) as bit 0.
    pub fn from_upper_triangle_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        (0..n).all(|v| self.degree(v) == n - 1)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgePresent(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Self { adj })
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Self { adj })
    }

    /// Remove the listed vertices; survivors keep their relative order.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Self, GraphError> {
        let mut gone = 0u64;
        for &v in removed {
            self.check_vertex(v)?;
            gone |= 1 << v;
        }
        if gone == self.vertex_mask() {
            return Err(GraphError::DeleteAll);
        }
        Ok(self.induced(self.vertex_mask() & !gone))
    }

    /// Subgraph induced by a non-empty vertex set, relabelled in increasing order.
    pub fn induced(&self, keep: u64) -> Self {
        let kept: Vec<usize> = Bits(keep & self.vertex_mask()).collect();
        let adj = kept
            .iter()
            .map(|&old| {
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(old, w))
                    .fold(0u64, |row, (new, _)| row | 1 << new)
            })
            .collect();
        Self::from_adjacency_unchecked(adj)
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn union(&self, other: &Self) -> Result<Self, GraphError> {
        let n1 = self.order();
        let n = n1 + other.order();
        if n > MAX_ORDER {
            return Err(GraphError::InvalidOrder(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << n1));
        Ok(Self { adj })
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Self) -> Result<Self, GraphError> {
        let n1 = self.order();
        let mut g = self.union(other)?;
        let left = full_mask(n1);
        let right = g.vertex_mask() & !left;
        for v in 0..g.order() {
            g.adj[v] |= if v < n1 { right } else { left };
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & all & !(1 << v))
            .collect();
        Self { adj }
    }

    /// Apply a permutation: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let n = self.order();
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if perm.len() != n || seen != self.vertex_mask() {
            return Err(GraphError::InvalidOrder(perm.len()));
        }
        let mut adj = vec![0u64; n];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = Bits(row).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Ok(Self { adj })
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        component_mask(&self.adj, start)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }
}

/// Connected component containing `start` in the given adjacency rows.
#[inline]
pub(crate) fn component_mask(adj: &[u64], start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
