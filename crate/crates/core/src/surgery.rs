//! Graph transformations that move the index monotonically for negative
//! exponents, each returning the new graph and the index change.

use thiserror::Error;

use crate::families::{turan_parts, FamilySpec};
use crate::graph::{Bits, Graph, GraphError};
use crate::invariants::{zeroth_order_general_randic, InvariantError};
use crate::scalar::{degree_power, GammaExponent, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("gamma must be negative")]
    GammaNotNegative,
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) is already present")]
    EdgeExists(usize, usize),
    #[error("endpoint {0} is pendant")]
    PendantEndpoint(usize),
    #[error("endpoint {0} is isolated")]
    IsolatedEndpoint(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("transfer needs two distinct vertices")]
    SameVertex,
    #[error("transfer needs d(v) >= d(w), got d({v}) = {dv} < d({w}) = {dw}")]
    DegreeOrder { v: usize, w: usize, dv: usize, dw: usize },
    #[error("N(w) \\ N[v] is empty; nothing to move")]
    NothingToMove,
    #[error("transfer needs d(w) > t, got d(w) = {dw}, t = {t}")]
    SourceExhausted { dw: usize, t: usize },
    #[error("transfer spec does not match this graph")]
    StaleSpec,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("balancing needs parts[j] - parts[i] >= 2, got {ni} and {nj}")]
    GapTooSmall { ni: usize, nj: usize },
    #[error("part index out of range")]
    PartOutOfRange,
    #[error("chain did not terminate within {0} steps")]
    NoProgress(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

fn require_negative<F: Scalar>(gamma: GammaExponent<F>) -> Result<(), SurgeryError> {
    if gamma.is_negative() {
        Ok(())
    } else {
        Err(SurgeryError::GammaNotNegative)
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), SurgeryError> {
    if v < g.order() {
        Ok(())
    } else {
        Err(SurgeryError::VertexOutOfRange(v))
    }
}

fn index_change<F: Scalar>(
    before: &Graph,
    after: &Graph,
    gamma: GammaExponent<F>,
) -> Result<F, SurgeryError> {
    Ok(zeroth_order_general_randic(after, gamma)? - zeroth_order_general_randic(before, gamma)?)
}

/// Delete an edge whose endpoints both have degree at least two; the index
/// strictly increases.
pub fn edge_delete_effect<F: Scalar>(
    g: &Graph,
    u: usize,
    v: usize,
    gamma: GammaExponent<F>,
) -> Result<(Graph, F), SurgeryError> {
    require_negative(gamma)?;
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if !g.has_edge(u, v) {
        return Err(SurgeryError::MissingEdge(u, v));
    }
    if let Some(p) = [u, v].into_iter().find(|&x| g.degree(x) < 2) {
        return Err(SurgeryError::PendantEndpoint(p));
    }
    let h = g.delete_edge(u, v)?;
    let delta = index_change(g, &h, gamma)?;
    Ok((h, delta))
}

/// Join two nonadjacent non-isolated vertices; the index strictly decreases.
pub fn edge_add_effect<F: Scalar>(
    g: &Graph,
    u: usize,
    v: usize,
    gamma: GammaExponent<F>,
) -> Result<(Graph, F), SurgeryError> {
    require_negative(gamma)?;
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(SurgeryError::SameVertex);
    }
    if g.has_edge(u, v) {
        return Err(SurgeryError::EdgeExists(u, v));
    }
    if let Some(p) = [u, v].into_iter().find(|&x| g.degree(x) == 0) {
        return Err(SurgeryError::IsolatedEndpoint(p));
    }
    let h = g.add_edge(u, v)?;
    let delta = index_change(g, &h, gamma)?;
    Ok((h, delta))
}

/// Move every edge `w x` with `x ∉ N[v]` over to `v x`.
///
/// Only constructible when `d(v) >= d(w)`, the moved set is non-empty and
/// `w` keeps at least one neighbour. `v` and `w` may or may not be adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransferSpec {
    v: usize,
    w: usize,
    moved: u64,
}

impl TransferSpec {
    pub fn new(g: &Graph, v: usize, w: usize) -> Result<Self, SurgeryError> {
        check_vertex(g, v)?;
        check_vertex(g, w)?;
        if v == w {
            return Err(SurgeryError::SameVertex);
        }
        let (dv, dw) = (g.degree(v), g.degree(w));
        if dv < dw {
            return Err(SurgeryError::DegreeOrder { v, w, dv, dw });
        }
        let moved = g.neighbors(w) & !g.closed_neighbors(v);
        let t = moved.count_ones() as usize;
        if t == 0 {
            return Err(SurgeryError::NothingToMove);
        }
        if dw <= t {
            return Err(SurgeryError::SourceExhausted { dw, t });
        }
        Ok(Self { v, w, moved })
    }

    pub fn target(&self) -> usize {
        self.v
    }

    pub fn source(&self) -> usize {
        self.w
    }

    pub fn moved(&self) -> Vec<usize> {
        Bits(self.moved).collect()
    }

    pub fn len(&self) -> usize {
        self.moved.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.moved == 0
    }
}

/// Apply a transfer. The change is
/// `(d(v)+t)^γ - d(v)^γ + (d(w)-t)^γ - d(w)^γ`, positive for `γ < 0`.
pub fn transfer<F: Scalar>(
    g: &Graph,
    spec: &TransferSpec,
    gamma: GammaExponent<F>,
) -> Result<(Graph, F), SurgeryError> {
    require_negative(gamma)?;
    if TransferSpec::new(g, spec.v, spec.w).ok() != Some(*spec) {
        return Err(SurgeryError::StaleSpec);
    }
    let (v, w, t) = (spec.v, spec.w, spec.len());
    let mut adj = g.adjacency().to_vec();
    for x in Bits(spec.moved) {
        adj[w] &= !(1 << x);
        adj[x] &= !(1 << w);
        adj[v] |= 1 << x;
        adj[x] |= 1 << v;
    }
    let h = Graph::from_adjacency(adj)?;
    let (dv, dw) = (g.degree(v), g.degree(w));
    let gm = gamma.value();
    let delta = degree_power(dv + t, gm) - degree_power(dv, gm) + degree_power(dw - t, gm)
        - degree_power(dw, gm);
    Ok((h, delta))
}

/// One rejoin step on the vertex set `scope` (all other adjacencies kept):
/// `u` is the smallest-labelled vertex of maximum degree inside `scope`,
/// `A = N(u) ∩ scope`, `B = scope \ A`; `B` becomes independent and is
/// joined to all of `A`. Returns the new rows and `B`.
fn rejoin_within(adj: &[u64], scope: u64) -> (Vec<u64>, u64) {
    let u = Bits(scope)
        .max_by_key(|&x| ((adj[x] & scope).count_ones(), std::cmp::Reverse(x)))
        .expect("non-empty scope");
    let a = adj[u] & scope;
    let b = scope & !a;
    let mut out = adj.to_vec();
    for x in Bits(b) {
        out[x] = (out[x] & !scope) | a;
    }
    for x in Bits(a) {
        out[x] |= b;
    }
    (out, b)
}

/// Rebuild the graph around a maximum-degree vertex `u`: `G[N(u)]` is kept
/// and joined completely to the remaining vertices, which become an
/// independent set. No vertex loses degree, so the index does not increase
/// for `γ < 0`.
pub fn rejoin_max_degree<F: Scalar>(
    g: &Graph,
    gamma: GammaExponent<F>,
) -> Result<(Graph, F), SurgeryError> {
    if !g.is_connected() {
        return Err(SurgeryError::Disconnected);
    }
    let (adj, _) = rejoin_within(g.adjacency(), g.vertex_mask());
    let h = Graph::from_adjacency(adj)?;
    let delta = index_change(g, &h, gamma)?;
    Ok((h, delta))
}

/// The rejoin repeated inside `A` until the graph is complete multipartite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejoinChain {
    /// Every intermediate graph, starting with the input.
    pub graphs: Vec<Graph>,
    /// Vertex sets of the final parts, in the order they were split off.
    pub parts: Vec<u64>,
}

impl RejoinChain {
    pub fn last(&self) -> &Graph {
        self.graphs.last().expect("chain holds its input")
    }
}

pub fn rejoin_chain(g: &Graph) -> Result<RejoinChain, SurgeryError> {
    if !g.is_connected() {
        return Err(SurgeryError::Disconnected);
    }
    let cap = 10 * g.order();
    let mut graphs = vec![g.clone()];
    let mut parts = Vec::new();
    let mut scope = g.vertex_mask();
    let mut adj = g.adjacency().to_vec();
    while scope != 0 {
        if parts.len() >= cap {
            return Err(SurgeryError::NoProgress(cap));
        }
        let (next, b) = rejoin_within(&adj, scope);
        parts.push(b);
        scope &= !b;
        if next != adj {
            adj = next;
            graphs.push(Graph::from_adjacency(adj.clone())?);
        }
    }
    Ok(RejoinChain { graphs, parts })
}

/// Shift one vertex from part `j` to part `i`; needs `parts[j] - parts[i] >= 2`.
pub fn balance_step(parts: &[usize], i: usize, j: usize) -> Result<Vec<usize>, SurgeryError> {
    let (&ni, &nj) = match (parts.get(i), parts.get(j)) {
        (Some(a), Some(b)) if i != j => (a, b),
        _ => return Err(SurgeryError::PartOutOfRange),
    };
    if nj < ni + 2 {
        return Err(SurgeryError::GapTooSmall { ni, nj });
    }
    let mut out = parts.to_vec();
    out[i] += 1;
    out[j] -= 1;
    Ok(out)
}

/// Balance the smallest part against the largest until sizes differ by at
/// most one. Returns every profile visited, starting with the input.
pub fn balance_chain(parts: &[usize]) -> Result<Vec<Vec<usize>>, SurgeryError> {
    let n: usize = parts.iter().sum();
    let cap = 10 * n.max(1);
    let mut chain = vec![parts.to_vec()];
    loop {
        let cur = chain.last().expect("non-empty");
        let (i, &lo) = cur
            .iter()
            .enumerate()
            .min_by_key(|&(k, &p)| (p, k))
            .ok_or(SurgeryError::PartOutOfRange)?;
        let (j, &hi) = cur
            .iter()
            .enumerate()
            .max_by_key(|&(k, &p)| (p, std::cmp::Reverse(k)))
            .expect("non-empty");
        if hi <= lo + 1 {
            return Ok(chain);
        }
        if chain.len() > cap {
            return Err(SurgeryError::NoProgress(cap));
        }
        let next = balance_step(cur, i, j)?;
        chain.push(next);
    }
}

/// Whether a size profile is the Turán profile for its order and part count.
pub fn is_turan_profile(parts: &[usize]) -> bool {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    !parts.is_empty() && sorted == turan_parts(parts.iter().sum(), parts.len())
}

/// Starting from `K_c` with `pendants[i]` pendants on clique vertex `i`,
/// repeatedly move the pendants of the lightest loaded clique vertex onto
/// the heaviest one until a single clique vertex carries all of them.
/// Returns each graph with its index, starting with the input.
pub fn pendant_merge_chain<F: Scalar>(
    pendants: &[usize],
    gamma: GammaExponent<F>,
) -> Result<Vec<(Graph, F)>, SurgeryError> {
    require_negative(gamma)?;
    let spec = FamilySpec::StarClique {
        pendants: pendants.to_vec(),
    };
    let start = spec.generate().map_err(|_| SurgeryError::PartOutOfRange)?;
    let c = pendants.len();
    let cap = 10 * start.order();
    let mut g = start;
    let mut chain = vec![(g.clone(), zeroth_order_general_randic(&g, gamma)?)];
    loop {
        // pendant count of clique vertex x is d(x) - (c - 1)
        let loaded: Vec<usize> = (0..c).filter(|&x| g.degree(x) > c - 1).collect();
        if loaded.len() <= 1 {
            return Ok(chain);
        }
        if chain.len() > cap {
            return Err(SurgeryError::NoProgress(cap));
        }
        let v = *loaded
            .iter()
            .max_by_key(|&&x| (g.degree(x), std::cmp::Reverse(x)))
            .expect("non-empty");
        let w = *loaded
            .iter()
            .filter(|&&x| x != v)
            .min_by_key(|&&x| (g.degree(x), x))
            .expect("two loaded vertices");
        let t = TransferSpec::new(&g, v, w)?;
        let (h, _) = transfer(&g, &t, gamma)?;
        g = h;
        chain.push((g.clone(), zeroth_order_general_randic(&g, gamma)?));
    }
}
