//! Exact graph parameters: the zeroth-order general Randić index, inverse
//! degree, chromatic and clique numbers, vertex and edge connectivity, and
//! cut edges.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Bits, Graph};
use crate::scalar::{degree_power, GammaExponent, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("vertex {0} is isolated; the index needs every degree positive")]
    IsolatedVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
}

fn check_no_isolated(g: &Graph) -> Result<(), InvariantError> {
    match (0..g.order()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(InvariantError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Sum of `d(u)^gamma` over all vertices.
///
/// Summed per distinct degree, in increasing order, so the result depends
/// only on the degree multiset and not on the labelling.
pub fn zeroth_order_general_randic<F: Scalar>(
    g: &Graph,
    gamma: GammaExponent<F>,
) -> Result<F, InvariantError> {
    check_no_isolated(g)?;
    let mut counts = vec![0usize; g.order()];
    for v in 0..g.order() {
        counts[g.degree(v)] += 1;
    }
    Ok(counts
        .iter()
        .enumerate()
        .filter(|&(_, &k)| k > 0)
        .fold(F::zero(), |acc, (d, &k)| acc + F::of(k) * degree_power(d, gamma.value())))
}

/// Sum of reciprocal degrees; the index at `gamma = -1`.
pub fn inverse_degree<F: Scalar>(g: &Graph) -> Result<F, InvariantError> {
    zeroth_order_general_randic(g, GammaExponent::inverse_degree())
}

/// Inverse degree as an exact fraction.
pub fn inverse_degree_exact(g: &Graph) -> Result<Ratio<i128>, InvariantError> {
    check_no_isolated(g)?;
    Ok((0..g.order()).fold(Ratio::from_integer(0), |acc, v| {
        acc + Ratio::new(1, g.degree(v) as i128)
    }))
}

/// Vertex set of one maximum clique.
pub fn maximum_clique(g: &Graph) -> u64 {
    fn expand(adj: &[u64], current: u64, mut cand: u64, best: &mut u64) {
        if cand == 0 {
            if current.count_ones() > best.count_ones() {
                *best = current;
            }
            return;
        }
        while cand != 0 {
            if current.count_ones() + cand.count_ones() <= best.count_ones() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            expand(adj, current | 1 << v, cand & adj[v], best);
            cand &= !(1 << v);
        }
    }
    let adj = g.adjacency();
    let mut best = 1u64;
    expand(adj, 0, g.vertex_mask(), &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).count_ones() as usize
}

/// Largest-first greedy colouring; returns the number of colours used.
fn greedy_colours(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut classes: Vec<u64> = Vec::new();
    for v in order {
        match classes.iter().position(|&c| c & g.neighbors(v) == 0) {
            Some(i) => classes[i] |= 1 << v,
            None => classes.push(1 << v),
        }
    }
    classes.len()
}

/// Whether a proper colouring with at most `k` colours exists.
fn colourable(g: &Graph, k: usize) -> bool {
    fn place(g: &Graph, order: &[usize], i: usize, classes: &mut Vec<u64>, k: usize) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        let nb = g.neighbors(v);
        for c in 0..classes.len() {
            if classes[c] & nb == 0 {
                classes[c] |= 1 << v;
                if place(g, order, i + 1, classes, k) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        // a fresh colour is interchangeable with any other unused one
        if classes.len() < k {
            classes.push(1 << v);
            if place(g, order, i + 1, classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    place(g, &order, 0, &mut Vec::with_capacity(k), k)
}

/// Chromatic number by iterative deepening between the clique bound and
/// the greedy bound.
pub fn chromatic_number(g: &Graph) -> usize {
    let lower = clique_number(g);
    let upper = greedy_colours(g);
    (lower..upper).find(|&k| colourable(g, k)).unwrap_or(upper)
}

/// Unit-capacity flow network with at most 128 nodes, residuals as bitsets.
struct UnitNetwork {
    arcs: Vec<u128>,
    flow: Vec<u128>,
    flow_in: Vec<u128>,
}

impl UnitNetwork {
    fn new(arcs: Vec<u128>) -> Self {
        let n = arcs.len();
        Self {
            arcs,
            flow: vec![0; n],
            flow_in: vec![0; n],
        }
    }

    #[inline]
    fn residual(&self, x: usize) -> u128 {
        (self.arcs[x] & !self.flow[x]) | self.flow_in[x]
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let n = self.arcs.len();
        let mut parent = [u8::MAX; 128];
        let mut seen: u128 = 1 << source;
        let mut frontier: u128 = 1 << source;
        while frontier != 0 && seen >> sink & 1 == 0 {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                let mut fresh = self.residual(x) & !seen & !next;
                next |= fresh;
                while fresh != 0 {
                    let y = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    parent[y] = x as u8;
                }
            }
            seen |= next;
            frontier = next;
        }
        if seen >> sink & 1 == 0 {
            return false;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y] as usize;
            debug_assert!(x < n);
            if self.flow_in[x] >> y & 1 == 1 {
                // cancel flow y -> x
                self.flow[y] &= !(1 << x);
                self.flow_in[x] &= !(1 << y);
            } else {
                self.flow[x] |= 1 << y;
                self.flow_in[y] |= 1 << x;
            }
            y = x;
        }
        true
    }

    /// Max flow, stopping early once `limit` is reached.
    fn max_flow(mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut value = 0;
        while value < limit && self.augment(source, sink) {
            value += 1;
        }
        value
    }
}

/// Maximum number of internally vertex-disjoint s–t paths, `s`, `t`
/// nonadjacent, capped at `limit`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    // node 2v is v_in, 2v+1 is v_out
    let n = g.order();
    let mut arcs = vec![0u128; 2 * n];
    for v in 0..n {
        arcs[2 * v] |= 1 << (2 * v + 1);
        for w in Bits(g.neighbors(v)) {
            arcs[2 * v + 1] |= 1 << (2 * w);
        }
    }
    UnitNetwork::new(arcs).max_flow(2 * s + 1, 2 * t, limit)
}

fn local_edge_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let arcs = g.adjacency().iter().map(|&r| r as u128).collect();
    UnitNetwork::new(arcs).max_flow(s, t, limit)
}

/// Minimum number of vertices whose removal disconnects the graph, with
/// `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, InvariantError> {
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    let n = g.order();
    if g.is_complete() {
        return Ok(n - 1);
    }
    // Some vertex among the first best+1 lies outside a minimum separator,
    // and every vertex it is separated from has a larger label.
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    Ok(best)
}

/// Minimum number of edges whose removal disconnects the graph.
pub fn edge_connectivity(g: &Graph) -> Result<usize, InvariantError> {
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    let n = g.order();
    let mut best = g.min_degree();
    for t in 1..n {
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    Ok(best)
}

/// All bridges `(u, v)`, `u < v`, sorted.
pub fn cut_edges(g: &Graph) -> Result<Vec<(usize, usize)>, InvariantError> {
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    struct LowLink<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        bridges: Vec<(usize, usize)>,
    }
    impl LowLink<'_> {
        fn visit(&mut self, v: usize, parent: Option<usize>) {
            self.timer += 1;
            self.disc[v] = self.timer;
            self.low[v] = self.timer;
            for w in Bits(self.g.neighbors(v)) {
                if Some(w) == parent {
                    continue;
                }
                if self.disc[w] == 0 {
                    self.visit(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] > self.disc[v] {
                        self.bridges.push((v.min(w), v.max(w)));
                    }
                } else {
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }
    let n = g.order();
    let mut ll = LowLink {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        timer: 0,
        bridges: Vec::new(),
    };
    ll.visit(0, None);
    ll.bridges.sort_unstable();
    Ok(ll.bridges)
}

/// Every parameter the bounds are stated in, for one connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub order: usize,
    pub chromatic: usize,
    pub clique: usize,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub cut_edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl InvariantProfile {
    pub fn compute(g: &Graph) -> Result<Self, InvariantError> {
        Ok(Self {
            order: g.order(),
            chromatic: chromatic_number(g),
            clique: clique_number(g),
            vertex_connectivity: vertex_connectivity(g)?,
            edge_connectivity: edge_connectivity(g)?,
            cut_edges: cut_edges(g)?.len(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
        })
    }
}
