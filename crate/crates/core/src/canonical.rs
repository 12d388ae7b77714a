//! Canonical forms for small graphs.
//!
//! Vertices are sorted into ordered cells by an isomorphism-invariant key
//! (degree, then the multiset of neighbour degrees). The canonical form is
//! the lexicographically smallest upper-triangle bit-string, in graph6 column
//! order, over all relabellings that respect the cell order. The search fixes
//! one position at a time, so each new column extends a fully determined
//! prefix and any branch whose prefix exceeds the incumbent is cut. Twin
//! vertices (same neighbourhood up to each other) are interchangeable by an
//! automorphism, so only one of them is tried per position.

use std::fmt;

use crate::graph::{Bits, Graph, GraphError};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Upper-triangle bits in column order, first bit most significant.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![0u64; n];
        let mut remaining = n * n.saturating_sub(1) / 2;
        for j in 1..n {
            for i in 0..j {
                remaining -= 1;
                if self.bits >> remaining & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn to_graph6(&self) -> String {
        self.to_graph()
            .to_graph6()
            .expect("canonical orders are within graph6 short form")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    cell: [u64; MAX_CANONICAL_ORDER],
    best: [u16; MAX_CANONICAL_ORDER],
    best_perm: [u8; MAX_CANONICAL_ORDER],
    perm: [u8; MAX_CANONICAL_ORDER],
}

impl Search<'_> {
    fn dfs(&mut self, k: usize, placed: u64, mut less: bool) {
        if k == self.n {
            if less {
                self.best_perm = self.perm;
            }
            return;
        }
        let mut tried = 0u64;
        for v in Bits(self.cell[k] & !placed) {
            let row = self.adj[v];
            if Bits(tried).any(|u| self.adj[u] & !(1 << v) == row & !(1 << u)) {
                continue;
            }
            tried |= 1 << v;
            let mut col = 0u16;
            for &p in &self.perm[..k] {
                col = col << 1 | (row >> p & 1) as u16;
            }
            let child_less = if less {
                true
            } else if col > self.best[k] {
                continue;
            } else {
                col < self.best[k]
            };
            if child_less {
                self.best[k] = col;
            }
            self.perm[k] = v as u8;
            self.dfs(k + 1, placed | 1 << v, child_less);
            // the incumbent now shares this node's prefix
            less = false;
        }
    }
}

/// Canonical bits and the labelling that produces them
/// (`perm[k]` is the original vertex placed at position `k`).
pub(crate) fn canonical_rows(adj: &[u64]) -> (u128, [u8; MAX_CANONICAL_ORDER]) {
    let n = adj.len();
    debug_assert!(n <= MAX_CANONICAL_ORDER);
    let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let key = |v: usize| -> u64 {
        let counts = Bits(adj[v]).fold(0u64, |acc, w| acc + (1 << (4 * deg[w])));
        (deg[v] as u64) << 48 | counts
    };
    let keys: Vec<u64> = (0..n).map(key).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| keys[v]);

    let mut search = Search {
        adj,
        n,
        cell: [0; MAX_CANONICAL_ORDER],
        best: [0; MAX_CANONICAL_ORDER],
        best_perm: [0; MAX_CANONICAL_ORDER],
        perm: [0; MAX_CANONICAL_ORDER],
    };
    for (k, &v) in order.iter().enumerate() {
        search.cell[k] = (0..n)
            .filter(|&w| keys[w] == keys[v])
            .fold(0, |m, w| m | 1 << w);
    }
    search.dfs(0, 0, true);

    let bits = (1..n).fold(0u128, |acc, k| acc << k | search.best[k] as u128);
    (bits, search.best_perm)
}

pub(crate) fn form_from_bits(n: usize, bits: u128) -> CanonicalForm {
    CanonicalForm {
        order: n as u8,
        bits,
    }
}

/// Canonical form together with the canonical labelling.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(GraphError::TooLargeForCanonical {
            order: n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let (bits, perm) = canonical_rows(g.adjacency());
    let form = CanonicalForm {
        order: n as u8,
        bits,
    };
    Ok((form, perm[..n].iter().map(|&p| p as usize).collect()))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g).map(|(f, _)| f)
}

/// Isomorphism test through canonical forms.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.order() != b.order() || a.size() != b.size() || a.degree_multiset() != b.degree_multiset() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

impl Graph {
    pub fn canonical_form(&self) -> Result<CanonicalForm, GraphError> {
        canonical_form(self)
    }

    /// This graph relabelled into canonical order.
    pub fn canonical_graph(&self) -> Result<Graph, GraphError> {
        canonical_form(self).map(|f| f.to_graph())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn c4_is_k22_and_p4_is_not_s4() {
        let k22 = Graph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(canonical_form(&cycle(4)).unwrap(), canonical_form(&k22).unwrap());
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&s4).unwrap());
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let (form, perm) = canonical_labeling(&g).unwrap();
        // perm maps position -> original; relabel wants original -> position
        let mut inverse = vec![0; perm.len()];
        for (pos, &v) in perm.iter().enumerate() {
            inverse[v] = pos;
        }
        assert_eq!(g.relabel(&inverse).unwrap(), form.to_graph());
        assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }

    #[test]
    fn random_relabel_invariance() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=8);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.45) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }
    }

    #[test]
    fn vertex_transitive_graphs_at_the_cap() {
        let k = Graph::complete(12).unwrap();
        assert_eq!(canonical_form(&k).unwrap().to_graph(), k);
        let c = cycle(12);
        let f = canonical_form(&c).unwrap();
        assert!(is_isomorphic(&f.to_graph(), &c).unwrap());
        assert!(matches!(
            canonical_form(&Graph::empty(13).unwrap()),
            Err(GraphError::TooLargeForCanonical { order: 13, .. })
        ));
    }
}
