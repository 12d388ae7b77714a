//! Generators for the named extremal graph families.
//!
//! Labelling is fixed per family so generated graphs are reproducible through
//! graph6: clique vertices first, then cycle or path vertices in order, then
//! pendants in attachment order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};
use crate::scalar::{degree_power, GammaExponent, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    Invalid { family: &'static str, reason: String },
    #[error("{0} has isolated vertices; the index is undefined")]
    IsolatedVertex(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One member of a named family, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Star { n: usize },
    /// Complete multipartite graph with the given part sizes.
    Multipartite { parts: Vec<usize> },
    Turan { n: usize, c: usize },
    /// `K_c` with `n - c` pendants on one clique vertex.
    Pineapple { n: usize, c: usize },
    /// `K_c` with `pendants[i]` pendants on clique vertex `i`.
    StarClique { pendants: Vec<usize> },
    /// `C_{n-c}` with `c` pendants on one cycle vertex.
    PendantCycle { n: usize, c: usize },
    /// `K_c` with a path hanging from one clique vertex, `n` vertices total.
    Kite { n: usize, c: usize },
    /// `K_c + (K_{n1} ∪ K_{n - c - n1})`.
    ConnectivitySplit { n: usize, c: usize, n1: usize },
}

/// Part sizes of the Turán graph, non-increasing: `r` parts of `q + 1`,
/// then `c - r` parts of `q`, where `n = cq + r`.
pub fn turan_parts(n: usize, c: usize) -> Vec<usize> {
    let (q, r) = (n / c, n % c);
    let mut parts = vec![q + 1; r];
    parts.extend(std::iter::repeat_n(q, c - r));
    parts
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Complete { .. } => "complete",
            Self::Cycle { .. } => "cycle",
            Self::Path { .. } => "path",
            Self::Star { .. } => "star",
            Self::Multipartite { .. } => "multipartite",
            Self::Turan { .. } => "turan",
            Self::Pineapple { .. } => "pineapple",
            Self::StarClique { .. } => "star_clique",
            Self::PendantCycle { .. } => "pendant_cycle",
            Self::Kite { .. } => "kite",
            Self::ConnectivitySplit { .. } => "connectivity_split",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Self::Multipartite { parts } => parts.iter().sum(),
            Self::StarClique { pendants } => pendants.len() + pendants.iter().sum::<usize>(),
            Self::Complete { n }
            | Self::Cycle { n }
            | Self::Path { n }
            | Self::Star { n }
            | Self::Turan { n, .. }
            | Self::Pineapple { n, .. }
            | Self::PendantCycle { n, .. }
            | Self::Kite { n, .. }
            | Self::ConnectivitySplit { n, .. } => *n,
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> FamilyError {
        FamilyError::Invalid {
            family: self.name(),
            reason: reason.into(),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let n = self.order();
        if n == 0 || n > MAX_ORDER {
            return Err(self.invalid(format!("order must be in 1..={MAX_ORDER}, got {n}")));
        }
        let check = |ok: bool, why: &str| if ok { Ok(()) } else { Err(self.invalid(why)) };
        match self {
            Self::Complete { .. } | Self::Path { .. } => Ok(()),
            Self::Cycle { n } => check(*n >= 3, "requires n >= 3"),
            Self::Star { n } => check(*n >= 2, "requires n >= 2"),
            Self::Multipartite { parts } => check(
                !parts.is_empty() && parts.iter().all(|&p| p >= 1),
                "requires at least one part and every part non-empty",
            ),
            Self::Turan { n, c } => check(1 <= *c && c <= n, "requires 1 <= c <= n"),
            Self::Pineapple { n, c } => check(2 <= *c && c <= n, "requires 2 <= c <= n"),
            Self::StarClique { pendants } => check(!pendants.is_empty(), "requires c >= 1"),
            Self::PendantCycle { n, c } => check(n >= &(c + 3), "requires n - c >= 3"),
            Self::Kite { n, c } => check(3 <= *c && c <= n, "requires 3 <= c <= n"),
            Self::ConnectivitySplit { n, c, n1 } => check(
                *c >= 1 && *n1 >= 1 && n1 + c < *n,
                "requires c >= 1, n1 >= 1 and n2 = n - c - n1 >= 1",
            ),
        }
    }

    /// Degree classes `(degree, multiplicity)` from the construction alone.
    pub fn degree_classes(&self) -> Result<Vec<(usize, usize)>, FamilyError> {
        self.validate()?;
        let n = self.order();
        Ok(match self {
            Self::Complete { n } => vec![(n - 1, *n)],
            Self::Cycle { n } => vec![(2, *n)],
            Self::Path { n: 1 } => vec![(0, 1)],
            Self::Path { n } => vec![(1, 2), (2, n - 2)],
            Self::Star { n } => vec![(n - 1, 1), (1, n - 1)],
            Self::Multipartite { parts } => parts.iter().map(|&p| (n - p, p)).collect(),
            Self::Turan { n, c } => turan_parts(*n, *c).into_iter().map(|p| (n - p, p)).collect(),
            Self::Pineapple { n, c } => vec![(n - 1, 1), (c - 1, c - 1), (1, n - c)],
            Self::StarClique { pendants } => {
                let c = pendants.len();
                let mut classes: Vec<_> = pendants.iter().map(|&m| (c - 1 + m, 1)).collect();
                classes.push((1, n - c));
                classes
            }
            Self::PendantCycle { n, c } => vec![(c + 2, 1), (2, n - c - 1), (1, *c)],
            Self::Kite { n, c } if n == c => vec![(c - 1, *c)],
            Self::Kite { n, c } => vec![(*c, 1), (c - 1, c - 1), (2, n - c - 1), (1, 1)],
            Self::ConnectivitySplit { n, c, n1 } => {
                let n2 = n - c - n1;
                vec![(n - 1, *c), (n1 + c - 1, *n1), (n2 + c - 1, n2)]
            }
        })
    }

    /// Predicted degree multiset, non-increasing.
    pub fn predicted_degrees(&self) -> Result<Vec<usize>, FamilyError> {
        let mut out: Vec<usize> = self
            .degree_classes()?
            .into_iter()
            .flat_map(|(d, k)| std::iter::repeat_n(d, k))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// The index evaluated from the degree classes, without building the graph.
    pub fn predicted_index<F: Scalar>(&self, gamma: GammaExponent<F>) -> Result<F, FamilyError> {
        let classes = self.degree_classes()?;
        if classes.iter().any(|&(d, k)| d == 0 && k > 0) {
            return Err(FamilyError::IsolatedVertex(self.name()));
        }
        Ok(classes.iter().fold(F::zero(), |acc, &(d, k)| {
            acc + F::of(k) * degree_power(d, gamma.value())
        }))
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let n = self.order();
        let mut edges = Vec::new();
        let clique = |edges: &mut Vec<(usize, usize)>, range: std::ops::Range<usize>| {
            for j in range.clone() {
                for i in range.start..j {
                    edges.push((i, j));
                }
            }
        };
        match self {
            Self::Complete { n } => clique(&mut edges, 0..*n),
            Self::Cycle { n } => edges.extend((0..*n).map(|i| (i, (i + 1) % n))),
            Self::Path { n } => edges.extend((1..*n).map(|i| (i - 1, i))),
            Self::Star { n } => edges.extend((1..*n).map(|i| (0, i))),
            Self::Multipartite { parts } => return Ok(multipartite(parts)?),
            Self::Turan { n, c } => return Ok(multipartite(&turan_parts(*n, *c))?),
            Self::Pineapple { n, c } => {
                clique(&mut edges, 0..*c);
                edges.extend((*c..*n).map(|p| (0, p)));
            }
            Self::StarClique { pendants } => {
                let c = pendants.len();
                clique(&mut edges, 0..c);
                let mut next = c;
                for (i, &m) in pendants.iter().enumerate() {
                    edges.extend((next..next + m).map(|p| (i, p)));
                    next += m;
                }
            }
            Self::PendantCycle { n, c } => {
                let k = n - c;
                edges.extend((0..k).map(|i| (i, (i + 1) % k)));
                edges.extend((k..*n).map(|p| (0, p)));
            }
            Self::Kite { n, c } => {
                clique(&mut edges, 0..*c);
                let mut prev = 0;
                for v in *c..*n {
                    edges.push((prev, v));
                    prev = v;
                }
            }
            Self::ConnectivitySplit { n, c, n1 } => {
                clique(&mut edges, 0..*n);
                let (a, b) = (*c..c + n1, c + n1..*n);
                edges.retain(|&(i, j)| !(a.contains(&i) && b.contains(&j)));
            }
        }
        Ok(Graph::new(n, &edges)?)
    }
}

fn multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if part_of[i] != part_of[j] {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{
        chromatic_number, clique_number, cut_edges, edge_connectivity, vertex_connectivity,
        zeroth_order_general_randic,
    };

    fn m1() -> GammaExponent<f64> {
        GammaExponent::new(-1.0).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * b.abs().max(1.0)
    }

    fn check(spec: FamilySpec, degrees: &[usize], index: f64) {
        let g = spec.generate().unwrap();
        assert_eq!(g.degree_multiset(), degrees, "{spec:?}");
        assert_eq!(spec.predicted_degrees().unwrap(), degrees);
        assert!(close(zeroth_order_general_randic(&g, m1()).unwrap(), index));
        assert!(close(spec.predicted_index(m1()).unwrap(), index));
    }

    #[test]
    fn family_examples() {
        check(FamilySpec::Turan { n: 7, c: 3 }, &[5, 5, 5, 5, 4, 4, 4], 1.55);
        check(FamilySpec::Pineapple { n: 6, c: 3 }, &[5, 2, 2, 1, 1, 1], 4.2);
        check(FamilySpec::PendantCycle { n: 6, c: 2 }, &[4, 2, 2, 2, 1, 1], 3.75);
        check(
            FamilySpec::ConnectivitySplit { n: 5, c: 1, n1: 2 },
            &[4, 2, 2, 2, 2],
            2.25,
        );
        check(FamilySpec::Star { n: 6 }, &[5, 1, 1, 1, 1, 1], 5.2);
    }

    #[test]
    fn star_predicted_index_formula() {
        for n in 2..12 {
            for g in [-2.0, -1.0, -0.5] {
                let gamma = GammaExponent::new(g).unwrap();
                let expected = (n - 1) as f64 + ((n - 1) as f64).powf(g);
                let got = FamilySpec::Star { n }.predicted_index(gamma).unwrap();
                assert!(close(got, expected), "n={n} g={g}");
            }
        }
    }

    #[test]
    fn star_clique_special_cases() {
        for c in 1..6 {
            let k = FamilySpec::StarClique { pendants: vec![0; c] }.generate().unwrap();
            assert_eq!(k, FamilySpec::Complete { n: c }.generate().unwrap());
        }
        for c in 2..6 {
            for n in c..10 {
                let mut m = vec![0; c];
                m[0] = n - c;
                let s = FamilySpec::StarClique { pendants: m }.generate().unwrap();
                assert_eq!(s, FamilySpec::Pineapple { n, c }.generate().unwrap());
            }
        }
        assert_eq!(
            FamilySpec::Pineapple { n: 7, c: 2 }.generate().unwrap(),
            FamilySpec::Star { n: 7 }.generate().unwrap()
        );
    }

    #[test]
    fn structural_properties() {
        for n in 2..=10 {
            for c in 1..=n {
                let t = FamilySpec::Turan { n, c };
                let parts = turan_parts(n, c);
                assert!(parts.iter().max().unwrap() - parts.iter().min().unwrap() <= 1);
                assert_eq!(parts.iter().sum::<usize>(), n);
                let g = t.generate().unwrap();
                assert_eq!(chromatic_number(&g), c);
                assert_eq!(clique_number(&g), c);
                if c >= 2 {
                    let p = FamilySpec::Pineapple { n, c }.generate().unwrap();
                    assert_eq!(chromatic_number(&p), c);
                }
                if n >= c + 3 {
                    let g = FamilySpec::PendantCycle { n, c }.generate().unwrap();
                    assert_eq!(cut_edges(&g).unwrap().len(), c);
                }
                for n1 in 1..n.saturating_sub(c) {
                    let g = FamilySpec::ConnectivitySplit { n, c, n1 }.generate().unwrap();
                    assert_eq!(vertex_connectivity(&g).unwrap(), c);
                    if n1 == 1 {
                        assert_eq!(edge_connectivity(&g).unwrap(), c);
                    }
                }
                if c >= 3 {
                    let g = FamilySpec::Kite { n, c }.generate().unwrap();
                    assert_eq!(clique_number(&g), c);
                    assert_eq!(cut_edges(&g).unwrap().len(), n - c);
                }
            }
        }
    }

    #[test]
    fn labelling_is_deterministic() {
        let g = FamilySpec::Kite { n: 6, c: 3 }.generate().unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (4, 5)]
        );
        let g = FamilySpec::PendantCycle { n: 6, c: 2 }.generate().unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3)]
        );
    }

    #[test]
    fn invalid_specs() {
        assert!(FamilySpec::Turan { n: 3, c: 4 }.generate().is_err());
        assert!(FamilySpec::Pineapple { n: 5, c: 1 }.generate().is_err());
        assert!(FamilySpec::PendantCycle { n: 5, c: 3 }.generate().is_err());
        assert!(FamilySpec::ConnectivitySplit { n: 5, c: 2, n1: 3 }.generate().is_err());
        assert!(FamilySpec::Multipartite { parts: vec![2, 0] }.generate().is_err());
        assert!(FamilySpec::Kite { n: 5, c: 2 }.generate().is_err());
        // the empty graph is a valid member but has no index
        let e = FamilySpec::Multipartite { parts: vec![4] };
        assert_eq!(e.generate().unwrap(), Graph::empty(4).unwrap());
        assert_eq!(
            e.predicted_index(m1()),
            Err(FamilyError::IsolatedVertex("multipartite"))
        );
    }
}
