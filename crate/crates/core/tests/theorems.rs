//! The verifier's extremal sets, recomputed for n <= 6 from brute-force
//! invariants and permutation-minimum canonical codes.

mod common;

use std::collections::BTreeSet;

use common::*;
use randic_core::invariants::vertex_connectivity as kappa;
use randic_core::verifier::{verify_suite, SuiteConfig, Verdict};
use randic_core::{Graph, Theorem};

const TOL: f64 = 1e-9;

struct Profile {
    m: Vec<Vec<bool>>,
    chi: usize,
    omega: usize,
    kappa: usize,
    lambda: usize,
    bridges: usize,
    delta: usize,
}

fn in_class(t: Theorem, c: usize, p: &Profile) -> bool {
    match t {
        Theorem::ChromaticLower | Theorem::ChromaticUpper => p.chi == c,
        Theorem::CliqueLower | Theorem::CliqueUpper => p.omega == c,
        Theorem::CutedgeUpper => p.bridges == c,
        Theorem::ConnectivityLower => p.kappa == c,
        Theorem::ConnectivityAtmostLower | Theorem::ConnStarUpper => p.kappa <= c,
        Theorem::EdgeConnectivityLower => p.lambda == c,
        Theorem::EdgeConnectivityAtmostLower | Theorem::EdgeconnStarUpper => p.lambda <= c,
        Theorem::MinDegreeLower => p.delta == c,
    }
}

fn minimises(t: Theorem) -> bool {
    !matches!(
        t,
        Theorem::ChromaticUpper | Theorem::CliqueUpper | Theorem::CutedgeUpper | Theorem::ConnStarUpper
            | Theorem::EdgeconnStarUpper
    )
}

#[test]
fn extremal_sets_match_brute_force() {
    let classes = all_classes_by_extension(6);
    let config = SuiteConfig {
        orders: vec![4, 5, 6],
        gammas: vec![-1.0, -2.0, -0.5, -0.25],
        exploratory: true,
        ..SuiteConfig::default()
    };
    let reports = verify_suite(&config).unwrap();
    assert!(reports.len() > 400);

    for n in 4..=6 {
        let perms = permutations(n);
        let profiles: Vec<Profile> = classes[&n]
            .iter()
            .filter(|m| connected(m))
            .map(|m| Profile {
                chi: chromatic(m),
                omega: clique(m),
                kappa: vertex_connectivity(m),
                lambda: edge_connectivity(m),
                bridges: bridges(m).len(),
                delta: *degrees(m).iter().min().unwrap(),
                m: m.clone(),
            })
            .collect();

        for r in reports.iter().filter(|r| r.n == n) {
            let label = format!("{} n={n} c={} gamma={}", r.theorem.id(), r.c, r.gamma.value());
            let g = r.gamma.value();
            let members: Vec<(f64, &Profile)> = profiles
                .iter()
                .filter(|p| in_class(r.theorem, r.c, p))
                .map(|p| (index(&p.m, g), p))
                .collect();
            assert_eq!(r.class_size, members.len(), "{label}");
            if members.is_empty() {
                assert_eq!(r.verdict, Verdict::EmptyClass, "{label}");
                continue;
            }
            let sign = if minimises(r.theorem) { 1.0 } else { -1.0 };
            let best = members
                .iter()
                .map(|&(v, _)| sign * v)
                .fold(f64::INFINITY, f64::min);
            let ties: BTreeSet<u64> = members
                .iter()
                .filter(|&&(v, _)| rel_close(sign * v, best, TOL))
                .map(|(_, p)| naive_canonical(&p.m, &perms))
                .collect();
            let found: BTreeSet<u64> = r
                .witnesses_found
                .iter()
                .map(|s| naive_canonical(&matrix(&Graph::from_graph6(s).unwrap()), &perms))
                .collect();
            assert!(rel_close(r.extremum.unwrap(), sign * best, TOL), "{label}");
            assert_eq!(found, ties, "{label}");

            let expected_ok = rel_close(sign * best, r.bound, TOL)
                && found
                    == r.witnesses_expected
                        .iter()
                        .map(|s| naive_canonical(&matrix(&Graph::from_graph6(s).unwrap()), &perms))
                        .collect();
            assert_eq!(r.verdict == Verdict::Pass, expected_ok, "{label}");
            if !r.exploratory {
                assert_eq!(r.verdict, Verdict::Pass, "{label}");
            }
        }
    }
}

#[test]
fn deleting_edges_stays_in_the_at_most_classes() {
    // kappa and kappa' never grow when an edge is removed, so the classes
    // V_{n,c} and E_{n,c} are closed under connected edge deletion
    for n in 3..=6 {
        for g in randic_core::enumerate_connected(n).unwrap() {
            let k = kappa(&g).unwrap();
            let l = randic_core::invariants::edge_connectivity(&g).unwrap();
            for (u, v) in g.edges() {
                let h = g.delete_edge(u, v).unwrap();
                if h.is_connected() {
                    assert!(kappa(&h).unwrap() <= k);
                    assert!(randic_core::invariants::edge_connectivity(&h).unwrap() <= l);
                }
            }
        }
    }
}
