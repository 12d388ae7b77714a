//! Brute-force reference implementations. Nothing here calls into the
//! library's algorithms; graphs are plain adjacency matrices.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use randic_core::Graph;

/// Adjacency matrix of a library graph.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn graph_of(m: &[Vec<bool>]) -> Graph {
    Graph::new(m.len(), &edge_list(m)).unwrap()
}

/// Connectivity of the subgraph induced by `alive`, by depth-first search.
pub fn connected_on(m: &[Vec<bool>], alive: &[bool]) -> bool {
    let n = m.len();
    let Some(start) = (0..n).find(|&v| alive[v]) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if alive[v] && m[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..n).all(|v| !alive[v] || seen[v])
}

pub fn connected(m: &[Vec<bool>]) -> bool {
    connected_on(m, &vec![true; m.len()])
}

pub fn degrees(m: &[Vec<bool>]) -> Vec<usize> {
    m.iter().map(|r| r.iter().filter(|&&b| b).count()).collect()
}

pub fn edge_list(m: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = m.len();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| m[u][v])
        .collect()
}

/// Smallest `k` with a proper colouring in `{0..k}^n`, by trying them all.
pub fn chromatic(m: &[Vec<bool>]) -> usize {
    let n = m.len();
    let edges = edge_list(m);
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut colour = vec![0; n];
            let mut c = code;
            for slot in colour.iter_mut() {
                *slot = c % k;
                c /= k;
            }
            if edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
                return k;
            }
        }
    }
    n
}

/// Largest vertex subset that is pairwise adjacent.
pub fn clique(m: &[Vec<bool>]) -> usize {
    let n = m.len();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| (0..n).all(|v| u == v || s >> u & 1 == 0 || s >> v & 1 == 0 || m[u][v]))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest vertex cut; `n - 1` for complete graphs.
pub fn vertex_connectivity(m: &[Vec<bool>]) -> usize {
    let n = m.len();
    let mut best = n.saturating_sub(1);
    for s in 0u32..1 << n {
        let removed = s.count_ones() as usize;
        if removed >= best || n - removed < 2 {
            continue;
        }
        let alive: Vec<bool> = (0..n).map(|v| s >> v & 1 == 0).collect();
        if !connected_on(m, &alive) {
            best = removed;
        }
    }
    best
}

/// Smallest edge set whose removal disconnects the graph.
pub fn edge_connectivity(m: &[Vec<bool>]) -> usize {
    let n = m.len();
    if n < 2 {
        return 0;
    }
    let edges = edge_list(m);
    let mut best = usize::MAX;
    for s in 0u32..1 << edges.len() {
        let k = s.count_ones() as usize;
        if k >= best {
            continue;
        }
        let mut h = m.to_vec();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if s >> i & 1 == 1 {
                h[u][v] = false;
                h[v][u] = false;
            }
        }
        if !connected(&h) {
            best = k;
        }
    }
    best
}

/// Edges whose single removal disconnects the graph.
pub fn bridges(m: &[Vec<bool>]) -> Vec<(usize, usize)> {
    edge_list(m)
        .into_iter()
        .filter(|&(u, v)| {
            let mut h = m.to_vec();
            h[u][v] = false;
            h[v][u] = false;
            !connected(&h)
        })
        .collect()
}

/// The index from its definition, through `powf`.
pub fn index(m: &[Vec<bool>], gamma: f64) -> f64 {
    degrees(m).iter().map(|&d| (d as f64).powf(gamma)).sum()
}

pub fn index_of(g: &Graph, gamma: f64) -> f64 {
    index(&matrix(g), gamma)
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Upper triangle of `m` relabelled by `p` (new position `k` holds old
/// vertex `p[k]`), packed column by column.
fn code(m: &[Vec<bool>], p: &[usize]) -> u64 {
    let n = m.len();
    let mut c = 0u64;
    for j in 1..n {
        for i in 0..j {
            c = c << 1 | m[p[i]][p[j]] as u64;
        }
    }
    c
}

/// Canonical code: the minimum packed upper triangle over all `n!` labellings.
pub fn naive_canonical(m: &[Vec<bool>], perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| code(m, p)).min().unwrap()
}

pub fn isomorphic(a: &[Vec<bool>], b: &[Vec<bool>], perms: &[Vec<usize>]) -> bool {
    let target = code(b, &(0..b.len()).collect::<Vec<_>>());
    a.len() == b.len() && perms.iter().any(|p| code(a, p) == target)
}

/// Every labelled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut m = vec![vec![false; n]; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                m[i][j] = true;
                m[j][i] = true;
            }
        }
        m
    })
}

/// Connected classes of order `n` by grouping labelled graphs with a
/// pairwise isomorphism test. Practical for `n <= 5`.
pub fn connected_classes_pairwise(n: usize) -> Vec<Vec<Vec<bool>>> {
    let perms = permutations(n);
    let mut reps: Vec<Vec<Vec<bool>>> = Vec::new();
    for m in labeled_graphs(n).filter(|m| connected(m)) {
        if !reps.iter().any(|r| isomorphic(&m, r, &perms)) {
            reps.push(m);
        }
    }
    reps
}

/// Representatives of all (not necessarily connected) classes for every
/// order up to `max_n`, built by adding one vertex in every possible way and
/// deduplicating with [`naive_canonical`]. Keyed by order.
pub fn all_classes_by_extension(max_n: usize) -> BTreeMap<usize, Vec<Vec<Vec<bool>>>> {
    let mut out = BTreeMap::new();
    let mut level: Vec<Vec<Vec<bool>>> = vec![vec![vec![false]]];
    out.insert(1, level.clone());
    for n in 2..=max_n {
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for base in &level {
            for nb in 0u32..1 << (n - 1) {
                let mut m = vec![vec![false; n]; n];
                for u in 0..n - 1 {
                    m[u][..n - 1].copy_from_slice(&base[u]);
                    let b = nb >> u & 1 == 1;
                    m[u][n - 1] = b;
                    m[n - 1][u] = b;
                }
                if seen.insert(naive_canonical(&m, &perms)) {
                    next.push(m);
                }
            }
        }
        out.insert(n, next.clone());
        level = next;
    }
    out
}

/// Whether `m` is `K_1 + (K_a ∪ K_b)` for some `a, b >= 1`: a dominating
/// vertex whose removal leaves exactly two cliques.
pub fn is_k1_join_two_cliques(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    (0..n).any(|u| {
        if (0..n).any(|v| v != u && !m[u][v]) {
            return false;
        }
        let alive: Vec<bool> = (0..n).map(|v| v != u).collect();
        // components of G - u
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in (0..n).filter(|&v| v != u) {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if alive[y] && m[x][y] && comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        count == 2
            && (0..n).all(|x| {
                (0..n).all(|y| x == u || y == u || x == y || comp[x] != comp[y] || m[x][y])
            })
    })
}
