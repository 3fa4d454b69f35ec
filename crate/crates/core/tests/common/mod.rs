//! Brute-force oracles and graph corpora shared by the integration tests.
//! Nothing here calls the library's search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use iterline::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Calls `f` on every permutation of `0..n` (lexicographic order).
pub fn permutations(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        f(&p);
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for e in g.edges() {
        a[e.u()][e.v()] = true;
        a[e.v()][e.u()] = true;
    }
    a
}

/// Every automorphism, by trying all `n!` permutations.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let a = adjacency(g);
    let edges = g.edge_list();
    let mut out = Vec::new();
    permutations(g.n(), |p| {
        if edges.iter().all(|e| a[p[e.u()]][p[e.v()]]) {
            out.push(p.to_vec());
        }
    });
    out
}

fn preserved(colors: &[usize], p: &[usize]) -> bool {
    (0..colors.len()).all(|v| colors[p[v]] == colors[v])
}

fn for_each_coloring(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut c = vec![0usize; n];
    loop {
        if !f(&c) {
            return;
        }
        let mut i = 0;
        while i < n && c[i] == k - 1 {
            c[i] = 0;
            i += 1;
        }
        if i == n {
            return;
        }
        c[i] += 1;
    }
}

/// Least `k` such that some `k`-coloring is preserved only by the identity.
pub fn brute_distinguishing_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let nontrivial: Vec<Vec<usize>> = brute_automorphisms(g)
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .collect();
    (1..=n)
        .find(|&k| {
            let mut found = false;
            for_each_coloring(n, k, |c| {
                found = nontrivial.iter().all(|p| !preserved(c, p));
                !found
            });
            found
        })
        .unwrap()
}

/// Orbits of distinguishing colorings under the root stabilizer, counted as
/// (number of distinguishing colorings) / |stabilizer|: a distinguishing
/// coloring has trivial stabilizer, so every orbit has full size.
pub fn brute_rooted_count(g: &Graph, root: usize, k: usize) -> u64 {
    let stab: Vec<Vec<usize>> = brute_automorphisms(g)
        .into_iter()
        .filter(|p| p[root] == root)
        .collect();
    let nontrivial: Vec<&Vec<usize>> = stab
        .iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .collect();
    let mut count = 0u64;
    for_each_coloring(g.n(), k, |c| {
        if nontrivial.iter().all(|p| !preserved(c, p)) {
            count += 1;
        }
        true
    });
    assert_eq!(count % stab.len() as u64, 0);
    count / stab.len() as u64
}

/// Smallest edge bitmask over all relabelings; equal iff isomorphic.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "mask holds at most 64 vertex pairs");
    let bit = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        b * (b - 1) / 2 + a
    };
    let edges = g.edge_list();
    let mut best = u64::MAX;
    permutations(n, |p| {
        let m = edges
            .iter()
            .fold(0u64, |m, e| m | 1 << bit(p[e.u()], p[e.v()]));
        best = best.min(m);
    });
    best
}

fn from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if mask >> (b * (b - 1) / 2 + a) & 1 == 1 {
                edges.push((a, b));
            }
        }
    }
    Graph::build(n, edges).unwrap()
}

/// All connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let g = from_mask(n, mask);
        if g.is_connected() && seen.insert(canonical_mask(&g)) {
            out.push(g);
        }
    }
    out
}

/// A connected graph on `n` vertices: a random tree plus random extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for b in 1..n {
        for a in 0..b {
            if !edges.contains(&(a, b)) && rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    Graph::build(n, edges).unwrap()
}

/// Up to `count` pairwise non-isomorphic connected graphs on `n` vertices.
pub fn sample_connected(seed: u64, n: usize, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count {
        attempts += 1;
        let density = rng.gen_range(0.05..0.8);
        let g = random_connected(&mut rng, n, density);
        if seen.insert(canonical_mask(&g)) {
            out.push(g);
        }
    }
    out
}

/// Any graph on `n` vertices, edges present with probability `density`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    Graph::build(n, edges).unwrap()
}

/// All trees on `n` vertices up to isomorphism, from Prüfer sequences.
pub fn prufer_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![Graph::path(n.max(1))];
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let t = iterline::treesym::prufer_decode(&seq, n).unwrap();
        if seen.insert(canonical_mask(&t)) {
            out.push(t);
        }
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return out;
        }
        seq[i] += 1;
    }
}
