//! Brute-force reference implementations and corpus helpers for tests.
#![allow(dead_code)]

use rand::Rng;
use twofactor::io::decode_graph6;
use twofactor::{Graph, Rational, VertexSet};

pub const CONNECTED_LE7: &str = include_str!("../data/connected_le7.g6");
pub const CONNECTED_8: &str = include_str!("../data/connected_8.g6");

pub fn corpus(text: &str) -> Vec<Graph> {
    text.lines().map(|l| decode_graph6(l).unwrap()).collect()
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// α by checking every vertex subset.
pub fn alpha(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&m| {
            let s = members(m, n);
            s.iter()
                .all(|&u| s.iter().all(|&v| u == v || !g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// κ as the smallest vertex set whose removal disconnects the graph or
/// leaves one vertex; `n − 1` for complete graphs.
pub fn kappa(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    (0u32..1 << n)
        .filter(|&m| {
            g.components_avoiding(&VertexSet::new(members(m, n)))
                .count()
                >= 2
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// τ as the minimum of `|S| / c(G − S)` over every cut set, no pruning.
pub fn toughness(g: &Graph) -> Rational {
    let n = g.order();
    let mut best = Rational::Infinite;
    for m in 0u32..1 << n {
        let s = VertexSet::new(members(m, n));
        let c = g.components_avoiding(&s).count();
        if c >= 2 {
            best = best.min(Rational::new(s.len() as i64, c as i64));
        }
    }
    best
}

/// Maximum matching size by recursion on the lowest unmatched vertex.
pub fn matching_size(g: &Graph) -> usize {
    fn go(g: &Graph, used: &mut Vec<bool>, v: usize) -> usize {
        let Some(u) = (v..g.order()).find(|&u| !used[u]) else {
            return 0;
        };
        used[u] = true;
        let mut best = go(g, used, u + 1);
        let nbrs: Vec<usize> = g.neighbors(u).filter(|&w| !used[w]).collect();
        for w in nbrs {
            used[w] = true;
            best = best.max(1 + go(g, used, u + 1));
            used[w] = false;
        }
        used[u] = false;
        best
    }
    go(g, &mut vec![false; g.order()], 0)
}

/// G(n, p) with `p` drawn per graph.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.85);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// G(n, p) resampled until connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    loop {
        let g = random_graph(rng, n);
        if g.is_connected() {
            return g;
        }
    }
}
