use std::collections::VecDeque;

use crate::graph::Graph;

/// Vertex connectivity κ(G). κ(K_n) = n − 1 and a disconnected graph has
/// κ = 0. Otherwise the minimum over non-adjacent pairs of the number of
/// internally disjoint paths, found by unit-capacity flow on the split graph.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let mut net = SplitNetwork::new(g);
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(net.max_flow(s, t, best));
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for
/// non-adjacent `s`, `t`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    assert!(
        s != t && !g.has_edge(s, t),
        "local connectivity needs a non-adjacent pair"
    );
    SplitNetwork::new(g).max_flow(s, t, usize::MAX)
}

/// Each vertex `v` becomes `2v` (in) and `2v + 1` (out), joined by a unit arc;
/// each edge becomes two unbounded arcs out→in.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
    base: Vec<u32>,
}

const BIG: u32 = u32::MAX / 2;

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
            base: Vec::new(),
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for &(u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, BIG);
            net.arc(2 * v + 1, 2 * u, BIG);
        }
        net.base = net.cap.clone();
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Flow from `s` out to `t` in, stopping once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base);
        let (src, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            parent.fill(usize::MAX);
            parent[src] = usize::MAX - 1;
            let mut queue = VecDeque::from([src]);
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && parent[y] == usize::MAX {
                        parent[y] = a;
                        if y == sink {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != src {
                let a = parent[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(connectivity(&Graph::cycle(5)), 2);
        assert_eq!(connectivity(&Graph::complete(4)), 3);
        assert_eq!(connectivity(&Graph::complete(1)), 0);
        assert_eq!(connectivity(&Graph::path(4)), 1);
        assert_eq!(connectivity(&Graph::empty(3)), 0);
        assert_eq!(connectivity(&Graph::complete_bipartite(3, 4)), 3);
    }

    #[test]
    fn petersen_is_three_connected() {
        assert_eq!(connectivity(&Graph::petersen()), 3);
        assert_eq!(local_connectivity(&Graph::petersen(), 0, 2), 3);
    }
}
