//! Maximum-cardinality matching with Edmonds' blossom algorithm.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

/// Pairwise vertex-disjoint edges, stored as a mate table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Matched pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Whether every pair is an edge of `g` and the mate table is symmetric.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.mate.len() == g.order()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => g.has_edge(u, v) && self.mate[v] == Some(u),
            })
    }
}

const NONE: usize = usize::MAX;

/// A maximum matching of `g`. Starts from a greedy matching and grows it by
/// one augmenting path per free root, contracting odd cycles as found.
/// O(V³).
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut state = Blossom {
        adj: &adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };

    for (u, nbrs) in adj.iter().enumerate() {
        if state.mate[u] == NONE {
            if let Some(&v) = nbrs.iter().find(|&&v| state.mate[v] == NONE) {
                state.mate[u] = v;
                state.mate[v] = u;
            }
        }
    }
    for root in 0..n {
        if state.mate[root] == NONE {
            if let Some(end) = state.find_path(root) {
                state.augment(end);
            }
        }
    }
    Matching {
        mate: state
            .mate
            .into_iter()
            .map(|m| (m != NONE).then_some(m))
            .collect(),
    }
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns a free vertex reached
    /// by an augmenting path.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for x in 0..n {
                        if self.in_blossom[self.base[x]] {
                            self.base[x] = cur;
                            if !self.used[x] {
                                self.used[x] = true;
                                self.queue.push_back(x);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles() {
        assert_eq!(max_matching(&Graph::cycle(4)).size(), 2);
        assert_eq!(max_matching(&Graph::cycle(5)).size(), 2);
        assert!(max_matching(&Graph::cycle(6)).is_perfect());
    }

    #[test]
    fn petersen_perfect() {
        let g = Graph::petersen();
        let m = max_matching(&g);
        assert_eq!(m.size(), 5);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn blossom_needed() {
        // Two triangles joined by a path; greedy from vertex 0 picks a bad edge.
        let g = Graph::from_edge_list(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 5),
            ],
        )
        .unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 4);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn empty_and_star() {
        assert_eq!(max_matching(&Graph::empty(0)).size(), 0);
        assert_eq!(max_matching(&Graph::complete_bipartite(1, 5)).size(), 1);
    }
}
