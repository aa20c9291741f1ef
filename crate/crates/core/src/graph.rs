//! Immutable simple undirected graphs on dense vertex indices.
//!
//! Adjacency is held twice: a bitset row per vertex for constant-time
//! adjacency tests and a sorted edge list for iteration. Vertices may carry
//! an optional provenance label naming the role they play in a construction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order for which the subset-enumeration kernels work on `u64` masks.
pub const MASK_CAP: usize = 64;

#[derive(Clone)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
    edges: Vec<(usize, usize)>,
    labels: Vec<Option<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let words = order.div_ceil(64).max(1);
        Graph {
            order,
            words,
            rows: vec![0; order * words],
            edges: Vec::new(),
            labels: vec![None; order],
        }
    }

    /// Builds a graph from a list of vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge; loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edge_list(order: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in pairs {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_edges();
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    fn set_bit(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    fn rebuild_edges(&mut self) {
        let mut edges = Vec::new();
        for u in 0..self.order {
            edges.extend(self.neighbors(u).filter(|&v| u < v).map(|v| (u, v)));
        }
        self.edges = edges;
    }

    /// Known-valid edges; used by constructors inside the crate.
    pub(crate) fn from_valid_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        labels: Vec<Option<String>>,
    ) -> Self {
        debug_assert_eq!(labels.len(), order);
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            debug_assert!(u != v && u < order && v < order);
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_edges();
        g.labels = labels;
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[v * self.words..(v + 1) * self.words];
        row.iter()
            .enumerate()
            .flat_map(|(w, &word)| BitIter(word).map(move |b| w * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v * self.words..(v + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.order * self.order.saturating_sub(1) / 2
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Vertices carrying exactly `label`.
    pub fn labeled(&self, label: &str) -> VertexSet {
        VertexSet::from_sorted(
            (0..self.order)
                .filter(|&v| self.label(v) == Some(label))
                .collect(),
        )
    }

    /// Same graph with every vertex labeled `label`.
    pub fn with_label(mut self, label: &str) -> Self {
        self.labels = vec![Some(label.to_string()); self.order];
        self
    }

    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Precondition(format!(
                "{} labels for order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Adjacency rows as bit masks. Only available for order at most 64.
    pub fn mask_rows(&self) -> Result<Vec<u64>> {
        if self.order > MASK_CAP {
            return Err(Error::OverCap {
                what: "bitmask kernels",
                order: self.order,
                cap: MASK_CAP,
            });
        }
        Ok((0..self.order).map(|v| self.rows[v * self.words]).collect())
    }

    /// Connected components, each block sorted, blocks ordered by least vertex.
    pub fn components(&self) -> ComponentPartition {
        self.components_avoiding(&VertexSet::default())
    }

    /// Components of `G - removed`, expressed in host indices.
    pub fn components_avoiding(&self, removed: &VertexSet) -> ComponentPartition {
        let mut seen = vec![false; self.order];
        for v in removed.iter() {
            seen[v] = true;
        }
        let mut blocks = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut block = Vec::new();
            while let Some(u) = stack.pop() {
                block.push(u);
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(VertexSet::from_sorted(block));
        }
        ComponentPartition { blocks }
    }

    pub fn component_count(&self) -> usize {
        self.components().count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Subgraph induced by `s`, with `map[i]` the host vertex of new vertex `i`.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        let map: Vec<usize> = s.iter().collect();
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let labels = map.iter().map(|&v| self.labels[v].clone()).collect();
        Ok((Graph::from_valid_edges(map.len(), edges, labels), map))
    }

    /// `G - s`.
    pub fn delete(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        self.induced(&s.complement(self.order))
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_valid_edges(n, edges, vec![None; n])
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v));
        Graph::from_valid_edges(n, edges, vec![None; n])
    }

    /// Cycle on `n >= 3` vertices; smaller `n` yields the path.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Graph::from_valid_edges(n, edges, vec![None; n])
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_valid_edges(a + b, edges, vec![None; a + b])
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_valid_edges(10, edges, vec![None; 10])
    }

    pub fn complement(&self) -> Self {
        let n = self.order;
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<_> = edges.filter(|&(u, v)| !self.has_edge(u, v)).collect();
        Graph::from_valid_edges(n, edges, self.labels.clone())
    }

    /// `self ∪ other`; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.order;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        let labels = self
            .labels
            .iter()
            .chain(other.labels.iter())
            .cloned()
            .collect();
        Graph::from_valid_edges(self.order + other.order, edges, labels)
    }

    /// `self ∨ other`: disjoint union plus every edge across.
    pub fn join(&self, other: &Graph) -> Self {
        let shift = self.order;
        let cross = (0..self.order).flat_map(|u| (0..other.order).map(move |v| (u, v + shift)));
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .chain(cross);
        let labels = self
            .labels
            .iter()
            .chain(other.labels.iter())
            .cloned()
            .collect();
        Graph::from_valid_edges(self.order + other.order, edges, labels)
    }

    /// `a` disjoint copies of `h`.
    pub fn copies(a: usize, h: &Graph) -> Self {
        (0..a).fold(Graph::empty(0), |acc, _| acc.disjoint_union(h))
    }

    /// Inserts a set of pairwise vertex-disjoint new edges.
    pub fn add_matching(&self, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut used = vec![false; self.order];
        for &(u, v) in pairs {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if self.has_edge(u, v) {
                return Err(Error::EdgeExists(u.min(v), u.max(v)));
            }
            for x in [u, v] {
                if used[x] {
                    return Err(Error::MatchingOverlap(x));
                }
                used[x] = true;
            }
        }
        let edges = self.edges.iter().copied().chain(pairs.iter().copied());
        Ok(Graph::from_valid_edges(
            self.order,
            edges,
            self.labels.clone(),
        ))
    }

    /// Replaces edge `u v` by a path through `times` fresh vertices, appended
    /// in order from the `u` end and labeled `"subdivision"`.
    pub fn subdivide(&self, edge: (usize, usize), times: usize) -> Result<Self> {
        self.subdivide_labeled(edge, times, |_| "subdivision".to_string())
    }

    /// As [`Graph::subdivide`], naming the `i`-th internal vertex (counted from `u`)
    /// with `label(i)`.
    pub fn subdivide_labeled(
        &self,
        edge: (usize, usize),
        times: usize,
        label: impl Fn(usize) -> String,
    ) -> Result<Self> {
        let (u, v) = edge;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        if times == 0 {
            return Ok(self.clone());
        }
        let order = self.order + times;
        let mut chain = Vec::with_capacity(times + 2);
        chain.push(u);
        chain.extend(self.order..order);
        chain.push(v);
        let key = (u.min(v), u.max(v));
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != key)
            .chain(chain.windows(2).map(|w| (w[0], w[1])));
        let mut labels = self.labels.clone();
        labels.extend((0..times).map(|i| Some(label(i))));
        Ok(Graph::from_valid_edges(order, edges, labels))
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Iterates the set bits of a mask, lowest first.
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    BitIter(mask)
}

/// A set of vertex indices, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet::from_sorted(bits(mask).collect())
    }

    /// Bit mask of the members; `None` if any member is 64 or larger.
    pub fn mask(&self) -> Option<u64> {
        self.members
            .iter()
            .try_fold(0u64, |m, &v| (v < 64).then(|| m | 1 << v))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn complement(&self, order: usize) -> Self {
        VertexSet::from_sorted((0..order).filter(|&v| !self.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &VertexSet) -> Self {
        VertexSet::from_sorted(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// First common member, if any.
    pub fn first_common(&self, other: &VertexSet) -> Option<usize> {
        self.iter().find(|&v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Partition of the (remaining) vertices into maximal connected blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub blocks: Vec<VertexSet>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }
}

/// Number of components of the subgraph induced by `alive`, on mask rows.
pub(crate) fn count_components(rows: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let mut frontier = rest & rest.wrapping_neg();
        let mut block = frontier;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= rows[v];
            }
            next &= alive & !block;
            block |= next;
            frontier = next;
        }
        rest &= !block;
        count += 1;
    }
    count
}

/// Component masks of the subgraph induced by `alive`, ordered by least vertex.
pub(crate) fn component_masks(rows: &[u64], alive: u64) -> Vec<u64> {
    let mut rest = alive;
    let mut out = Vec::new();
    while rest != 0 {
        let mut frontier = rest & rest.wrapping_neg();
        let mut block = frontier;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= rows[v];
            }
            next &= alive & !block;
            block |= next;
            frontier = next;
        }
        rest &= !block;
        out.push(block);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_builds_path() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(Graph::from_edge_list(4, &[]).unwrap().size(), 0);
    }

    #[test]
    fn edge_list_dedups_and_rejects() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::Loop(0)));
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        ));
    }

    #[test]
    fn component_counts() {
        assert_eq!(Graph::path(3).component_count(), 1);
        assert_eq!(Graph::empty(4).component_count(), 4);
        let (rest, _) = Graph::path(3).delete(&VertexSet::new([1])).unwrap();
        assert_eq!(rest.component_count(), 2);
    }

    #[test]
    fn induced_and_delete() {
        let (e, map) = Graph::complete(4).induced(&VertexSet::new([1, 3])).unwrap();
        assert_eq!(e, Graph::path(2));
        assert_eq!(map, vec![1, 3]);
        let (p, _) = Graph::cycle(5).delete(&VertexSet::new([0])).unwrap();
        assert_eq!(p, Graph::path(4));
        let (z, _) = Graph::cycle(5).induced(&VertexSet::default()).unwrap();
        assert_eq!(z.order(), 0);
    }

    #[test]
    fn operators() {
        let g = Graph::complete(1).join(
            &Graph::complete(2)
                .complement()
                .disjoint_union(&Graph::complete(2)),
        );
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 1 + 4);
        let c = Graph::copies(3, &Graph::complete(3));
        assert_eq!((c.order(), c.size()), (9, 9));
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn matching_and_subdivision() {
        let one = Graph::path(2);
        assert_eq!(
            one.subdivide((0, 1), 1).unwrap(),
            Graph::from_edge_list(3, &[(0, 2), (2, 1)]).unwrap()
        );
        let p4 = one.subdivide((0, 1), 2).unwrap();
        assert_eq!(p4.size(), 3);
        assert_eq!(p4.degrees(), vec![1, 1, 2, 2]);
        assert_eq!(p4.label(3), Some("subdivision"));
        assert!(one.subdivide((1, 0), 0).unwrap() == one);
        assert_eq!(one.subdivide((0, 2), 1), Err(Error::EdgeAbsent(0, 2)));

        let base = Graph::complete(2)
            .complement()
            .disjoint_union(&Graph::complete(2));
        let m = base.add_matching(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!((m.order(), m.size()), (4, 3));
        assert_eq!(base.add_matching(&[(2, 3)]), Err(Error::EdgeExists(2, 3)));
        assert_eq!(
            base.add_matching(&[(0, 2), (0, 3)]),
            Err(Error::MatchingOverlap(0))
        );
    }

    #[test]
    fn wide_graph_adjacency() {
        let g = Graph::complete(70);
        assert!(g.has_edge(3, 69) && g.has_edge(69, 3));
        assert_eq!(g.degree(65), 69);
        assert!(g.mask_rows().is_err());
    }

    #[test]
    fn mask_components_match_traversal() {
        let g = Graph::petersen();
        let rows = g.mask_rows().unwrap();
        let removed = VertexSet::new([0, 2, 8]);
        let alive = !removed.mask().unwrap() & ((1 << 10) - 1);
        assert_eq!(
            count_components(&rows, alive),
            g.components_avoiding(&removed).count()
        );
        assert_eq!(
            component_masks(&rows, alive).len(),
            count_components(&rows, alive)
        );
    }
}
