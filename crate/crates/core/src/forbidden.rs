//! Linear-forest patterns and induced containment.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::invariants::k_subsets;

/// A disjoint union of paths on `paths[i]` vertices (each at least 2) and
/// `isolated` single vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForestPattern {
    paths: Vec<usize>,
    isolated: usize,
}

impl ForestPattern {
    /// Paths of order 1 fold into the isolated count; order-0 entries vanish.
    pub fn new(paths: impl IntoIterator<Item = usize>, isolated: usize) -> Self {
        let mut isolated = isolated;
        let mut long = Vec::new();
        for p in paths {
            match p {
                0 => {}
                1 => isolated += 1,
                _ => long.push(p),
            }
        }
        long.sort_unstable_by(|a, b| b.cmp(a));
        ForestPattern {
            paths: long,
            isolated,
        }
    }

    /// `P_m ∪ kP_1`.
    pub fn path_plus_isolated(m: usize, k: usize) -> Self {
        ForestPattern::new([m], k)
    }

    /// Path orders (at least 2), longest first.
    pub fn paths(&self) -> &[usize] {
        &self.paths
    }

    pub fn isolated(&self) -> usize {
        self.isolated
    }

    pub fn order(&self) -> usize {
        self.paths.iter().sum::<usize>() + self.isolated
    }

    /// The pattern as a graph: paths in order, then the isolated vertices.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::empty(0);
        for &p in &self.paths {
            g = g.disjoint_union(&Graph::path(p));
        }
        g.disjoint_union(&Graph::empty(self.isolated))
    }
}

impl fmt::Display for ForestPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.paths.len() {
            let p = self.paths[i];
            let run = self.paths[i..].iter().take_while(|&&q| q == p).count();
            parts.push(if run == 1 {
                format!("P{p}")
            } else {
                format!("{run}P{p}")
            });
            i += run;
        }
        match self.isolated {
            0 => {}
            1 => parts.push("P1".into()),
            k => parts.push(format!("{k}P1")),
        }
        if parts.is_empty() {
            f.write_str("0P1")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// Parses sums like `P5+2P1` or `2P2`.
impl FromStr for ForestPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut paths = Vec::new();
        let bad = |term: &str| Error::Parse(format!("bad pattern term {term:?} in {s:?}"));
        for term in s.split('+').map(str::trim) {
            let (count, order) = term.split_once(['P', 'p']).ok_or_else(|| bad(term))?;
            let count: usize = if count.is_empty() {
                1
            } else {
                count.parse().map_err(|_| bad(term))?
            };
            let order: usize = order.parse().map_err(|_| bad(term))?;
            if order == 0 {
                return Err(bad(term));
            }
            paths.extend(std::iter::repeat_n(order, count));
        }
        Ok(ForestPattern::new(paths, 0))
    }
}

impl Serialize for ForestPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Injective map from pattern vertices (numbered as in
/// [`ForestPattern::graph`]) to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Rechecks the induced condition against both graphs.
    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        let n = pattern.order();
        if self.map.len() != n {
            return false;
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] == self.map[j]
                    || pattern.has_edge(i, j) != host.has_edge(self.map[i], self.map[j])
                {
                    return false;
                }
            }
        }
        true
    }
}

/// An induced copy of `p` in `host`, if any.
///
/// Paths are placed longest first, vertex by vertex: the next vertex must be
/// adjacent to the previous one and to nothing else placed so far. A path's
/// first image is below its last, and equal-length paths start at increasing
/// images. Isolated vertices come last as an increasing independent set
/// avoiding every placed vertex and its neighbors.
pub fn find_induced(host: &Graph, p: &ForestPattern) -> Result<Option<Embedding>> {
    let rows = host.mask_rows()?;
    if p.order() > host.order() {
        return Ok(None);
    }
    let mut search = Search {
        rows: &rows,
        all: if host.order() == 64 {
            u64::MAX
        } else {
            (1u64 << host.order()) - 1
        },
        pattern: p,
        map: Vec::with_capacity(p.order()),
    };
    let found = search.path(0, 0, 0);
    Ok(found.then_some(Embedding { map: search.map }))
}

pub fn is_free(host: &Graph, p: &ForestPattern) -> Result<bool> {
    Ok(find_induced(host, p)?.is_none())
}

struct Search<'a> {
    rows: &'a [u64],
    all: u64,
    pattern: &'a ForestPattern,
    map: Vec<usize>,
}

impl Search<'_> {
    /// Starts path component `c`; `closed` holds placed vertices and their neighbors.
    fn path(&mut self, c: usize, closed: u64, min_start: usize) -> bool {
        if c == self.pattern.paths.len() {
            return self.isolated(self.pattern.isolated, self.all & !closed);
        }
        let free = self.all & !closed;
        let remaining: usize =
            self.pattern.paths[c..].iter().sum::<usize>() + self.pattern.isolated;
        if (free.count_ones() as usize) < remaining {
            return false;
        }
        let len = self.pattern.paths[c];
        let start_floor = free & u64::MAX.checked_shl(min_start as u32).unwrap_or(0);
        for x in bits(start_floor) {
            self.map.push(x);
            if self.extend(c, len - 1, x, closed, x) {
                return true;
            }
            self.map.pop();
        }
        false
    }

    /// Grows the current path from `last`, `left` vertices still to place.
    /// `blocked` excludes everything adjacent to or equal to a placed vertex
    /// other than `last`.
    fn extend(&mut self, c: usize, left: usize, last: usize, blocked: u64, first: usize) -> bool {
        if left == 0 {
            if self.pattern.paths[c] >= 2 && first > last {
                return false;
            }
            let closed = blocked | 1 << last | self.rows[last];
            let same_next = self.pattern.paths.get(c + 1) == Some(&self.pattern.paths[c]);
            let floor = if same_next { first + 1 } else { 0 };
            return self.path(c + 1, closed, floor);
        }
        let cand = self.rows[last] & !blocked & !(1u64 << last);
        let next_blocked = blocked | 1 << last | self.rows[last];
        for y in bits(cand) {
            self.map.push(y);
            if self.extend(c, left - 1, y, next_blocked, first) {
                return true;
            }
            self.map.pop();
        }
        false
    }

    fn isolated(&mut self, k: usize, cand: u64) -> bool {
        if k == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < k {
            return false;
        }
        for v in bits(cand) {
            self.map.push(v);
            let above = u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0);
            let rest = cand & !self.rows[v] & above;
            if self.isolated(k - 1, rest) {
                return true;
            }
            self.map.pop();
        }
        false
    }
}

/// Exhaustive check over all vertex subsets of the pattern's order: a subset
/// matches when its induced subgraph is a linear forest with the pattern's
/// component orders.
pub fn brute_force_contains(host: &Graph, p: &ForestPattern) -> Result<bool> {
    let n = host.order();
    if n > 20 {
        return Err(Error::OverCap {
            what: "brute-force induced search",
            order: n,
            cap: 20,
        });
    }
    let mut want: Vec<usize> = p
        .paths
        .iter()
        .copied()
        .chain(std::iter::repeat_n(1, p.isolated))
        .collect();
    want.sort_unstable();
    let rows = host.mask_rows()?;
    for s in k_subsets(n, p.order()) {
        let mut orders = Vec::new();
        let mut linear = true;
        for comp in crate::graph::component_masks(&rows, s) {
            let verts = comp.count_ones() as usize;
            let degs: Vec<u32> = bits(comp).map(|v| (rows[v] & comp).count_ones()).collect();
            let edges: u32 = degs.iter().sum::<u32>() / 2;
            if degs.iter().any(|&d| d > 2) || edges as usize != verts - 1 {
                linear = false;
                break;
            }
            orders.push(verts);
        }
        orders.sort_unstable();
        if linear && orders == want {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> ForestPattern {
        s.parse().unwrap()
    }

    #[test]
    fn pattern_graphs() {
        let g = ForestPattern::new([4], 1).graph();
        assert_eq!((g.order(), g.size()), (5, 3));
        let g = ForestPattern::new([], 3).graph();
        assert_eq!((g.order(), g.size()), (3, 0));
        let g = ForestPattern::new([2, 2], 0).graph();
        assert_eq!((g.order(), g.size(), g.component_count()), (4, 2, 2));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(pat("P4+2P1"), ForestPattern::new([4], 2));
        assert_eq!(pat("2P2"), ForestPattern::new([2, 2], 0));
        assert_eq!(pat("P1+P6"), ForestPattern::new([6], 1));
        assert_eq!(pat("P5+2P1").to_string(), "P5+2P1");
        assert_eq!(pat("2P3+P3+P1").to_string(), "3P3+P1");
        assert!("Q4".parse::<ForestPattern>().is_err());
        assert!("P0".parse::<ForestPattern>().is_err());
        assert!("P4+".parse::<ForestPattern>().is_err());
    }

    #[test]
    fn containment_examples() {
        let c5 = Graph::cycle(5);
        let p4 = pat("P4");
        let e = find_induced(&c5, &p4).unwrap().unwrap();
        assert!(e.is_induced(&c5, &p4.graph()));
        assert_eq!(
            find_induced(&Graph::complete(4), &pat("2P1")).unwrap(),
            None
        );
        assert!(is_free(&Graph::complete(4), &pat("P3")).unwrap());
        assert!(!is_free(&Graph::cycle(6), &pat("2P2")).unwrap());
        assert!(is_free(&Graph::cycle(4), &pat("P4")).unwrap());
    }

    #[test]
    fn agrees_with_brute_force_on_petersen() {
        let g = Graph::petersen();
        for s in [
            "P2+3P1", "P4+P1", "P5+P1", "P6", "2P3", "P3+2P1", "4P1", "5P1", "P7", "P9",
        ] {
            let p = pat(s);
            let fast = find_induced(&g, &p).unwrap();
            if let Some(e) = &fast {
                assert!(e.is_induced(&g, &p.graph()), "{s}");
            }
            assert_eq!(fast.is_some(), brute_force_contains(&g, &p).unwrap(), "{s}");
        }
    }

    #[test]
    fn pattern_larger_than_host() {
        assert_eq!(find_induced(&Graph::path(3), &pat("P4")).unwrap(), None);
        assert!(find_induced(&Graph::path(3), &ForestPattern::new([], 0))
            .unwrap()
            .is_some());
    }
}
