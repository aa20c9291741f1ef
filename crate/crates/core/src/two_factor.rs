//! 2-factor existence via the Tutte gadget and maximum matching.
//!
//! Each host vertex `v` of degree `d` becomes `d` slot vertices, one per
//! incident edge, and `d − 2` core vertices joined completely to the slots.
//! Each host edge `uv` links the slot of `u` for `uv` with the slot of `v` for
//! `uv`. In a perfect matching the cores absorb all but two slots of every
//! vertex, and the two remaining slots are matched along host edges, so the
//! matched link edges form a 2-factor and every 2-factor arises this way.

use serde::Serialize;

use crate::barrier::{find_barrier, Barrier, BARRIER_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{max_matching, Matching};

/// Spanning 2-regular edge subset of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoFactor {
    pub edges: Vec<(usize, usize)>,
}

impl TwoFactor {
    /// Cycles of the factor as vertex sequences, each starting at its least vertex.
    pub fn cycles(&self, order: usize) -> Vec<Vec<usize>> {
        let mut nbrs = vec![Vec::with_capacity(2); order];
        for &(u, v) in &self.edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        let mut seen = vec![false; order];
        let mut out = Vec::new();
        for start in 0..order {
            if seen[start] || nbrs[start].is_empty() {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let (mut prev, mut cur) = (start, nbrs[start][0]);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                let next = if nbrs[cur][0] == prev {
                    nbrs[cur][1]
                } else {
                    nbrs[cur][0]
                };
                prev = cur;
                cur = next;
            }
            out.push(cycle);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetRole {
    /// Slot for the host edge with this index in `Graph::edges()`.
    Slot {
        edge: usize,
    },
    Core,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetVertex {
    pub host: usize,
    pub role: GadgetRole,
}

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub graph: Graph,
    /// `links[i]` is the gadget edge standing for host edge `i`.
    pub links: Vec<(usize, usize)>,
    pub vertex_origin: Vec<GadgetVertex>,
}

impl GadgetGraph {
    /// Host edges whose link edge is in `m`.
    pub fn host_edges(&self, host: &Graph, m: &Matching) -> Vec<(usize, usize)> {
        self.links
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| m.mate(a) == Some(b))
            .map(|(i, _)| host.edges()[i])
            .collect()
    }
}

/// The gadget for `f ≡ 2`. Every vertex needs degree at least 2.
pub fn build_gadget(g: &Graph) -> Result<GadgetGraph> {
    for v in 0..g.order() {
        let degree = g.degree(v);
        if degree < 2 {
            return Err(Error::DegreeTooSmall { vertex: v, degree });
        }
    }
    let mut origin = Vec::new();
    // slot[v] lists (edge index, gadget vertex).
    let mut slots: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.order()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        for x in [u, v] {
            slots[x].push((i, origin.len()));
            origin.push(GadgetVertex {
                host: x,
                role: GadgetRole::Slot { edge: i },
            });
        }
    }
    let mut edges = Vec::new();
    let mut links = Vec::with_capacity(g.size());
    for (i, _) in g.edges().iter().enumerate() {
        // slots were pushed in pairs: u's slot then v's slot
        links.push((2 * i, 2 * i + 1));
        edges.push((2 * i, 2 * i + 1));
    }
    for (v, vslots) in slots.iter().enumerate() {
        for _ in 0..vslots.len() - 2 {
            let core = origin.len();
            origin.push(GadgetVertex {
                host: v,
                role: GadgetRole::Core,
            });
            edges.extend(vslots.iter().map(|&(_, s)| (s, core)));
        }
    }
    let order = origin.len();
    Ok(GadgetGraph {
        graph: Graph::from_valid_edges(order, edges, vec![None; order]),
        links,
        vertex_origin: origin,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum TwoFactorOutcome {
    Found(TwoFactor),
    /// No 2-factor; a barrier certificate is attached when the order is within
    /// the exhaustive barrier search cap.
    None {
        barrier: Option<Barrier>,
    },
}

impl TwoFactorOutcome {
    pub fn exists(&self) -> bool {
        matches!(self, TwoFactorOutcome::Found(_))
    }

    pub fn factor(&self) -> Option<&TwoFactor> {
        match self {
            TwoFactorOutcome::Found(f) => Some(f),
            TwoFactorOutcome::None { .. } => None,
        }
    }
}

/// Decides 2-factor existence without the barrier certificate.
pub fn two_factor(g: &Graph) -> Option<TwoFactor> {
    if (0..g.order()).any(|v| g.degree(v) < 2) {
        return None;
    }
    let gadget = build_gadget(g).expect("degrees checked");
    let m = max_matching(&gadget.graph);
    m.is_perfect().then(|| TwoFactor {
        edges: gadget.host_edges(g, &m),
    })
}

/// Decides 2-factor existence; on failure attaches a barrier when
/// `g.order() <= BARRIER_CAP`.
pub fn find_two_factor(g: &Graph) -> TwoFactorOutcome {
    match two_factor(g) {
        Some(f) => TwoFactorOutcome::Found(f),
        None => {
            let barrier = if g.order() <= BARRIER_CAP {
                find_barrier(g).ok().flatten()
            } else {
                None
            };
            TwoFactorOutcome::None { barrier }
        }
    }
}

/// Whether `f` is a spanning 2-regular subgraph of `g`.
pub fn verify_two_factor(g: &Graph, f: &TwoFactor) -> Result<bool> {
    let mut degree = vec![0usize; g.order()];
    let mut edges: Vec<(usize, usize)> =
        f.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    edges.dedup();
    for &(u, v) in &edges {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    Ok(edges.len() == f.edges.len() && degree.iter().all(|&d| d == 2))
}

/// Largest order the exhaustive 2-factor search accepts.
pub const BRUTE_FORCE_CAP: usize = 12;

/// Exhaustive search: vertices are completed in index order, each choosing
/// its missing edges among later vertices that still need degree.
pub fn brute_force_two_factor(g: &Graph) -> Result<Option<TwoFactor>> {
    if g.order() > BRUTE_FORCE_CAP {
        return Err(Error::OverCap {
            what: "brute-force 2-factor",
            order: g.order(),
            cap: BRUTE_FORCE_CAP,
        });
    }
    let mut need = vec![2u8; g.order()];
    let mut chosen = Vec::new();
    let found = complete_from(g, 0, &mut need, &mut chosen);
    Ok(found.then_some(TwoFactor { edges: chosen }))
}

fn complete_from(g: &Graph, v: usize, need: &mut [u8], chosen: &mut Vec<(usize, usize)>) -> bool {
    if v == g.order() {
        return true;
    }
    let later: Vec<usize> = g.neighbors(v).filter(|&w| w > v && need[w] > 0).collect();
    match need[v] {
        0 => complete_from(g, v + 1, need, chosen),
        1 => {
            for &w in &later {
                need[w] -= 1;
                chosen.push((v, w));
                if complete_from(g, v + 1, need, chosen) {
                    return true;
                }
                chosen.pop();
                need[w] += 1;
            }
            false
        }
        _ => {
            for (i, &a) in later.iter().enumerate() {
                for &b in &later[i + 1..] {
                    need[a] -= 1;
                    need[b] -= 1;
                    chosen.push((v, a));
                    chosen.push((v, b));
                    if complete_from(g, v + 1, need, chosen) {
                        return true;
                    }
                    chosen.truncate(chosen.len() - 2);
                    need[a] += 1;
                    need[b] += 1;
                }
            }
            false
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadget_sizes() {
        assert_eq!(build_gadget(&Graph::cycle(4)).unwrap().graph.order(), 8);
        assert_eq!(build_gadget(&Graph::cycle(3)).unwrap().graph.order(), 6);
        assert!(matches!(
            build_gadget(&Graph::path(3)),
            Err(Error::DegreeTooSmall {
                vertex: 0,
                degree: 1
            })
        ));
        let k5 = Graph::complete(5);
        let gadget = build_gadget(&k5).unwrap();
        assert_eq!(gadget.graph.order(), 4 * 10 - 2 * 5);
        assert_eq!(gadget.links.len(), 10);
        assert_eq!(gadget.graph.size(), 10 + 5 * 4 * 2);
    }

    #[test]
    fn cycle_is_own_factor() {
        for n in 3..9 {
            let g = Graph::cycle(n);
            let f = find_two_factor(&g);
            let f = f.factor().unwrap();
            assert_eq!(f.edges.len(), n);
            assert!(verify_two_factor(&g, f).unwrap());
            assert_eq!(f.cycles(n).len(), 1);
        }
    }

    #[test]
    fn verification() {
        let c5 = Graph::cycle(5);
        assert!(verify_two_factor(
            &c5,
            &TwoFactor {
                edges: c5.edges().to_vec()
            }
        )
        .unwrap());
        let k4 = Graph::complete(4);
        let triangle = TwoFactor {
            edges: vec![(0, 1), (1, 2), (0, 2)],
        };
        assert!(!verify_two_factor(&k4, &triangle).unwrap());
        let ham = TwoFactor {
            edges: vec![(0, 1), (1, 2), (2, 3), (0, 3)],
        };
        assert!(verify_two_factor(&k4, &ham).unwrap());
        let bogus = TwoFactor {
            edges: vec![(0, 2)],
        };
        assert!(verify_two_factor(&Graph::path(3), &bogus).is_err());
    }

    #[test]
    fn brute_force_examples() {
        let k4 = Graph::complete(4);
        let f = brute_force_two_factor(&k4).unwrap().unwrap();
        assert!(verify_two_factor(&k4, &f).unwrap());
        assert_eq!(brute_force_two_factor(&Graph::path(4)).unwrap(), None);
        assert_eq!(
            brute_force_two_factor(&Graph::complete_bipartite(2, 3)).unwrap(),
            None
        );
        assert!(brute_force_two_factor(&Graph::cycle(13)).is_err());
    }

    #[test]
    fn no_factor_with_certificate() {
        let g = Graph::complete_bipartite(2, 3);
        match find_two_factor(&g) {
            TwoFactorOutcome::None { barrier: Some(b) } => assert!(b.deficiency <= -2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(!find_two_factor(&Graph::path(2)).exists());
    }

    #[test]
    fn two_triangles_sharing_vertex() {
        // bowtie: only 2-regular spanning option is impossible (center degree 4)
        let g =
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(!find_two_factor(&g).exists());
        assert_eq!(brute_force_two_factor(&g).unwrap(), None);
    }
}
