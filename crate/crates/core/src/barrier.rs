//! Tutte pairs for 2-factors.
//!
//! For disjoint `A`, `B` the deficiency is
//! `2|A| − 2|B| + Σ_{v∈B} d_{G−A}(v) − o(A, B)`, where `o(A, B)` counts the
//! components `H` of `G − (A ∪ B)` sending an odd number of edges to `B`.
//! A graph has no 2-factor exactly when some pair has deficiency at most −2.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, component_masks, Graph, VertexSet};
use crate::invariants::{is_t_tough, TOUGHNESS_CAP};
use crate::rational::Rational;

/// Largest order accepted by the exhaustive `(A, B)` searches (3^n pairs).
pub const BARRIER_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Barrier {
    pub a: VertexSet,
    pub b: VertexSet,
    pub deficiency: i64,
}

impl Barrier {
    /// Validates `(a, b)` as a barrier of `g`.
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Self> {
        let deficiency = deficiency(g, &a, &b)?;
        if deficiency > -2 {
            return Err(Error::NotABarrier(deficiency));
        }
        Ok(Barrier { a, b, deficiency })
    }
}

fn check_pair(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    for v in a.iter().chain(b.iter()) {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    match a.first_common(b) {
        Some(v) => Err(Error::Overlap(v)),
        None => Ok(()),
    }
}

/// δ(A, B).
pub fn deficiency(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<i64> {
    check_pair(g, a, b)?;
    let removed = a.union(b);
    let outside_a: usize = b
        .iter()
        .map(|v| g.neighbors(v).filter(|&w| !a.contains(w)).count())
        .sum();
    let odd = g
        .components_avoiding(&removed)
        .blocks
        .iter()
        .filter(|h| edges_between(g, h, b) % 2 == 1)
        .count();
    Ok(2 * a.len() as i64 - 2 * b.len() as i64 + outside_a as i64 - odd as i64)
}

fn edges_between(g: &Graph, h: &VertexSet, b: &VertexSet) -> usize {
    h.iter()
        .map(|v| g.neighbors(v).filter(|&w| b.contains(w)).count())
        .sum()
}

/// A component of `G − (A ∪ B)` with its edge count to `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub vertices: VertexSet,
    pub edges_to_b: usize,
    pub odd: bool,
}

/// Per-vertex bookkeeping for `u ∈ B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BVertexInfo {
    pub vertex: usize,
    pub degree_outside_a: usize,
    /// `(component index, e(u, H))` for every component with `e(u, H) > 0`.
    pub component_edges: Vec<(usize, usize)>,
    /// Components with odd `e(H, B) >= 3` and `e(u, H) = 1`.
    pub o: usize,
    /// Components with odd `e(H, B) >= 1` and `e(u, H) = 1`.
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarrierDecomposition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub components: Vec<ComponentInfo>,
    /// `s ↦` indices of components with `e(H, B) = s`.
    pub classes: BTreeMap<usize, Vec<usize>>,
    pub odd_count: usize,
    pub per_b: Vec<BVertexInfo>,
    pub deficiency: i64,
}

impl BarrierDecomposition {
    /// Σ_{t≥1} t·|C_{2t+1}|.
    pub fn weighted_odd_sum(&self) -> usize {
        self.classes
            .iter()
            .filter(|(&s, _)| s >= 3 && s % 2 == 1)
            .map(|(&s, hs)| (s - 1) / 2 * hs.len())
            .sum()
    }

    /// Whether some component has odd `e(H, B) >= 3`.
    pub fn has_large_odd(&self) -> bool {
        self.classes.keys().any(|&s| s >= 3 && s % 2 == 1)
    }

    pub fn class(&self, s: usize) -> &[usize] {
        self.classes.get(&s).map_or(&[], Vec::as_slice)
    }
}

/// Annotates every component of `G − (A ∪ B)` and every vertex of `B`.
pub fn decompose(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<BarrierDecomposition> {
    check_pair(g, a, b)?;
    let partition = g.components_avoiding(&a.union(b));
    let components: Vec<ComponentInfo> = partition
        .blocks
        .into_iter()
        .map(|vertices| {
            let edges_to_b = edges_between(g, &vertices, b);
            ComponentInfo {
                vertices,
                edges_to_b,
                odd: edges_to_b % 2 == 1,
            }
        })
        .collect();
    let mut component_of = vec![usize::MAX; g.order()];
    for (i, c) in components.iter().enumerate() {
        for v in c.vertices.iter() {
            component_of[v] = i;
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in components.iter().enumerate() {
        classes.entry(c.edges_to_b).or_default().push(i);
    }
    let odd_count = components.iter().filter(|c| c.odd).count();
    let per_b: Vec<BVertexInfo> = b
        .iter()
        .map(|u| {
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for w in g.neighbors(u) {
                if component_of[w] != usize::MAX {
                    *counts.entry(component_of[w]).or_default() += 1;
                }
            }
            let single = |min_s: usize| {
                counts
                    .iter()
                    .filter(|&(&i, &e)| {
                        let s = components[i].edges_to_b;
                        e == 1 && s % 2 == 1 && s >= min_s
                    })
                    .count()
            };
            BVertexInfo {
                vertex: u,
                degree_outside_a: g.neighbors(u).filter(|&w| !a.contains(w)).count(),
                o: single(3),
                h: single(1),
                component_edges: counts.into_iter().collect(),
            }
        })
        .collect();
    let outside_a: usize = per_b.iter().map(|x| x.degree_outside_a).sum();
    let deficiency = 2 * a.len() as i64 - 2 * b.len() as i64 + outside_a as i64 - odd_count as i64;
    Ok(BarrierDecomposition {
        a: a.clone(),
        b: b.clone(),
        components,
        classes,
        odd_count,
        per_b,
        deficiency,
    })
}

/// Deficiency on mask rows, for the exhaustive searches.
fn mask_deficiency(rows: &[u64], all: u64, a: u64, b: u64) -> i64 {
    let outside_a: u32 = bits(b).map(|v| (rows[v] & !a).count_ones()).sum();
    let odd = component_masks(rows, all & !(a | b))
        .into_iter()
        .filter(|&h| bits(h).map(|v| (rows[v] & b).count_ones()).sum::<u32>() % 2 == 1)
        .count();
    2 * a.count_ones() as i64 - 2 * b.count_ones() as i64 + outside_a as i64 - odd as i64
}

fn search_masks(g: &Graph) -> Result<(Vec<u64>, u64)> {
    if g.order() > BARRIER_CAP {
        return Err(Error::OverCap {
            what: "exhaustive barrier search",
            order: g.order(),
            cap: BARRIER_CAP,
        });
    }
    Ok((g.mask_rows()?, (1u64 << g.order()) - 1))
}

/// Some barrier of `g`, searching all 3^n disjoint pairs; `None` exactly when
/// `g` has a 2-factor.
pub fn find_barrier(g: &Graph) -> Result<Option<Barrier>> {
    let (rows, all) = search_masks(g)?;
    for a in 0..=all {
        let rest = all & !a;
        let mut b = rest;
        loop {
            let d = mask_deficiency(&rows, all, a, b);
            if d <= -2 {
                return Ok(Some(Barrier {
                    a: VertexSet::from_mask(a),
                    b: VertexSet::from_mask(b),
                    deficiency: d,
                }));
            }
            if b == 0 {
                break;
            }
            b = (b - 1) & rest;
        }
    }
    Ok(None)
}

/// The barrier with `|A|` maximum, then `|B|` minimum, then `(A, B)` least as
/// sorted index lists. Searches the full space of disjoint pairs.
pub fn find_biased_barrier(g: &Graph) -> Result<Option<Barrier>> {
    let (rows, all) = search_masks(g)?;
    let n = g.order();
    for size_a in (0..=n).rev() {
        let mut best: Option<(usize, Vec<usize>, Vec<usize>, i64)> = None;
        for a in crate::invariants::k_subsets(n, size_a) {
            let rest = all & !a;
            let limit = best.as_ref().map_or(n - size_a, |b| b.0);
            for size_b in 0..=limit {
                let mut found = None;
                for b in sub_k_subsets(rest, size_b) {
                    let d = mask_deficiency(&rows, all, a, b);
                    if d <= -2 {
                        let ka: Vec<usize> = bits(a).collect();
                        let kb: Vec<usize> = bits(b).collect();
                        let better = match &found {
                            None => true,
                            Some((fa, fb, _)) => (&ka, &kb) < (fa, fb),
                        };
                        if better {
                            found = Some((ka, kb, d));
                        }
                    }
                }
                if let Some((ka, kb, d)) = found {
                    let replace = match &best {
                        None => true,
                        Some((bs, ba, bb, _)) => {
                            size_b < *bs || (size_b == *bs && (&ka, &kb) < (ba, bb))
                        }
                    };
                    if replace {
                        best = Some((size_b, ka, kb, d));
                    }
                    break;
                }
            }
        }
        if let Some((_, a, b, d)) = best {
            return Ok(Some(Barrier {
                a: VertexSet::new(a),
                b: VertexSet::new(b),
                deficiency: d,
            }));
        }
    }
    Ok(None)
}

/// `k`-element submasks of `set`, in increasing numeric order of the
/// positions they select.
fn sub_k_subsets(set: u64, k: usize) -> impl Iterator<Item = u64> {
    let positions: Vec<usize> = bits(set).collect();
    let m = positions.len();
    crate::invariants::k_subsets(m, k)
        .map(move |sel| bits(sel).fold(0u64, |acc, i| acc | 1 << positions[i]))
}

/// Structural properties every biased barrier satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiasedReport {
    /// `B` is independent.
    pub b_independent: bool,
    /// Every even component sends no edge to `B`.
    pub even_components_detached: bool,
    /// `e(v, H) <= 1` for `v ∈ B` and odd `H`.
    pub b_single_edge_to_odd: bool,
    /// `e(v, B) <= 1` for `v` in an odd component.
    pub odd_single_edge_to_b: bool,
    /// `|B| >= |A| + Σ_{t≥1} t|C_{2t+1}| + 1`.
    pub counting_inequality: bool,
    /// Some component has odd `e(H, B) >= 3`; `None` when the graph is not
    /// 1-tough on at least three vertices (or too large to tell).
    pub large_odd_component: Option<bool>,
}

impl BiasedReport {
    pub fn all_hold(&self) -> bool {
        self.b_independent
            && self.even_components_detached
            && self.b_single_edge_to_odd
            && self.odd_single_edge_to_b
            && self.counting_inequality
            && self.large_odd_component != Some(false)
    }
}

/// Evaluates the biased-barrier properties for `barrier`.
pub fn check_biased_properties(g: &Graph, barrier: &Barrier) -> Result<BiasedReport> {
    let d = decompose(g, &barrier.a, &barrier.b)?;
    if d.deficiency > -2 {
        return Err(Error::NotABarrier(d.deficiency));
    }
    Ok(structural_report(g, &d, lemma_applies(g)))
}

fn lemma_applies(g: &Graph) -> Option<()> {
    if g.order() < 3 || g.order() > TOUGHNESS_CAP {
        return None;
    }
    is_t_tough(g, Rational::int(1))
        .ok()
        .filter(|&t| t)
        .map(|_| ())
}

fn structural_report(g: &Graph, d: &BarrierDecomposition, tough: Option<()>) -> BiasedReport {
    let b = &d.b;
    let b_independent = b.iter().all(|u| b.iter().all(|v| !g.has_edge(u, v)));
    let even_components_detached = d.components.iter().all(|c| c.odd || c.edges_to_b == 0);
    let b_single_edge_to_odd = d.per_b.iter().all(|x| {
        x.component_edges
            .iter()
            .all(|&(i, e)| !d.components[i].odd || e <= 1)
    });
    let odd_single_edge_to_b = d.components.iter().filter(|c| c.odd).all(|c| {
        c.vertices
            .iter()
            .all(|v| g.neighbors(v).filter(|&w| b.contains(w)).count() <= 1)
    });
    let counting_inequality = d.b.len() > d.a.len() + d.weighted_odd_sum();
    BiasedReport {
        b_independent,
        even_components_detached,
        b_single_edge_to_odd,
        odd_single_edge_to_b,
        counting_inequality,
        large_odd_component: tough.map(|_| d.has_large_odd()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessCase {
    /// Every `u ∈ B` has `h(u) <= 1`.
    SingleAttachment,
    /// Some `u ∈ B` has `h(u) >= 2`; the peeling sequence is used.
    Peeling,
}

/// One peeling round: `u` receives the `r` components it attaches to singly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    pub u: usize,
    pub r: usize,
    pub components: Vec<usize>,
}

/// Cut set built from a biased barrier, with the counts the construction
/// promises.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutSetWitness {
    pub w: VertexSet,
    pub case: WitnessCase,
    /// Rounds with `max h >= 1`.
    pub ell: usize,
    /// Rounds with `max h >= 2`.
    pub ell_prime: usize,
    /// Σ of `r` over the first `ell_prime` rounds.
    pub h_sum: usize,
    pub steps: Vec<PeelStep>,
    /// Length of the graph sequence including the final one with `max h = 0`.
    pub sequence_length: usize,
    pub sequence_within_b: bool,
    pub components: usize,
    pub ratio: Rational,
}

/// Builds the cut set `W` from a barrier and its decomposition.
///
/// With `max h(u) <= 1`, `W` is `A` plus, for every component in `C_s` with
/// odd `s >= 3`, its `s − 1` lowest-indexed vertices having a neighbor in `B`.
/// Otherwise components are peeled off round by round: pick the lowest `u ∈ B`
/// maximizing `h` on what remains, put into `W` every vertex of the peeled
/// components with one `B`-neighbor that is not adjacent to `u`, and `u`
/// itself while rounds still peel two or more components.
///
/// Requires the structural properties of biased barriers (independent `B`,
/// detached even components, single edges between `B` and odd components);
/// both counting identities are rechecked before returning.
pub fn extract_witness(
    g: &Graph,
    barrier: &Barrier,
    d: &BarrierDecomposition,
) -> Result<CutSetWitness> {
    if d.a != barrier.a || d.b != barrier.b {
        return Err(Error::Precondition(
            "decomposition does not belong to the barrier".into(),
        ));
    }
    if d.deficiency > -2 {
        return Err(Error::NotABarrier(d.deficiency));
    }
    let report = structural_report(g, d, None);
    if !(report.b_independent
        && report.even_components_detached
        && report.b_single_edge_to_odd
        && report.odd_single_edge_to_b)
    {
        return Err(Error::Precondition(format!(
            "barrier lacks biased-barrier structure: {report:?}"
        )));
    }
    let b = &d.b;
    let has_b_neighbor = |v: usize| g.neighbors(v).any(|w| b.contains(w));
    let max_h = d.per_b.iter().map(|x| x.h).max().unwrap_or(0);
    let mut w: Vec<usize> = d.a.iter().collect();
    let (case, ell, ell_prime, h_sum, steps) = if max_h <= 1 {
        for c in d.components.iter().filter(|c| c.odd && c.edges_to_b >= 3) {
            w.extend(
                c.vertices
                    .iter()
                    .filter(|&v| has_b_neighbor(v))
                    .take(c.edges_to_b - 1),
            );
        }
        (WitnessCase::SingleAttachment, 0, 0, 0, Vec::new())
    } else {
        let mut remaining: Vec<bool> = d.components.iter().map(|c| c.odd).collect();
        let mut steps: Vec<PeelStep> = Vec::new();
        loop {
            let attached = |x: &BVertexInfo, remaining: &[bool]| -> Vec<usize> {
                x.component_edges
                    .iter()
                    .filter(|&&(i, e)| remaining[i] && e == 1)
                    .map(|&(i, _)| i)
                    .collect()
            };
            // lowest index wins ties: per_b is sorted by vertex
            let mut pick: Option<(&BVertexInfo, Vec<usize>)> = None;
            for x in &d.per_b {
                let hs = attached(x, &remaining);
                if pick.as_ref().is_none_or(|(_, best)| hs.len() > best.len()) {
                    pick = Some((x, hs));
                }
            }
            let Some((x, hs)) = pick.filter(|(_, hs)| !hs.is_empty()) else {
                break;
            };
            if let Some(prev) = steps.last() {
                if hs.len() > prev.r {
                    return Err(Error::IdentityViolated("peeling rounds grew".into()));
                }
            }
            let u = x.vertex;
            for &i in &hs {
                remaining[i] = false;
                w.extend(d.components[i].vertices.iter().filter(|&v| {
                    g.neighbors(v).filter(|&y| b.contains(y)).count() == 1 && !g.has_edge(u, v)
                }));
            }
            steps.push(PeelStep {
                u,
                r: hs.len(),
                components: hs,
            });
        }
        let ell = steps.len();
        let peeled_multi: Vec<&PeelStep> = steps.iter().filter(|s| s.r >= 2).collect();
        let ell_prime = peeled_multi.len();
        let h_sum = peeled_multi.iter().map(|s| s.r).sum();
        w.extend(peeled_multi.iter().map(|s| s.u));
        if remaining.iter().any(|&r| r) {
            return Err(Error::IdentityViolated(
                "odd component left unpeeled".into(),
            ));
        }
        (WitnessCase::Peeling, ell, ell_prime, h_sum, steps)
    };
    let w = VertexSet::new(w);
    let components = g.components_avoiding(&w).count();

    let expected_size = d.a.len() + ell_prime + 2 * d.weighted_odd_sum();
    if w.len() != expected_size {
        return Err(Error::IdentityViolated(format!(
            "|W| = {} but |A| + ell' + sum 2t|C_(2t+1)| = {expected_size}",
            w.len()
        )));
    }
    let bound = b.len() + h_sum - ell_prime;
    if components < bound {
        return Err(Error::IdentityViolated(format!(
            "c(G - W) = {components} < |B| - ell' + sum h = {bound}"
        )));
    }
    if components < 2 {
        return Err(Error::IdentityViolated("W is not a cut set".into()));
    }
    let sequence_length = ell + 1;
    Ok(CutSetWitness {
        ratio: Rational::new(w.len() as i64, components as i64),
        w,
        case,
        ell,
        ell_prime,
        h_sum,
        steps,
        sequence_length,
        sequence_within_b: sequence_length <= b.len(),
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.iter().copied())
    }

    #[test]
    fn deficiency_examples() {
        let p3 = Graph::path(3);
        assert_eq!(deficiency(&p3, &set(&[]), &set(&[1])), Ok(-2));
        assert_eq!(deficiency(&Graph::petersen(), &set(&[]), &set(&[])), Ok(0));
        assert_eq!(
            deficiency(&p3, &set(&[1]), &set(&[1])),
            Err(Error::Overlap(1))
        );
    }

    #[test]
    fn decomposition_of_p3() {
        let d = decompose(&Graph::path(3), &set(&[]), &set(&[1])).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.class(1), &[0, 1]);
        assert_eq!(d.odd_count, 2);
        assert_eq!(d.per_b[0].h, 2);
        assert_eq!(d.per_b[0].o, 0);
        assert_eq!(d.deficiency, -2);
    }

    #[test]
    fn cycle_six_antipodal() {
        // C_6 minus {0, 3} leaves paths {1,2} and {4,5}, each with two edges to B.
        let d = decompose(&Graph::cycle(6), &set(&[]), &set(&[0, 3])).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d.components.iter().all(|c| c.edges_to_b == 2 && !c.odd));
        assert_eq!(d.deficiency, 0);
    }

    #[test]
    fn searches_on_small_graphs() {
        assert_eq!(find_barrier(&Graph::cycle(5)).unwrap(), None);
        assert_eq!(find_biased_barrier(&Graph::cycle(4)).unwrap(), None);
        let b = find_barrier(&Graph::path(3)).unwrap().unwrap();
        assert!(b.deficiency <= -2);
        assert!(find_barrier(&Graph::cycle(BARRIER_CAP + 1)).is_err());
    }

    #[test]
    fn biased_barrier_of_p3() {
        // ({1}, {0, 2}) has deficiency 2 - 4 + 0 - 0 = -2; no pair with |A| = 2 is a barrier.
        let b = find_biased_barrier(&Graph::path(3)).unwrap().unwrap();
        let brute = brute_biased(&Graph::path(3));
        assert_eq!((b.a.clone(), b.b.clone()), brute);
        assert_eq!((b.a.as_slice(), b.b.as_slice()), (&[1][..], &[0, 2][..]));
        let r = check_biased_properties(&Graph::path(3), &b).unwrap();
        assert!(r.b_independent && r.counting_inequality);
        assert_eq!(r.large_odd_component, None);
    }

    /// Independent oracle: scan every 3-coloring and keep the best by the
    /// biased order.
    fn brute_biased(g: &Graph) -> (VertexSet, VertexSet) {
        let n = g.order();
        let mut best: Option<(VertexSet, VertexSet)> = None;
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let (mut a, mut b, mut c) = (vec![], vec![], code);
            for v in 0..n {
                match c % 3 {
                    1 => a.push(v),
                    2 => b.push(v),
                    _ => {}
                }
                c /= 3;
            }
            let (a, b) = (VertexSet::new(a), VertexSet::new(b));
            if deficiency(g, &a, &b).unwrap() > -2 {
                continue;
            }
            let better = match &best {
                None => true,
                Some((ba, bb)) => {
                    (
                        std::cmp::Reverse(a.len()),
                        b.len(),
                        a.as_slice(),
                        b.as_slice(),
                    ) < (
                        std::cmp::Reverse(ba.len()),
                        bb.len(),
                        ba.as_slice(),
                        bb.as_slice(),
                    )
                }
            };
            if better {
                best = Some((a, b));
            }
        }
        best.unwrap()
    }

    #[test]
    fn biased_matches_oracle_on_k23_and_bowtie() {
        let bowtie =
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        for g in [
            Graph::complete_bipartite(2, 3),
            bowtie,
            Graph::complete_bipartite(1, 3),
        ] {
            let b = find_biased_barrier(&g).unwrap().unwrap();
            assert_eq!((b.a, b.b), brute_biased(&g));
        }
    }

    #[test]
    fn star_peeling_identities() {
        let g = Graph::complete_bipartite(1, 3);
        let barrier = Barrier::new(&g, set(&[]), set(&[0])).unwrap();
        let d = decompose(&g, &barrier.a, &barrier.b).unwrap();
        let w = extract_witness(&g, &barrier, &d).unwrap();
        assert_eq!(w.case, WitnessCase::Peeling);
        assert_eq!((w.ell, w.ell_prime, w.h_sum), (1, 1, 3));
        assert_eq!(w.w, set(&[0]));
        assert_eq!(w.components, 3);
        assert_eq!(w.ratio, Rational::new(1, 3));
        assert!(!w.sequence_within_b);
    }

    #[test]
    fn witness_rejects_non_barrier_and_mismatch() {
        let g = Graph::cycle(4);
        assert!(matches!(
            Barrier::new(&g, set(&[]), set(&[0])),
            Err(Error::NotABarrier(_))
        ));
        let p3 = Graph::path(3);
        let barrier = Barrier::new(&p3, set(&[]), set(&[1])).unwrap();
        let other = decompose(&p3, &set(&[0]), &set(&[])).unwrap();
        assert!(extract_witness(&p3, &barrier, &other).is_err());
    }
}
