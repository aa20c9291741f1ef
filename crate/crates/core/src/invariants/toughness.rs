use serde::Serialize;

use super::independence::full_mask;
use crate::error::{Error, Result};
use crate::graph::{count_components, Graph, VertexSet};
use crate::rational::Rational;

/// Largest non-complete order accepted by the exhaustive toughness search.
pub const TOUGHNESS_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ToughnessWitness {
    /// A cut set attaining the minimum ratio. For a disconnected graph this
    /// is the empty set and the value is 0.
    Cut(VertexSet),
    CompleteGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessResult {
    pub value: Rational,
    pub witness: ToughnessWitness,
}

/// `|W| / c(G − W)` when `W` leaves at least two components.
pub fn cut_ratio(g: &Graph, w: &VertexSet) -> Option<Rational> {
    let c = g.components_avoiding(w).count();
    (c >= 2).then(|| Rational::new(w.len() as i64, c as i64))
}

/// Exact τ(G) by enumerating cut sets in order of size.
///
/// Sets of size `k` can only produce ratios of at least `k / (n − k)`, so the
/// sweep stops at the first size whose bound reaches the best ratio found.
pub fn toughness(g: &Graph) -> Result<ToughnessResult> {
    let n = g.order();
    if g.is_complete() {
        return Ok(ToughnessResult {
            value: Rational::Infinite,
            witness: ToughnessWitness::CompleteGraph,
        });
    }
    if !g.is_connected() {
        return Ok(ToughnessResult {
            value: Rational::zero(),
            witness: ToughnessWitness::Cut(VertexSet::default()),
        });
    }
    if n > TOUGHNESS_CAP {
        return Err(Error::OverCap {
            what: "exact toughness",
            order: n,
            cap: TOUGHNESS_CAP,
        });
    }
    let rows = g.mask_rows()?;
    let all = full_mask(n);
    // (|S|, c) of the best cut so far.
    let mut best: Option<(usize, usize, u64)> = None;
    for k in 1..n - 1 {
        if let Some((bs, bc, _)) = best {
            // k / (n - k) >= bs / bc
            if k * bc >= bs * (n - k) {
                break;
            }
        }
        for s in KSubsets::new(n, k) {
            let c = count_components(&rows, all & !s);
            if c < 2 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bs, bc, _)) => k * bc < bs * c,
            };
            if better {
                best = Some((k, c, s));
            }
        }
    }
    let (k, c, s) = best.expect("connected non-complete graph has a cut set");
    Ok(ToughnessResult {
        value: Rational::new(k as i64, c as i64),
        witness: ToughnessWitness::Cut(VertexSet::from_mask(s)),
    })
}

/// Whether τ(G) ≥ `t`, stopping at the first cut that certifies otherwise.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<bool> {
    if !t.is_positive() || t.is_infinite() {
        return Err(Error::Precondition(format!(
            "toughness threshold must be finite and positive, got {t}"
        )));
    }
    let n = g.order();
    if g.is_complete() {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    if n > TOUGHNESS_CAP {
        return Err(Error::OverCap {
            what: "exact toughness",
            order: n,
            cap: TOUGHNESS_CAP,
        });
    }
    let (tp, tq) = (t.numer().unwrap() as usize, t.denom().unwrap() as usize);
    let rows = g.mask_rows()?;
    let all = full_mask(n);
    for k in 1..n - 1 {
        // every size-k set has ratio >= k/(n-k) >= t
        if k * tq >= tp * (n - k) {
            break;
        }
        for s in KSubsets::new(n, k) {
            let c = count_components(&rows, all & !s);
            // k / c < t
            if c >= 2 && k * tq < tp * c {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All `k`-element subsets of `0..n` as masks, by Gosper's hack.
pub(crate) struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl KSubsets {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        assert!(n < 64);
        let next = (k <= n).then(|| (1u64 << k) - 1);
        KSubsets {
            next,
            limit: 1u64 << n,
        }
    }
}

impl Iterator for KSubsets {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    }
}
