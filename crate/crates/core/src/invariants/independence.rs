use serde::Serialize;

use crate::error::Result;
use crate::graph::{bits, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Independence {
    pub size: usize,
    pub witness: VertexSet,
}

/// α(G) with a maximum independent set, by include/exclude branching on a
/// maximum-degree vertex. Vertices of degree at most one in the remaining
/// candidate set are taken greedily, which never loses optimality.
pub fn independence_number(g: &Graph) -> Result<Independence> {
    let rows = g.mask_rows()?;
    let all = full_mask(g.order());
    let mut best = greedy(&rows, all);
    branch(&rows, all, 0, &mut best);
    Ok(Independence {
        size: best.count_ones() as usize,
        witness: VertexSet::from_mask(best),
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn greedy(rows: &[u64], mut cand: u64) -> u64 {
    let mut chosen = 0;
    while cand != 0 {
        let v = bits(cand)
            .min_by_key(|&v| (rows[v] & cand).count_ones())
            .unwrap();
        chosen |= 1 << v;
        cand &= !(rows[v] | 1 << v);
    }
    chosen
}

fn branch(rows: &[u64], mut cand: u64, mut chosen: u64, best: &mut u64) {
    loop {
        if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        if cand == 0 {
            *best = chosen;
            return;
        }
        let mut pick = None;
        let mut max_v = 0;
        let mut max_d = 0;
        for v in bits(cand) {
            let d = (rows[v] & cand).count_ones();
            if d <= 1 {
                pick = Some(v);
                break;
            }
            if d > max_d {
                max_d = d;
                max_v = v;
            }
        }
        match pick {
            Some(v) => {
                chosen |= 1 << v;
                cand &= !(rows[v] | 1 << v);
            }
            None => {
                branch(
                    rows,
                    cand & !(rows[max_v] | 1 << max_v),
                    chosen | 1 << max_v,
                    best,
                );
                cand &= !(1 << max_v);
            }
        }
    }
}
