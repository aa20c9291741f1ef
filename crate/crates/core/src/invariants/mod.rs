//! Hypothesis-side invariants: minimum degree, independence number,
//! vertex connectivity and toughness, all computed exactly.

mod connectivity;
mod independence;
mod toughness;

pub use connectivity::{connectivity, local_connectivity};
pub use independence::{independence_number, Independence};
pub use toughness::{
    cut_ratio, is_t_tough, toughness, ToughnessResult, ToughnessWitness, TOUGHNESS_CAP,
};

pub(crate) use toughness::KSubsets;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// δ(G).
pub fn min_degree(g: &Graph) -> Result<usize> {
    (0..g.order())
        .map(|v| g.degree(v))
        .min()
        .ok_or(Error::EmptyGraph)
}

/// `k`-element subsets of `0..n` as masks.
pub(crate) fn k_subsets(n: usize, k: usize) -> KSubsets {
    KSubsets::new(n, k)
}
