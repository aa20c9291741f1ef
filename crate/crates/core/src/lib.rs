//! Exact toughness, Tutte barriers, 2-factors, induced linear forests and the
//! extremal graph families around them, for graphs small enough to search.

pub mod barrier;
pub mod error;
pub mod families;
pub mod forbidden;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod matching;
pub mod rational;
pub mod two_factor;
pub mod verifier;

pub use barrier::{Barrier, BarrierDecomposition, CutSetWitness};
pub use error::{Error, Result};
pub use families::{FamilyGraph, FamilySpec};
pub use forbidden::{Embedding, ForestPattern};
pub use graph::{Graph, VertexSet};
pub use rational::Rational;
pub use two_factor::{TwoFactor, TwoFactorOutcome};
pub use verifier::{CheckReport, TheoremId, TheoremSpec, Verdict};
