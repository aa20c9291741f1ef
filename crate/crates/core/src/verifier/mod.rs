//! Theorem registry and exact hypothesis checking.
//!
//! Every statement has the shape "hypotheses imply a 2-factor". Hypotheses
//! are evaluated cheapest first and stop at the first failing clause; the
//! conclusion is always evaluated so that vacuous cases still report it.

mod family;
mod hunt;
mod lemma;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::forbidden::{find_induced, ForestPattern};
use crate::graph::Graph;
use crate::invariants::{connectivity, independence_number, min_degree, toughness};
use crate::io::{encode_graph6, GRAPH6_MAX_ORDER};
use crate::rational::Rational;
use crate::two_factor::two_factor;

pub use family::{verify_family, ClaimCheck, FamilyReport};
pub use hunt::{hunt, hunt_graphs, self_test, HuntReport, MalformedLine};
pub use lemma::{
    check_lemma_inequality, inequality_property, random_lemma_tuple, InequalityReport, LemmaTuple,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Thm1i,
    Thm1ii,
    Thm2,
    Thm3i,
    Thm3ii,
    Thm4i,
    Thm4ii,
    Ejks2,
    Niessen,
    /// "Every 1-tough graph on at least three vertices has a 2-factor".
    /// False; kept so a hunt can prove it finds counterexamples.
    FalseOneTough,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Thm1i,
        TheoremId::Thm1ii,
        TheoremId::Thm2,
        TheoremId::Thm3i,
        TheoremId::Thm3ii,
        TheoremId::Thm4i,
        TheoremId::Thm4ii,
        TheoremId::Ejks2,
        TheoremId::Niessen,
        TheoremId::FalseOneTough,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm1i => "THM1i",
            TheoremId::Thm1ii => "THM1ii",
            TheoremId::Thm2 => "THM2",
            TheoremId::Thm3i => "THM3i",
            TheoremId::Thm3ii => "THM3ii",
            TheoremId::Thm4i => "THM4i",
            TheoremId::Thm4ii => "THM4ii",
            TheoremId::Ejks2 => "EJKS2",
            TheoremId::Niessen => "NIESSEN",
            TheoremId::FalseOneTough => "FALSE1TOUGH",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown theorem {s:?}")))
    }
}

/// Raw parameters as given on a command line; unused ones are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub t: Option<Rational>,
    pub eps: Option<Rational>,
    pub k: Option<usize>,
    pub l: Option<usize>,
}

/// A registry statement with validated parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremSpec {
    pub id: TheoremId,
    clauses: Vec<Clause>,
    label: String,
}

/// One hypothesis clause. Each maps to a single invariant or pattern search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Clause {
    AtLeastThreeVertices,
    /// `δ >= coefficient · n`.
    DegreeFraction(Rational),
    Free(ForestPattern),
    /// More than `k` vertices and `κ >= k`.
    Connected(usize),
    /// `δ >= ε α`.
    DegreeVsIndependence(Rational),
    /// `δ > α`.
    DegreeExceedsIndependence,
    Tough(Rational),
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::AtLeastThreeVertices => f.write_str("n >= 3"),
            Clause::DegreeFraction(c) => write!(f, "delta >= ({c})n"),
            Clause::Free(p) => write!(f, "{p}-free"),
            Clause::Connected(k) => write!(f, "{k}-connected"),
            Clause::DegreeVsIndependence(e) => write!(f, "delta >= ({e})alpha"),
            Clause::DegreeExceedsIndependence => f.write_str("delta > alpha"),
            Clause::Tough(t) => write!(f, "{t}-tough"),
        }
    }
}

impl Serialize for Clause {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn need<T>(v: Option<T>, id: TheoremId, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameters(format!("{id} needs {what}")))
}

impl TheoremSpec {
    pub fn new(id: TheoremId, p: &Params) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidParameters(format!("{id}: {why}")));
        let one = Rational::int(1);
        let two = Rational::int(2);
        let three_halves = Rational::new(3, 2);
        let mut clauses = vec![Clause::AtLeastThreeVertices];
        let label = match id {
            TheoremId::Thm1i | TheoremId::Thm1ii => {
                let t = need(p.t, id, "t")?;
                if t.is_infinite() || t < one || t >= two {
                    return bad("need 1 <= t < 2");
                }
                let coefficient = if id == TheoremId::Thm1i {
                    (two - t) / (one + t)
                } else {
                    if t < three_halves {
                        return bad("need 3/2 <= t < 2");
                    }
                    let t2 = t * t;
                    let denom = Rational::int(7) * t - Rational::int(7) - t2;
                    if !denom.is_positive() {
                        return bad("degenerate threshold denominator");
                    }
                    (Rational::int(3) * t - two - t2) / denom
                };
                clauses.push(Clause::DegreeFraction(coefficient));
                clauses.push(Clause::Tough(t));
                format!("{id}(t={t})")
            }
            TheoremId::Thm2 => {
                let eps = need(p.eps, id, "eps")?;
                if eps.is_infinite() || !eps.is_positive() || eps > one {
                    return bad("need 0 < eps <= 1");
                }
                clauses.push(Clause::DegreeVsIndependence(eps));
                clauses.push(Clause::Tough(two - eps));
                format!("{id}(eps={eps})")
            }
            TheoremId::Thm3i | TheoremId::Thm4i => {
                let k = need(p.k, id, "k")?;
                let l = need(p.l, id, "l")?;
                let (allowed, path, t) = if id == TheoremId::Thm3i {
                    ([1, 2], 2 * l, one)
                } else {
                    ([2, 3], 2 * l + 1, three_halves)
                };
                if k < 1 || !allowed.contains(&l) {
                    return bad(&format!("need k >= 1 and l in {allowed:?}"));
                }
                clauses.push(Clause::Free(ForestPattern::path_plus_isolated(path, k)));
                clauses.push(Clause::Connected(k + l - 1));
                clauses.push(Clause::Tough(t));
                format!("{id}(k={k},l={l})")
            }
            TheoremId::Thm3ii | TheoremId::Thm4ii => {
                let k = need(p.k, id, "k")?;
                if k < 1 {
                    return bad("need k >= 1");
                }
                let (path, conn, t) = if id == TheoremId::Thm3ii {
                    (3, k + 1, one)
                } else {
                    (6, k + 2, three_halves)
                };
                clauses.push(Clause::Free(ForestPattern::path_plus_isolated(path, k)));
                clauses.push(Clause::Connected(conn));
                clauses.push(Clause::Tough(t));
                format!("{id}(k={k})")
            }
            TheoremId::Ejks2 => {
                clauses.push(Clause::Tough(two));
                id.to_string()
            }
            TheoremId::Niessen => {
                clauses.push(Clause::DegreeExceedsIndependence);
                id.to_string()
            }
            TheoremId::FalseOneTough => {
                clauses.push(Clause::Tough(one));
                id.to_string()
            }
        };
        Ok(TheoremSpec { id, clauses, label })
    }

    /// Hypothesis clauses in evaluation order.
    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }
}

impl fmt::Display for TheoremSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl Serialize for TheoremSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Invariants of one graph, each computed on first use.
pub struct GraphFacts<'a> {
    g: &'a Graph,
    min_degree: Option<usize>,
    alpha: Option<usize>,
    kappa: Option<usize>,
    tau: Option<Rational>,
    two_factor: Option<bool>,
    contains: HashMap<ForestPattern, bool>,
}

impl<'a> GraphFacts<'a> {
    pub fn new(g: &'a Graph) -> Self {
        GraphFacts {
            g,
            min_degree: None,
            alpha: None,
            kappa: None,
            tau: None,
            two_factor: None,
            contains: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &'a Graph {
        self.g
    }

    pub fn min_degree(&mut self) -> Result<usize> {
        if self.min_degree.is_none() {
            self.min_degree = Some(min_degree(self.g)?);
        }
        Ok(self.min_degree.unwrap())
    }

    pub fn alpha(&mut self) -> Result<usize> {
        if self.alpha.is_none() {
            self.alpha = Some(independence_number(self.g)?.size);
        }
        Ok(self.alpha.unwrap())
    }

    pub fn connectivity(&mut self) -> usize {
        *self.kappa.get_or_insert_with(|| connectivity(self.g))
    }

    pub fn toughness(&mut self) -> Result<Rational> {
        if self.tau.is_none() {
            self.tau = Some(toughness(self.g)?.value);
        }
        Ok(self.tau.unwrap())
    }

    pub fn has_two_factor(&mut self) -> bool {
        *self
            .two_factor
            .get_or_insert_with(|| two_factor(self.g).is_some())
    }

    pub fn contains(&mut self, p: &ForestPattern) -> Result<bool> {
        if let Some(&c) = self.contains.get(p) {
            return Ok(c);
        }
        let c = find_induced(self.g, p)?.is_some();
        self.contains.insert(p.clone(), c);
        Ok(c)
    }

    pub fn clause(&mut self, c: &Clause) -> Result<bool> {
        let n = self.g.order();
        Ok(match c {
            Clause::AtLeastThreeVertices => n >= 3,
            Clause::DegreeFraction(coefficient) => {
                Rational::from(self.min_degree()?) >= *coefficient * Rational::from(n)
            }
            Clause::Free(p) => !self.contains(p)?,
            Clause::Connected(k) => n > *k && self.connectivity() >= *k,
            Clause::DegreeVsIndependence(eps) => {
                Rational::from(self.min_degree()?) >= *eps * Rational::from(self.alpha()?)
            }
            Clause::DegreeExceedsIndependence => self.min_degree()? > self.alpha()?,
            Clause::Tough(t) => self.toughness()? >= *t,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirms,
    Vacuous,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseResult {
    pub clause: Clause,
    /// `None` when an earlier clause already failed.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// graph6 string, or `order-N` past the graph6 limit.
    pub graph: String,
    pub theorem: TheoremSpec,
    pub hypotheses_hold: bool,
    pub clauses: Vec<ClauseResult>,
    pub conclusion_holds: bool,
    pub verdict: Verdict,
}

pub fn graph_id(g: &Graph) -> String {
    if g.order() <= GRAPH6_MAX_ORDER {
        encode_graph6(g).expect("order within graph6 range")
    } else {
        format!("order-{}", g.order())
    }
}

pub fn check_theorem(spec: &TheoremSpec, g: &Graph) -> Result<CheckReport> {
    check_with_facts(spec, &mut GraphFacts::new(g))
}

pub fn check_with_facts(spec: &TheoremSpec, facts: &mut GraphFacts<'_>) -> Result<CheckReport> {
    let mut clauses = Vec::with_capacity(spec.clauses.len());
    let mut hypotheses_hold = true;
    for c in &spec.clauses {
        let holds = if hypotheses_hold {
            let h = facts.clause(c)?;
            hypotheses_hold = h;
            Some(h)
        } else {
            None
        };
        clauses.push(ClauseResult {
            clause: c.clone(),
            holds,
        });
    }
    let conclusion_holds = facts.has_two_factor();
    let verdict = match (hypotheses_hold, conclusion_holds) {
        (false, _) => Verdict::Vacuous,
        (true, true) => Verdict::Confirms,
        (true, false) => Verdict::Counterexample,
    };
    Ok(CheckReport {
        graph: graph_id(facts.graph()),
        theorem: spec.clone(),
        hypotheses_hold,
        clauses,
        conclusion_holds,
        verdict,
    })
}
