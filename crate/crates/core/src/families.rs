//! Generators for the extremal constructions and their closed-form invariants.
//!
//! * `H(n)`: `K_n ∨ (K̄_{2n+1} ∪ K_{2n+1})` plus a perfect matching between the
//!   two halves. Order `5n + 2`.
//! * `R(m, a, b, c)`: `K_{cm} ∨ am·K_{bm}`.
//! * `Gprime(n, k)`: `(2n+1)K_3 ∪ K_{3(2n+1)}` with a perfect matching `M`
//!   between triangle vertices and clique vertices, each `M` edge subdivided
//!   once. `G(n, k) = K_n ∨ Gprime(n, k)`.
//! * `Gstar(n, k)`: as `Gprime` with every `M` edge subdivided twice.
//!   `Ghat(n, k) = K_n ∨ Gstar(n, k)`.
//!
//! The parameter `k` does not change the graphs of the last four families; it
//! only sets which connectivity and forbidden-pattern claims apply.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forbidden::ForestPattern;
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

pub const APEX: &str = "apex";
pub const INDEPENDENT: &str = "independent";
pub const CLIQUE: &str = "clique";
pub const BLOCK: &str = "block";
pub const TRIANGLE: &str = "triangle";
pub const SUBDIVISION: &str = "subdivision";
pub const NEAR_TRIANGLE: &str = "subdivision-near-triangle";
pub const NEAR_CLIQUE: &str = "subdivision-near-clique";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    H {
        n: usize,
    },
    R {
        m: usize,
        a: usize,
        b: usize,
        c: usize,
    },
    Gprime {
        n: usize,
        k: usize,
    },
    G {
        n: usize,
        k: usize,
    },
    Gstar {
        n: usize,
        k: usize,
    },
    Ghat {
        n: usize,
        k: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::InvalidParameters(format!("{self}: {why}")));
        match *self {
            FamilySpec::H { n } if n < 1 => bad("need n >= 1".into()),
            FamilySpec::R { m, a, b, c } if m.min(a).min(b).min(c) < 1 => {
                bad("need m, a, b, c >= 1".into())
            }
            FamilySpec::Gprime { n, k } | FamilySpec::G { n, k } if k < 1 || n < 1 || n + 1 < k => {
                bad("need positive n, k with n >= k - 1".into())
            }
            FamilySpec::Gstar { n, k } | FamilySpec::Ghat { n, k } if k < 1 || n < k => {
                bad("need n >= k >= 1".into())
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::H { .. } => "H",
            FamilySpec::R { .. } => "R",
            FamilySpec::Gprime { .. } => "Gprime",
            FamilySpec::G { .. } => "G",
            FamilySpec::Gstar { .. } => "Gstar",
            FamilySpec::Ghat { .. } => "Ghat",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::H { n } => write!(f, "H:n={n}"),
            FamilySpec::R { m, a, b, c } => write!(f, "R:m={m},a={a},b={b},c={c}"),
            FamilySpec::Gprime { n, k }
            | FamilySpec::G { n, k }
            | FamilySpec::Gstar { n, k }
            | FamilySpec::Ghat { n, k } => write!(f, "{}:n={n},k={k}", self.name()),
        }
    }
}

/// Parses `H:n=2`, `R:m=1,a=2,b=1,c=3`, `Ghat:n=1,k=1` and so on; validates.
impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("family spec {s:?}: {why}"));
        let (name, params) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| bad("expected NAME:key=value,..."))?;
        let mut values = BTreeMap::new();
        for kv in params.split(',').map(str::trim).filter(|kv| !kv.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| bad("parameter is not a non-negative integer"))?;
            if values.insert(k.trim().to_string(), v).is_some() {
                return Err(bad("repeated parameter"));
            }
        }
        let mut take = |key: &str| {
            values
                .remove(key)
                .ok_or_else(|| bad(&format!("missing {key}")))
        };
        let spec = match name.trim() {
            "H" => FamilySpec::H { n: take("n")? },
            "R" => FamilySpec::R {
                m: take("m")?,
                a: take("a")?,
                b: take("b")?,
                c: take("c")?,
            },
            "Gprime" => FamilySpec::Gprime {
                n: take("n")?,
                k: take("k")?,
            },
            "G" => FamilySpec::G {
                n: take("n")?,
                k: take("k")?,
            },
            "Gstar" => FamilySpec::Gstar {
                n: take("n")?,
                k: take("k")?,
            },
            "Ghat" => FamilySpec::Ghat {
                n: take("n")?,
                k: take("k")?,
            },
            _ => return Err(bad("unknown family")),
        };
        if let Some(extra) = values.keys().next() {
            return Err(bad(&format!("unexpected parameter {extra}")));
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// A family member with its distinguished vertex sets.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    #[serde(skip)]
    pub graph: Graph,
    /// Named vertex sets: labeled parts plus, where the construction has
    /// them, the barrier sides `A`, `B` and the cut `W`.
    pub sets: BTreeMap<String, VertexSet>,
    /// The perfect matching added before any subdivision, in final indices.
    pub matching: Vec<(usize, usize)>,
}

/// Builds the graph for `spec`.
pub fn build(spec: FamilySpec) -> Result<FamilyGraph> {
    spec.validate()?;
    match spec {
        FamilySpec::H { n } => Ok(build_h(spec, n)),
        FamilySpec::R { m, a, b, c } => Ok(build_r(spec, m, a, b, c)),
        FamilySpec::Gprime { n, .. } => build_matched(spec, n, 0, 1),
        FamilySpec::G { n, .. } => build_matched(spec, n, n, 1),
        FamilySpec::Gstar { n, .. } => build_matched(spec, n, 0, 2),
        FamilySpec::Ghat { n, .. } => build_matched(spec, n, n, 2),
    }
}

fn build_h(spec: FamilySpec, n: usize) -> FamilyGraph {
    let q = 2 * n + 1;
    let sides = Graph::empty(q)
        .with_label(INDEPENDENT)
        .disjoint_union(&Graph::complete(q).with_label(CLIQUE));
    let g = Graph::complete(n).with_label(APEX).join(&sides);
    let matching: Vec<(usize, usize)> = (0..q).map(|i| (n + i, n + q + i)).collect();
    let graph = g.add_matching(&matching).expect("halves are disjoint");
    let mut sets = labeled_sets(&graph, &[APEX, INDEPENDENT, CLIQUE]);
    // Removing the apex and all clique vertices but one strands 2n + 1 pieces.
    let last_clique = n + 2 * q - 1;
    let cut = sets[APEX]
        .union(&sets[CLIQUE])
        .difference(&VertexSet::new([last_clique]));
    sets.insert("W".into(), cut);
    FamilyGraph {
        spec,
        graph,
        sets,
        matching,
    }
}

fn build_r(spec: FamilySpec, m: usize, a: usize, b: usize, c: usize) -> FamilyGraph {
    let blocks = Graph::copies(a * m, &Graph::complete(b * m).with_label(BLOCK));
    let graph = Graph::complete(c * m).with_label(APEX).join(&blocks);
    let mut sets = labeled_sets(&graph, &[APEX, BLOCK]);
    sets.insert("W".into(), sets[APEX].clone());
    FamilyGraph {
        spec,
        graph,
        sets,
        matching: Vec::new(),
    }
}

/// `(2n+1)K_3 ∪ K_{3(2n+1)}`, matching subdivided `times` times, joined with
/// `K_apex` when `apex > 0`.
fn build_matched(spec: FamilySpec, n: usize, apex: usize, times: usize) -> Result<FamilyGraph> {
    let q = 2 * n + 1;
    let triangles = Graph::copies(q, &Graph::complete(3).with_label(TRIANGLE));
    let base = triangles.disjoint_union(&Graph::complete(3 * q).with_label(CLIQUE));
    let m0: Vec<(usize, usize)> = (0..3 * q).map(|j| (j, 3 * q + j)).collect();
    let mut inner = base.add_matching(&m0)?;
    for &e in &m0 {
        inner = if times == 1 {
            inner.subdivide(e, 1)?
        } else {
            inner.subdivide_labeled(e, times, |i| {
                if i == 0 {
                    NEAR_TRIANGLE
                } else if i + 1 == times {
                    NEAR_CLIQUE
                } else {
                    SUBDIVISION
                }
                .to_string()
            })?
        };
    }
    let graph = Graph::complete(apex).with_label(APEX).join(&inner);
    let tri = |j: usize| apex + j;
    let cli = |j: usize| apex + 3 * q + j;
    let matching: Vec<(usize, usize)> = (0..3 * q).map(|j| (tri(j), cli(j))).collect();
    let names: &[&str] = if times == 1 {
        &[APEX, TRIANGLE, CLIQUE, SUBDIVISION]
    } else {
        &[APEX, TRIANGLE, CLIQUE, NEAR_TRIANGLE, NEAR_CLIQUE]
    };
    let mut sets = labeled_sets(&graph, names);
    if apex == 0 {
        sets.remove(APEX);
        return Ok(FamilyGraph {
            spec,
            graph,
            sets,
            matching,
        });
    }
    // subdivision vertices of matching edge j, from the triangle end
    let first_sub = |j: usize| apex + 6 * q + j * times;
    let last_sub = |j: usize| first_sub(j) + times - 1;

    // One vertex per triangle, an independent set.
    let reps: VertexSet = (0..q).map(|i| tri(3 * i)).collect();
    let u1 = tri(0);
    let v = cli(0);
    let u = first_sub(0);
    debug_assert!(graph.has_edge(u1, u));
    let w = sets[APEX]
        .union(&sets[TRIANGLE].difference(&reps))
        .union(&sets[CLIQUE].difference(&VertexSet::new([v])))
        .union(&VertexSet::new([u]));
    sets.insert("W".into(), w);
    sets.insert("triangle_representatives".into(), reps);

    let b_side: VertexSet = (0..3 * q).map(last_sub).collect();
    if times == 2 {
        if b_side != sets[NEAR_CLIQUE] {
            return Err(Error::IdentityViolated(
                "clique-side subdivision labels disagree".into(),
            ));
        }
        let by_degree: VertexSet = (0..graph.order())
            .filter(|&x| {
                graph.degree(x) == n + 2 && graph.neighbors(x).any(|y| sets[CLIQUE].contains(y))
            })
            .collect();
        if by_degree != b_side {
            return Err(Error::IdentityViolated(
                "degree-(n+2) vertices next to the clique differ from the labeled B".into(),
            ));
        }
    }
    sets.insert("A".into(), sets[APEX].clone());
    sets.insert("B".into(), b_side);
    Ok(FamilyGraph {
        spec,
        graph,
        sets,
        matching,
    })
}

fn labeled_sets(g: &Graph, names: &[&str]) -> BTreeMap<String, VertexSet> {
    names
        .iter()
        .map(|&l| (l.to_string(), g.labeled(l)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimedBarrier {
    pub a: VertexSet,
    pub b: VertexSet,
    pub deficiency: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimedCut {
    pub w: VertexSet,
    pub components: usize,
    pub ratio: Rational,
}

/// Closed-form values for a family member; `None` means no value is claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedInvariants {
    pub order: usize,
    pub toughness: Option<Rational>,
    pub alpha: Option<usize>,
    pub min_degree: Option<usize>,
    pub has_two_factor: Option<bool>,
    /// Lower bound on vertex connectivity.
    pub min_connectivity: Option<usize>,
    pub claimed_barrier: Option<ClaimedBarrier>,
    pub claimed_cut: Option<ClaimedCut>,
    pub claimed_patterns: Vec<ForestPattern>,
}

fn r(p: usize, q: usize) -> Rational {
    Rational::new(p as i64, q as i64)
}

/// Vertex count from the construction's parameters alone.
pub fn expected_order(spec: FamilySpec) -> usize {
    match spec {
        FamilySpec::H { n } => 5 * n + 2,
        FamilySpec::R { m, a, b, c } => c * m + a * b * m * m,
        FamilySpec::Gprime { n, .. } => 9 * (2 * n + 1),
        FamilySpec::G { n, .. } => n + 9 * (2 * n + 1),
        FamilySpec::Gstar { n, .. } => 12 * (2 * n + 1),
        FamilySpec::Ghat { n, .. } => n + 12 * (2 * n + 1),
    }
}

/// `2 − (n + 3)/(3(2n + 1) + 1)`.
pub fn matched_family_toughness(n: usize) -> Rational {
    Rational::int(2) - r(n + 3, 3 * (2 * n + 1) + 1)
}

/// The closed-form invariants of `spec`. Cut and barrier sets are taken from
/// [`build`].
pub fn expected(spec: FamilySpec) -> Result<ExpectedInvariants> {
    let fam = build(spec)?;
    let order = expected_order(spec);
    let mut e = ExpectedInvariants {
        order,
        toughness: None,
        alpha: None,
        min_degree: None,
        has_two_factor: None,
        min_connectivity: None,
        claimed_barrier: None,
        claimed_cut: None,
        claimed_patterns: Vec::new(),
    };
    match spec {
        FamilySpec::H { n } => {
            let tau = r(3 * n, 2 * n + 1);
            e.toughness = Some(tau);
            e.alpha = Some(2 * n + 1);
            e.min_degree = Some(n + 1);
            e.has_two_factor = Some(false);
            // largest k + l - 1 permitted by n >= k + l - 2
            e.min_connectivity = Some(n + 1);
            e.claimed_cut = Some(ClaimedCut {
                w: fam.sets["W"].clone(),
                components: 2 * n + 1,
                ratio: tau,
            });
            e.claimed_patterns = vec![
                ForestPattern::path_plus_isolated(2, n + 1),
                ForestPattern::path_plus_isolated(4, n),
                ForestPattern::path_plus_isolated(3, n),
            ];
        }
        FamilySpec::R { m, a, b, c } => {
            e.toughness = Some(if a * m == 1 {
                Rational::Infinite
            } else {
                r(c, a)
            });
            e.alpha = Some(a * m);
            e.min_degree = Some((b + c) * m - 1);
            if a * m >= 2 {
                e.claimed_cut = Some(ClaimedCut {
                    w: fam.sets["W"].clone(),
                    components: a * m,
                    ratio: r(c, a),
                });
            }
        }
        FamilySpec::Gprime { .. } | FamilySpec::Gstar { .. } => {}
        FamilySpec::G { n, k } | FamilySpec::Ghat { n, k } => {
            let ghat = matches!(spec, FamilySpec::Ghat { .. });
            let tau = matched_family_toughness(n);
            e.toughness = Some(tau);
            e.has_two_factor = Some(false);
            e.min_connectivity = Some(if ghat { k + 2 } else { k + 1 });
            e.claimed_cut = Some(ClaimedCut {
                w: fam.sets["W"].clone(),
                components: 3 * (2 * n + 1) + 1,
                ratio: tau,
            });
            if ghat {
                e.claimed_barrier = Some(ClaimedBarrier {
                    a: fam.sets["A"].clone(),
                    b: fam.sets["B"].clone(),
                    deficiency: -2,
                });
                e.claimed_patterns = vec![
                    ForestPattern::path_plus_isolated(7, k),
                    ForestPattern::path_plus_isolated(6, k),
                ];
            } else {
                e.claimed_patterns = vec![ForestPattern::path_plus_isolated(5, k)];
            }
        }
    }
    Ok(e)
}

/// Exact comparison for `R(m, a, b, c)` between the `δ >= (2 − τ)α` condition
/// and the `δ >= (3τ − 2 − τ²)n / (7τ − 7 − τ²)` condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub m_bound: Rational,
    pub order: usize,
    pub min_degree: usize,
    pub alpha: usize,
    pub toughness: Rational,
    /// `δ > (2 − τ)α`.
    pub independence_condition_holds: bool,
    /// `δ < (3τ − 2 − τ²)n / (7τ − 7 − τ²)`.
    pub degree_condition_fails: bool,
}

/// `5(7ac − 7a² − c²) / (2(3ac − 2a² − c²))`, the least admissible `m`.
pub fn gap_m_bound(a: usize, c: usize) -> Rational {
    let (a, c) = (a as i64, c as i64);
    Rational::new(
        5 * (7 * a * c - 7 * a * a - c * c),
        2 * (3 * a * c - 2 * a * a - c * c),
    )
}

pub fn degree_gap_check(m: usize, a: usize, b: usize, c: usize) -> Result<GapReport> {
    if m.min(a).min(b).min(c) < 1 {
        return Err(Error::Precondition("m, a, b, c must be positive".into()));
    }
    if 2 * c < 3 * a || c >= 2 * a {
        return Err(Error::Precondition(format!(
            "need 3a/2 <= c < 2a, got a = {a}, c = {c}"
        )));
    }
    let m_bound = gap_m_bound(a, c);
    if Rational::from(m) < m_bound {
        return Err(Error::Precondition(format!(
            "m = {m} below bound {m_bound}"
        )));
    }
    let order = a * b * m * m + c * m;
    let min_degree = (b + c) * m - 1;
    let alpha = a * m;
    let tau = r(c, a);
    let two = Rational::int(2);
    let independence_condition_holds =
        Rational::from(min_degree) > (two - tau) * Rational::from(alpha);
    let t2 = tau * tau;
    let numer = Rational::int(3) * tau - two - t2;
    let denom = Rational::int(7) * tau - Rational::int(7) - t2;
    let threshold = numer / denom * Rational::from(order);
    Ok(GapReport {
        m_bound,
        order,
        min_degree,
        alpha,
        toughness: tau,
        independence_condition_holds,
        degree_condition_fails: Rational::from(min_degree) < threshold,
    })
}
