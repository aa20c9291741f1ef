use rayon::prelude::*;
use serde::Serialize;

use super::{check_with_facts, GraphFacts, Params, TheoremId, TheoremSpec, Verdict};
use crate::error::Result;
use crate::families::{build, FamilySpec};
use crate::graph::Graph;
use crate::io::{decode_graph6, encode_graph6};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MalformedLine {
    /// 1-based line number in the corpus.
    pub line: usize,
    pub text: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntReport {
    pub theorem: TheoremSpec,
    /// Non-blank corpus lines.
    pub total: usize,
    pub confirms: usize,
    pub vacuous: usize,
    /// graph6 strings, sorted.
    pub counterexamples: Vec<String>,
    /// Lines that failed to decode, or whose graph was beyond an invariant cap.
    pub malformed: Vec<MalformedLine>,
}

impl HuntReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks every graph6 line of a corpus against every statement in `specs`.
/// Blank lines and lines starting with `#` are skipped. Graphs are checked in
/// parallel; facts are shared between statements for the same graph.
pub fn hunt<I, S>(lines: I, specs: &[TheoremSpec]) -> Vec<HuntReport>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let entries: Vec<(usize, String)> = lines
        .into_iter()
        .enumerate()
        .map(|(i, l)| (i + 1, l.as_ref().trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let outcomes: Vec<Vec<std::result::Result<Verdict, String>>> = entries
        .par_iter()
        .map(|(_, text)| match decode_graph6(text) {
            Ok(g) => check_all(&g, specs),
            Err(e) => vec![Err(e.to_string()); specs.len()],
        })
        .collect();

    let mut reports: Vec<HuntReport> = specs
        .iter()
        .map(|s| HuntReport {
            theorem: s.clone(),
            total: entries.len(),
            confirms: 0,
            vacuous: 0,
            counterexamples: Vec::new(),
            malformed: Vec::new(),
        })
        .collect();
    for ((line, text), per_spec) in entries.iter().zip(outcomes) {
        for (report, outcome) in reports.iter_mut().zip(per_spec) {
            match outcome {
                Ok(Verdict::Confirms) => report.confirms += 1,
                Ok(Verdict::Vacuous) => report.vacuous += 1,
                Ok(Verdict::Counterexample) => report.counterexamples.push(text.clone()),
                Err(error) => report.malformed.push(MalformedLine {
                    line: *line,
                    text: text.clone(),
                    error,
                }),
            }
        }
    }
    for r in &mut reports {
        r.counterexamples.sort();
    }
    reports
}

fn check_all(g: &Graph, specs: &[TheoremSpec]) -> Vec<std::result::Result<Verdict, String>> {
    let mut facts = GraphFacts::new(g);
    specs
        .iter()
        .map(|s| {
            check_with_facts(s, &mut facts)
                .map(|r| r.verdict)
                .map_err(|e| e.to_string())
        })
        .collect()
}

/// [`hunt`] over in-memory graphs, encoded to graph6 first.
pub fn hunt_graphs(graphs: &[Graph], specs: &[TheoremSpec]) -> Result<Vec<HuntReport>> {
    let lines = graphs
        .iter()
        .map(encode_graph6)
        .collect::<Result<Vec<_>>>()?;
    Ok(hunt(lines, specs))
}

/// Hunts the false "1-tough implies 2-factor" statement on a corpus holding
/// `H(1)` and a few graphs that do have 2-factors. Passes when exactly `H(1)`
/// comes back as a counterexample.
pub fn self_test() -> Result<bool> {
    let h1 = build(FamilySpec::H { n: 1 })?.graph;
    let corpus = [
        Graph::cycle(5),
        Graph::complete(4),
        h1.clone(),
        Graph::petersen(),
    ];
    let spec = TheoremSpec::new(TheoremId::FalseOneTough, &Params::default())?;
    let report = hunt_graphs(&corpus, &[spec])?.remove(0);
    Ok(report.counterexamples == [encode_graph6(&h1)?] && report.malformed.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn verdict_algebra_with_malformed_lines() {
        let spec = TheoremSpec::new(
            TheoremId::Thm2,
            &Params {
                eps: Some(Rational::int(1)),
                ..Params::default()
            },
        )
        .unwrap();
        let lines = ["Bw", "", "# comment", "D?{", "not graph6 \u{1}", "Dhc"];
        let r = hunt(lines, &[spec]).remove(0);
        assert_eq!(r.total, 4);
        assert_eq!(r.malformed.len(), 1);
        assert_eq!(r.malformed[0].line, 5);
        assert_eq!(
            r.confirms + r.vacuous + r.counterexamples.len(),
            r.total - r.malformed.len()
        );
        assert!(r.passed());
    }

    #[test]
    fn harness_self_test() {
        assert!(self_test().unwrap());
    }
}
