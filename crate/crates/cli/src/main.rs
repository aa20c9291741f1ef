use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use twofactor::barrier::{
    check_biased_properties, decompose, extract_witness, find_barrier, find_biased_barrier,
};
use twofactor::families::{build, expected};
use twofactor::forbidden::find_induced;
use twofactor::invariants::{connectivity, independence_number, min_degree, toughness};
use twofactor::io::{decode_edge_lists, decode_graph6, encode_graph6};
use twofactor::two_factor::find_two_factor;
use twofactor::verifier::{
    graph_id, hunt, inequality_property, verify_family, Params, TheoremId, TheoremSpec,
};
use twofactor::{FamilySpec, ForestPattern, Graph, Rational, TwoFactorOutcome};

#[derive(Parser)]
#[command(
    name = "twofactor",
    version,
    about = "Toughness, barriers and 2-factors of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
}

#[derive(clap::Args)]
struct Input {
    /// Input file, or `-` for stdin
    input: String,
    #[arg(long, value_enum, default_value = "g6")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Toughness, independence number, connectivity and minimum degree
    Invariants(Input),
    /// Decide 2-factor existence, with a certificate either way when possible
    TwoFactor(Input),
    /// Search for a barrier (deficiency at most -2)
    Barrier {
        #[command(flatten)]
        input: Input,
        /// Use the barrier maximizing |A|, then minimizing |B|, and check its structure
        #[arg(long)]
        biased: bool,
    },
    /// Build the cut-set witness from the biased barrier
    Witness(Input),
    /// Look for an induced linear forest such as "P5+2P1"
    Forbidden {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pattern: ForestPattern,
    },
    /// Build a family member, e.g. "H:n=2", "R:m=1,a=2,b=1,c=3", "Ghat:n=1,k=1"
    Family {
        spec: FamilySpec,
        /// Print the graph instead of its description
        #[arg(long, value_enum)]
        emit: Option<Emit>,
        /// Recompute every claimed invariant
        #[arg(long, conflicts_with = "emit")]
        verify: bool,
    },
    /// Check a statement on every graph of a graph6 corpus
    Hunt {
        corpus: String,
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        eps: Option<Rational>,
        #[arg(long)]
        t: Option<Rational>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Check the fraction inequality on random valid tuples
    Lemma4 {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    G6,
    Edges,
}

fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(PathBuf::from(path)).with_context(|| format!("reading {path}"))
    }
}

fn read_graphs(input: &Input) -> Result<Vec<Graph>> {
    let text = read_text(&input.input)?;
    match input.format {
        Format::G6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| decode_graph6(l).with_context(|| format!("line {}", i + 1)))
            .collect(),
        Format::Edges => Ok(decode_edge_lists(&text)?),
    }
}

fn emit(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Runs `f` on each graph, printing one JSON line per graph. A graph whose
/// computation fails gets an `error` line and makes the run exit with 2.
fn per_graph(input: &Input, mut f: impl FnMut(&Graph) -> Result<(Value, bool)>) -> Result<u8> {
    let mut out = io::stdout().lock();
    let mut code = 0;
    for g in read_graphs(input)? {
        match f(&g) {
            Ok((v, violation)) => {
                emit(&mut out, &v)?;
                if violation {
                    code = code.max(1);
                }
            }
            Err(e) => {
                emit(
                    &mut out,
                    &json!({ "graph": graph_id(&g), "error": format!("{e:#}") }),
                )?;
                code = 2;
            }
        }
    }
    Ok(code)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Invariants(input) => per_graph(&input, |g| {
            let tau = toughness(g)?;
            Ok((
                json!({
                    "graph": graph_id(g),
                    "order": g.order(),
                    "size": g.size(),
                    "min_degree": min_degree(g)?,
                    "alpha": independence_number(g)?.size,
                    "connectivity": connectivity(g),
                    "toughness": tau.value,
                    "toughness_witness": tau.witness,
                }),
                false,
            ))
        }),
        Command::TwoFactor(input) => per_graph(&input, |g| {
            let outcome = find_two_factor(g);
            let v = match &outcome {
                TwoFactorOutcome::Found(f) => json!({
                    "graph": graph_id(g),
                    "two_factor": true,
                    "edges": f.edges,
                    "cycles": f.cycles(g.order()),
                }),
                TwoFactorOutcome::None { barrier } => json!({
                    "graph": graph_id(g),
                    "two_factor": "none",
                    "barrier": barrier,
                }),
            };
            Ok((v, false))
        }),
        Command::Barrier { input, biased } => per_graph(&input, |g| {
            let barrier = if biased {
                find_biased_barrier(g)?
            } else {
                find_barrier(g)?
            };
            let mut v = json!({ "graph": graph_id(g), "barrier": barrier });
            if let Some(b) = &barrier {
                v["decomposition"] = serde_json::to_value(decompose(g, &b.a, &b.b)?)?;
                if biased {
                    let report = check_biased_properties(g, b)?;
                    let ok = report.all_hold();
                    v["properties"] = serde_json::to_value(report)?;
                    return Ok((v, !ok));
                }
            }
            Ok((v, false))
        }),
        Command::Witness(input) => per_graph(&input, |g| {
            let Some(b) = find_biased_barrier(g)? else {
                return Ok((
                    json!({ "graph": graph_id(g), "barrier": null, "witness": null }),
                    false,
                ));
            };
            let d = decompose(g, &b.a, &b.b)?;
            let w = extract_witness(g, &b, &d)?;
            let tau = toughness(g).ok().map(|t| t.value);
            Ok((
                json!({ "graph": graph_id(g), "barrier": b, "witness": w, "toughness": tau }),
                false,
            ))
        }),
        Command::Forbidden { input, pattern } => per_graph(&input, |g| {
            let found = find_induced(g, &pattern)?;
            Ok((
                json!({
                    "graph": graph_id(g),
                    "pattern": pattern,
                    "free": found.is_none(),
                    "embedding": found.map(|e| e.map),
                }),
                false,
            ))
        }),
        Command::Family {
            spec,
            emit: format,
            verify,
        } => {
            let mut out = io::stdout().lock();
            if verify {
                let report = verify_family(spec)?;
                emit(&mut out, &report)?;
                return Ok(if report.all_pass { 0 } else { 1 });
            }
            let fam = build(spec)?;
            match format {
                Some(Emit::G6) => writeln!(out, "{}", encode_graph6(&fam.graph)?)?,
                Some(Emit::Edges) => {
                    write!(out, "{}", twofactor::io::encode_edge_list(&fam.graph))?
                }
                None => emit(
                    &mut out,
                    &json!({
                        "spec": spec.to_string(),
                        "graph6": encode_graph6(&fam.graph).ok(),
                        "order": fam.graph.order(),
                        "size": fam.graph.size(),
                        "sets": fam.sets,
                        "matching": fam.matching,
                        "expected": expected(spec)?,
                    }),
                )?,
            }
            Ok(0)
        }
        Command::Hunt {
            corpus,
            theorem,
            eps,
            t,
            k,
            l,
        } => {
            let spec = TheoremSpec::new(theorem, &Params { t, eps, k, l })?;
            let text = read_text(&corpus)?;
            let report = hunt(text.lines(), &[spec]).remove(0);
            emit(&mut io::stdout().lock(), &report)?;
            if !report.malformed.is_empty() {
                eprintln!("{} corpus lines skipped", report.malformed.len());
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Lemma4 { samples, seed } => {
            if samples == 0 {
                bail!("--samples must be positive");
            }
            let report = inequality_property(samples, seed);
            emit(&mut io::stdout().lock(), &report)?;
            Ok(if report.failures.is_empty() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
