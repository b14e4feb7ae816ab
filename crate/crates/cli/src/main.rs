//! `combclass`: graph6 in, line-oriented JSON out.
//!
//! Exit codes: 0 success, 1 a negative finding (counterexample, pattern
//! present, not recognized, certificate rejected), 2 usage or input error.

mod random;

use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use combclass::characterize::{sweep, sweep_connected, Checker, Status, TheoremId};
use combclass::enumerate::{for_each, EnumConfig};
use combclass::halin::{
    fan_cycle_for_h, halin_for_fat, halin_from_fan_cycle, verify_fan_cycle_system, verify_halin, FanCycleSystem,
    HalinCandidate,
};
use combclass::indep::{alpha_b11free, alpha_bruteforce, alpha_fat_graph, AlphaResult};
use combclass::patterns::{find_induced, make_pattern, parse_family, Family, PatternSpec};
use combclass::structures::{recognize_comb, recognize_fat, recognize_h_union, Description, HExpansion};
use combclass::{parse_graph6, read_graph6, write_graph6, Graph};
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use random::{random_description, RandomKind};

#[derive(Parser)]
#[command(name = "combclass", version, about = "Claw-free graph classes: recognition, constructions and theorem sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// graph6 strings; standard input is read when none are given.
    graphs: Vec<String>,
}

#[derive(Args)]
struct Workers {
    /// Worker threads.
    #[arg(long, env = "COMBCLASS_JOBS")]
    jobs: Option<usize>,
    /// Single worker and canonical order, for byte-identical output.
    #[arg(long)]
    deterministic: bool,
}

impl Workers {
    fn jobs(&self) -> Option<usize> {
        if self.deterministic {
            Some(1)
        } else {
            self.jobs
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Comb,
    H,
    Fat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphaMethodArg {
    /// The {K1,3, B1,1}-free dispatcher where it applies, brute force otherwise.
    Auto,
    Brute,
    Fat,
}

#[derive(Subcommand)]
enum Command {
    /// Decode graph6 and report basic structure.
    Parse(Input),
    /// Test freeness from a family such as `K1,3,Z2`.
    Free {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        input: Input,
    },
    /// Search for an induced copy of one pattern.
    Find {
        #[arg(long)]
        pattern: PatternSpec,
        #[command(flatten)]
        input: Input,
    },
    /// Recognize generalized combs, H0..H8 members and fat structures.
    Recognize {
        /// Only this class; all three by default.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        /// Smallest fat parameter accepted.
        #[arg(long, default_value_t = 5)]
        min_l: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Build a graph from a description such as `fatpath:2,1,3,1,2`.
    Build {
        /// Descriptions to build.
        descriptions: Vec<String>,
        /// Draw random instances of this kind instead.
        #[arg(long, value_enum, conflicts_with = "descriptions")]
        random: Option<RandomKind>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Smallest parameter for random fat structures.
        #[arg(long, default_value_t = 5)]
        min_l: usize,
    },
    /// Evaluate a theorem on each input graph.
    Check {
        #[command(flatten)]
        theorem: TheoremArg,
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate a theorem on all connected graphs up to `--n`, or on a graph6 stream.
    Sweep {
        #[command(flatten)]
        theorem: TheoremArg,
        /// Largest order generated; without it graph6 is read from standard input.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        workers: Workers,
    },
    /// Print every connected graph on `--n` vertices as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Connected graphs only (the only mode supported).
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        workers: Workers,
    },
    /// Construct or verify spanning Halin subgraphs.
    Halin {
        /// Description of a 3-connected fat structure or H0..H8 member.
        #[arg(long, conflicts_with = "verify")]
        construct: Option<String>,
        /// Verify JSON lines (as printed by --construct) from standard input.
        #[arg(long)]
        verify: bool,
    },
    /// Independence number with a witness.
    Alpha {
        #[arg(long, value_enum, default_value = "auto")]
        method: AlphaMethodArg,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Args)]
struct TheoremArg {
    /// thmA, thm1z, thm1, thm2, thm3 (with --m, or thm3:m=2), olariu.
    #[arg(long)]
    theorem: String,
    /// m for thm3.
    #[arg(long)]
    m: Option<usize>,
}

impl TheoremArg {
    fn resolve(&self) -> Result<TheoremId> {
        let text = match (self.theorem.trim(), self.m) {
            ("thm3", Some(m)) => format!("thm3:m={m}"),
            (_, Some(_)) => bail!("--m only applies to thm3"),
            (t, None) => t.to_string(),
        };
        Ok(text.parse()?)
    }
}

/// Result of a command that ran to completion; errors map to exit code 2.
#[derive(Debug)]
enum Outcome {
    Success,
    Negative,
}

impl Outcome {
    fn from_negative(negative: bool) -> Self {
        if negative {
            Outcome::Negative
        } else {
            Outcome::Success
        }
    }
}

struct Out(BufWriter<io::StdoutLock<'static>>);

impl Out {
    fn new() -> Self {
        Out(BufWriter::new(io::stdout().lock()))
    }

    fn json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        serde_json::to_writer(&mut self.0, value)?;
        writeln!(self.0)?;
        Ok(())
    }

    fn line(&mut self, text: &str) -> Result<()> {
        writeln!(self.0, "{text}")?;
        Ok(())
    }

    fn summary(&mut self, fields: Value) -> Result<()> {
        self.json(&json!({ "summary": fields }))
    }

    fn finish(mut self) -> Result<()> {
        self.0.flush()?;
        Ok(())
    }
}

/// Graphs from the arguments, or from standard input.
fn graphs(input: &Input) -> Box<dyn Iterator<Item = Result<Graph>>> {
    if input.graphs.is_empty() {
        Box::new(read_graph6(io::stdin().lock()).map(|r| r.map_err(anyhow::Error::from)))
    } else {
        let items: Vec<Result<Graph>> = input
            .graphs
            .iter()
            .enumerate()
            .map(|(i, s)| parse_graph6(s).with_context(|| format!("argument {}", i + 1)))
            .collect();
        Box::new(items.into_iter())
    }
}

fn parse(input: &Input) -> Result<Outcome> {
    let mut out = Out::new();
    let mut count = 0;
    for g in graphs(input) {
        let g = g?;
        count += 1;
        out.json(&json!({
            "graph6": write_graph6(&g),
            "n": g.order(),
            "m": g.edge_count(),
            "edges": g.edges(),
            "connected": g.is_connected(),
            "degree_sequence": g.degree_sequence(),
        }))?;
    }
    out.summary(json!({ "count": count }))?;
    out.finish()?;
    Ok(Outcome::Success)
}

fn free(family: &str, input: &Input) -> Result<Outcome> {
    let specs = parse_family(family)?;
    let fam = Family::new(&specs);
    let mut out = Out::new();
    let (mut yes, mut no) = (0, 0);
    for g in graphs(input) {
        let g = g?;
        let v = fam.violation(&g);
        if v.is_some() {
            no += 1;
        } else {
            yes += 1;
        }
        let mut line = json!({ "graph6": write_graph6(&g), "free": v.is_none() });
        if let Some(v) = v {
            line["witness"] = serde_json::to_value(v)?;
        }
        out.json(&line)?;
    }
    let names: Vec<String> = specs.iter().map(ToString::to_string).collect();
    out.summary(json!({ "family": names, "count": yes + no, "free": yes, "not_free": no }))?;
    out.finish()?;
    Ok(Outcome::from_negative(no > 0))
}

fn find(pattern: PatternSpec, input: &Input) -> Result<Outcome> {
    let p = make_pattern(pattern);
    let mut out = Out::new();
    let (mut found, mut count) = (0, 0);
    for g in graphs(input) {
        let g = g?;
        count += 1;
        let e = find_induced(&g, &p);
        let mut line = json!({ "graph6": write_graph6(&g), "found": e.is_some() });
        if let Some(e) = e {
            found += 1;
            line["embedding"] = serde_json::to_value(e)?;
        }
        out.json(&line)?;
    }
    out.summary(json!({ "pattern": pattern.to_string(), "count": count, "found": found }))?;
    out.finish()?;
    Ok(Outcome::from_negative(found < count))
}

fn recognize(class: Option<ClassArg>, min_l: usize, input: &Input) -> Result<Outcome> {
    let wanted = |c: ClassArg| class.is_none_or(|k| k == c);
    let mut out = Out::new();
    let (mut count, mut recognized) = (0, 0);
    for g in graphs(input) {
        let g = g?;
        count += 1;
        let mut line = json!({ "graph6": write_graph6(&g) });
        let mut any = false;
        if wanted(ClassArg::Comb) {
            let r = recognize_comb(&g);
            any |= r.is_some();
            line["comb"] = serde_json::to_value(r)?;
        }
        if wanted(ClassArg::H) {
            let r = recognize_h_union(&g);
            any |= r.is_some();
            line["h"] = serde_json::to_value(r)?;
        }
        if wanted(ClassArg::Fat) {
            let r = recognize_fat(&g, min_l);
            any |= r.is_some();
            line["fat"] = serde_json::to_value(r)?;
        }
        line["recognized"] = any.into();
        recognized += any as usize;
        out.json(&line)?;
    }
    out.summary(json!({ "count": count, "recognized": recognized }))?;
    out.finish()?;
    Ok(Outcome::from_negative(recognized < count))
}

fn build(descriptions: &[String], random: Option<RandomKind>, count: usize, seed: u64, min_l: usize) -> Result<Outcome> {
    let items: Vec<Description> = match random {
        Some(kind) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| random_description(&mut rng, kind, min_l)).collect()
        }
        None if descriptions.is_empty() => bail!("give descriptions or --random"),
        None => descriptions.iter().map(|d| d.parse()).collect::<combclass::Result<_>>()?,
    };
    let mut out = Out::new();
    for d in &items {
        let g = d.build()?;
        out.json(&json!({ "description": d, "graph6": write_graph6(&g), "n": g.order() }))?;
    }
    out.summary(json!({ "count": items.len() }))?;
    out.finish()?;
    Ok(Outcome::Success)
}

fn check(theorem: &TheoremArg, input: &Input) -> Result<Outcome> {
    let t = theorem.resolve()?;
    let checker = Checker::new(t.statement());
    let mut out = Out::new();
    let mut counts = [0usize; 3];
    for g in graphs(input) {
        let g = g?;
        let v = checker.check(&g);
        counts[match v.status {
            Status::Holds => 0,
            Status::NotApplicable => 1,
            Status::Counterexample => 2,
        }] += 1;
        let mut line = serde_json::to_value(&v)?;
        line["graph6"] = write_graph6(&g).into();
        out.json(&line)?;
    }
    out.summary(json!({
        "theorem": t.to_string(),
        "counts": { "holds": counts[0], "not_applicable": counts[1], "counterexample": counts[2] },
    }))?;
    out.finish()?;
    Ok(Outcome::from_negative(counts[2] > 0))
}

fn sweep_cmd(theorem: &TheoremArg, n: Option<usize>, workers: &Workers) -> Result<Outcome> {
    let t = theorem.resolve()?;
    let report = match n {
        Some(n) => sweep_connected(t, n, workers.jobs())?,
        None => {
            let checker = Checker::new(t.statement());
            sweep(read_graph6(io::stdin().lock()), &checker, &t.to_string(), workers.jobs())?
        }
    };
    let mut out = Out::new();
    out.json(&report)?;
    out.finish()?;
    Ok(Outcome::from_negative(report.counts.counterexample > 0))
}

fn enumerate(n: usize, workers: &Workers) -> Result<Outcome> {
    let mut out = Out::new();
    let mut failed = None;
    let cfg = EnumConfig {
        jobs: workers.jobs(),
        ..EnumConfig::connected(n)
    };
    for_each(&cfg, |g| {
        if failed.is_none() {
            failed = out.line(&write_graph6(g)).err();
        }
    })?;
    if let Some(e) = failed {
        return Err(e);
    }
    out.finish()?;
    Ok(Outcome::Success)
}

/// One line of `halin --construct` output, and the input of `halin --verify`.
#[derive(Serialize, Deserialize)]
struct HalinDocument {
    graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<Description>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    system: Option<FanCycleSystem>,
    candidate: HalinCandidate,
}

fn halin_certificate(g: &Graph, d: &Description) -> combclass::Result<(Option<FanCycleSystem>, HalinCandidate)> {
    let h = match d {
        Description::Fat { fat } => return Ok((None, halin_for_fat(fat)?)),
        Description::H { h } => h.clone(),
        Description::Comb { comb } if comb.is_pointed() => HExpansion::Comb { comb: comb.clone() },
        _ => {
            return Err(combclass::Error::Argument(
                "Halin certificates are constructed for fat structures, pointed combs and H0..H8 members".into(),
            ))
        }
    };
    let f = fan_cycle_for_h(g, &h)?;
    let c = halin_from_fan_cycle(g, &f)?;
    Ok((Some(f), c))
}

fn halin_construct(text: &str) -> Result<Outcome> {
    let d: Description = text.parse()?;
    let g = d.build()?;
    let mut out = Out::new();
    let outcome = match halin_certificate(&g, &d) {
        Ok((system, candidate)) => {
            out.json(&HalinDocument {
                graph6: write_graph6(&g),
                description: Some(d),
                system,
                candidate,
            })?;
            Outcome::Success
        }
        Err(e @ combclass::Error::Precondition(_)) => {
            out.json(&json!({ "graph6": write_graph6(&g), "description": d, "error": e.to_string() }))?;
            Outcome::Negative
        }
        Err(e) => return Err(e.into()),
    };
    out.finish()?;
    Ok(outcome)
}

fn halin_verify() -> Result<Outcome> {
    let mut out = Out::new();
    let (mut count, mut rejected) = (0, 0);
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let doc: HalinDocument = serde_json::from_str(&line).with_context(|| format!("line {}", i + 1))?;
        let g = parse_graph6(&doc.graph6).with_context(|| format!("line {}", i + 1))?;
        count += 1;
        let mut result = json!({ "graph6": doc.graph6 });
        let mut ok = true;
        match verify_halin(&g, &doc.candidate) {
            Ok(()) => result["halin"] = json!({ "valid": true }),
            Err(v) => {
                ok = false;
                result["halin"] = json!({ "valid": false, "reason": v.reason, "message": v.message });
            }
        }
        if let Some(f) = &doc.system {
            match verify_fan_cycle_system(&g, f) {
                Ok(()) => result["system"] = json!({ "valid": true }),
                Err(v) => {
                    ok = false;
                    result["system"] = json!({ "valid": false, "axiom": v.axiom, "message": v.message });
                }
            }
        }
        result["valid"] = ok.into();
        rejected += !ok as usize;
        out.json(&result)?;
    }
    out.summary(json!({ "count": count, "valid": count - rejected, "rejected": rejected }))?;
    out.finish()?;
    Ok(Outcome::from_negative(rejected > 0))
}

fn alpha(method: AlphaMethodArg, input: &Input) -> Result<Outcome> {
    let mut out = Out::new();
    let (mut count, mut failed) = (0, 0);
    for g in graphs(input) {
        let g = g?;
        count += 1;
        let r: combclass::Result<AlphaResult> = match method {
            AlphaMethodArg::Brute => alpha_bruteforce(&g),
            AlphaMethodArg::Fat => alpha_fat_graph(&g),
            AlphaMethodArg::Auto => match alpha_b11free(&g) {
                Err(combclass::Error::Precondition(_)) => alpha_bruteforce(&g),
                other => other,
            },
        };
        let mut line = json!({ "graph6": write_graph6(&g) });
        match r {
            Ok(r) => {
                line["alpha"] = r.alpha.into();
                line["witness"] = serde_json::to_value(&r.witness)?;
                line["method"] = serde_json::to_value(r.method)?;
            }
            Err(e @ combclass::Error::Inconsistency { .. }) => return Err(e.into()),
            Err(e) => {
                failed += 1;
                line["error"] = e.to_string().into();
            }
        }
        out.json(&line)?;
    }
    out.summary(json!({ "count": count, "failed": failed }))?;
    out.finish()?;
    Ok(Outcome::from_negative(failed > 0))
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Parse(input) => parse(&input),
        Command::Free { family, input } => free(&family, &input),
        Command::Find { pattern, input } => find(pattern, &input),
        Command::Recognize { class, min_l, input } => recognize(class, min_l, &input),
        Command::Build {
            descriptions,
            random,
            count,
            seed,
            min_l,
        } => build(&descriptions, random, count, seed, min_l),
        Command::Check { theorem, input } => check(&theorem, &input),
        Command::Sweep { theorem, n, workers } => sweep_cmd(&theorem, n, &workers),
        Command::Enumerate { n, connected: _, workers } => enumerate(n, &workers),
        Command::Halin { construct, verify } => match (construct, verify) {
            (Some(text), false) => halin_construct(&text),
            (None, true) => halin_verify(),
            _ => Err(anyhow!("give --construct DESCRIPTION or --verify")),
        },
        Command::Alpha { method, input } => alpha(method, &input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
