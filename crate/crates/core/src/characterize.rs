//! Executable forms of the characterization theorems.
//!
//! Each theorem reads: a connected graph free of a forbidden family contains a
//! trigger pattern if and only if it belongs to a target class. A check
//! evaluates both sides on one graph; a sweep runs the check over a stream.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::Pool;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::patterns::{is_isomorphic, make_pattern, Embedding, Family, Matcher, PatternSpec, Violation};
use crate::structures::{
    build_comb, build_fat, build_h, recognize_comb, recognize_fat, recognize_h_union,
    CombDescription, FatDescription, HExpansion,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `{K1,3, B1,2}`-free: contains the net iff a generalized comb.
    ThmA,
    /// `{K1,3, Z2}`-free: contains `B1,1` iff in `H_0 ∪ ... ∪ H_8`.
    Thm1z,
    /// `{K1,3, B1,1}`-free: contains `P5` iff in `P(5)`.
    Thm1,
    /// `{K1,3, B1,2}`-free: contains `P6` iff in `P(6)`.
    Thm2,
    /// `{K1,3, B1,m}`-free: contains `P_t` iff in `P(t)`, `t = max(3m, m+4)`.
    Thm3(usize),
    /// `Z1`-free: contains a triangle iff complete multipartite with at least three parts.
    Olariu,
}

impl TheoremId {
    pub fn statement(&self) -> Statement {
        use PatternSpec::*;
        match *self {
            TheoremId::ThmA => Statement {
                forbidden: vec![Star13, PatternSpec::b(1, 2)],
                trigger: PatternSpec::net(),
                target: TargetClass::Comb,
            },
            TheoremId::Thm1z => Statement {
                forbidden: vec![Star13, PatternSpec::z(2)],
                trigger: PatternSpec::b(1, 1),
                target: TargetClass::HUnion,
            },
            TheoremId::Thm1 => Statement {
                forbidden: vec![Star13, PatternSpec::b(1, 1)],
                trigger: Path(5),
                target: TargetClass::Fat(5),
            },
            TheoremId::Thm2 => Statement {
                forbidden: vec![Star13, PatternSpec::b(1, 2)],
                trigger: Path(6),
                target: TargetClass::Fat(6),
            },
            TheoremId::Thm3(m) => {
                let t = thm3_threshold(m);
                Statement {
                    forbidden: vec![Star13, PatternSpec::b(1, m)],
                    trigger: Path(t),
                    target: TargetClass::Fat(t),
                }
            }
            TheoremId::Olariu => Statement {
                forbidden: vec![PatternSpec::z(1)],
                trigger: Complete(3),
                target: TargetClass::Multipartite,
            },
        }
    }
}

/// Path order in the general theorem for `B1,m`.
pub fn thm3_threshold(m: usize) -> usize {
    (3 * m).max(m + 4)
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremId::ThmA => write!(f, "thmA"),
            TheoremId::Thm1z => write!(f, "thm1z"),
            TheoremId::Thm1 => write!(f, "thm1"),
            TheoremId::Thm2 => write!(f, "thm2"),
            TheoremId::Thm3(m) => write!(f, "thm3:m={m}"),
            TheoremId::Olariu => write!(f, "olariu"),
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts `thmA`, `thm1z`, `thm1`, `thm2`, `thm3:m=3` (or `thm3(3)`) and `olariu`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let m_of = |rest: &str| -> Result<usize> {
            let digits = rest
                .trim_start_matches([':', '('])
                .trim_start_matches("m=")
                .trim_end_matches(')');
            match digits.parse::<usize>() {
                Ok(m) if m >= 1 => Ok(m),
                _ => Err(Error::description(s, "thm3 needs m >= 1, as in thm3:m=2")),
            }
        };
        match t.as_str() {
            "thma" => Ok(TheoremId::ThmA),
            "thm1z" => Ok(TheoremId::Thm1z),
            "thm1" => Ok(TheoremId::Thm1),
            "thm2" => Ok(TheoremId::Thm2),
            "olariu" => Ok(TheoremId::Olariu),
            _ => match t.strip_prefix("thm3") {
                Some(rest) if !rest.is_empty() => Ok(TheoremId::Thm3(m_of(rest)?)),
                Some(_) => Err(Error::description(s, "thm3 needs m, as in thm3:m=2")),
                None => Err(Error::description(s, "unknown theorem")),
            },
        }
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetClass {
    /// Generalized combs.
    Comb,
    /// `H_0 ∪ ... ∪ H_8`.
    HUnion,
    /// `P(l)`.
    Fat(usize),
    /// Complete multipartite with at least three parts.
    Multipartite,
}

/// A theorem as data, so that variants can be checked with the same harness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statement {
    pub forbidden: Vec<PatternSpec>,
    pub trigger: PatternSpec,
    pub target: TargetClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    NotApplicable,
    Holds,
    Counterexample,
}

/// Which implication failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// The trigger occurs but the graph is not in the target class.
    TriggerWithoutClass,
    /// The graph is in the target class but the trigger does not occur.
    ClassWithoutTrigger,
}

/// Evidence that a graph lies in the target class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ClassWitness {
    Comb { comb: CombDescription },
    H { h: HExpansion },
    Fat { fat: FatDescription },
    Multipartite { parts: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Why the theorem does not apply: the forbidden member found, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trigger: Option<Embedding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<Direction>,
    pub witness: Witness,
}

/// A statement with its pattern searches prepared once.
#[derive(Clone, Debug)]
pub struct Checker {
    statement: Statement,
    forbidden: Family,
    trigger: Matcher,
}

impl Checker {
    pub fn new(statement: Statement) -> Self {
        Checker {
            forbidden: Family::new(&statement.forbidden),
            trigger: Matcher::new(&make_pattern(statement.trigger)),
            statement,
        }
    }

    pub fn statement(&self) -> &Statement {
        &self.statement
    }

    pub fn check(&self, g: &Graph) -> Verdict {
        let empty = Witness {
            forbidden: None,
            trigger: None,
            class: None,
        };
        if !g.is_connected() {
            return Verdict {
                status: Status::NotApplicable,
                direction: None,
                witness: empty,
            };
        }
        if let Some(v) = self.forbidden.violation(g) {
            return Verdict {
                status: Status::NotApplicable,
                direction: None,
                witness: Witness {
                    forbidden: Some(v),
                    ..empty
                },
            };
        }
        let trigger = self.trigger.find(g);
        let class = classify(g, self.statement.target);
        let (status, direction) = match (trigger.is_some(), class.is_some()) {
            (true, true) | (false, false) => (Status::Holds, None),
            (true, false) => (Status::Counterexample, Some(Direction::TriggerWithoutClass)),
            (false, true) => (Status::Counterexample, Some(Direction::ClassWithoutTrigger)),
        };
        Verdict {
            status,
            direction,
            witness: Witness {
                forbidden: None,
                trigger,
                class,
            },
        }
    }

    /// Re-checks the evidence in a verdict independently of how it was found.
    pub fn revalidate(&self, g: &Graph, v: &Verdict) -> bool {
        let trigger_ok = v
            .witness
            .trigger
            .as_ref()
            .is_none_or(|e| e.is_valid(g, &make_pattern(self.statement.trigger)));
        let forbidden_ok = v
            .witness
            .forbidden
            .as_ref()
            .is_none_or(|f| f.embedding.is_valid(g, &make_pattern(f.pattern)));
        let class_ok = v.witness.class.as_ref().is_none_or(|c| class_witness_holds(g, c));
        trigger_ok && forbidden_ok && class_ok
    }
}

/// The target-class side of a theorem.
pub fn classify(g: &Graph, target: TargetClass) -> Option<ClassWitness> {
    match target {
        TargetClass::Comb => recognize_comb(g).map(|comb| ClassWitness::Comb { comb }),
        TargetClass::HUnion => recognize_h_union(g).map(|h| ClassWitness::H { h }),
        TargetClass::Fat(l) => recognize_fat(g, l).map(|fat| ClassWitness::Fat { fat }),
        TargetClass::Multipartite => g
            .complete_multipartite_parts()
            .filter(|p| p.len() >= 3)
            .map(|parts| ClassWitness::Multipartite { parts }),
    }
}

fn class_witness_holds(g: &Graph, c: &ClassWitness) -> bool {
    let rebuilt = match c {
        ClassWitness::Comb { comb } => build_comb(comb),
        ClassWitness::H { h } => build_h(h),
        ClassWitness::Fat { fat } => build_fat(fat),
        ClassWitness::Multipartite { parts } => {
            let covered: usize = parts.iter().map(Vec::len).sum();
            return parts.len() >= 3
                && covered == g.order()
                && parts.iter().all(|p| g.is_independent(p))
                && parts.iter().enumerate().all(|(i, p)| {
                    parts[i + 1..]
                        .iter()
                        .all(|q| p.iter().all(|&a| q.iter().all(|&b| g.has_edge(a, b))))
                });
        }
    };
    rebuilt.is_ok_and(|r| is_isomorphic(&r, g))
}

pub fn check(g: &Graph, t: TheoremId) -> Verdict {
    Checker::new(t.statement()).check(g)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub holds: usize,
    pub not_applicable: usize,
    pub counterexample: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub graph6: String,
    pub direction: Direction,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub theorem: String,
    /// Smallest and largest order seen; `None` for an empty stream.
    pub n_range: Option<(usize, usize)>,
    pub counts: Counts,
    /// Inputs that were disconnected (also counted as not applicable).
    pub disconnected: usize,
    /// Sorted by graph6 string.
    pub counterexamples: Vec<CounterexampleRecord>,
}

impl SweepReport {
    fn empty(theorem: String) -> Self {
        SweepReport {
            theorem,
            n_range: None,
            counts: Counts::default(),
            disconnected: 0,
            counterexamples: Vec::new(),
        }
    }

    fn add(&mut self, g: &Graph, v: Verdict) {
        let n = g.order();
        self.n_range = Some(match self.n_range {
            None => (n, n),
            Some((a, b)) => (a.min(n), b.max(n)),
        });
        match v.status {
            Status::Holds => self.counts.holds += 1,
            Status::NotApplicable => {
                self.counts.not_applicable += 1;
                if !g.is_connected() {
                    self.disconnected += 1;
                }
            }
            Status::Counterexample => {
                self.counts.counterexample += 1;
                self.counterexamples.push(CounterexampleRecord {
                    graph6: write_graph6(g),
                    direction: v.direction.expect("counterexamples have a direction"),
                    witness: v.witness,
                });
            }
        }
    }

    pub fn total(&self) -> usize {
        self.counts.holds + self.counts.not_applicable + self.counts.counterexample
    }
}

const CHUNK: usize = 4096;

/// Checks every graph of a stream. Stream errors abort the sweep.
pub fn sweep<I>(graphs: I, checker: &Checker, name: &str, jobs: Option<usize>) -> Result<SweepReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let pool = Pool::new(jobs)?;
    let mut report = SweepReport::empty(name.to_string());
    let mut buf: Vec<Graph> = Vec::with_capacity(CHUNK);
    let flush = |buf: &mut Vec<Graph>, report: &mut SweepReport| {
        let verdicts: Vec<Verdict> = pool.run(|| buf.par_iter().map(|g| checker.check(g)).collect());
        for (g, v) in buf.iter().zip(verdicts) {
            report.add(g, v);
        }
        buf.clear();
    };
    for item in graphs {
        buf.push(item?);
        if buf.len() == CHUNK {
            flush(&mut buf, &mut report);
        }
    }
    flush(&mut buf, &mut report);
    report
        .counterexamples
        .sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(report)
}

/// Sweeps a theorem over all connected graphs with `1..=n_max` vertices.
pub fn sweep_connected(t: TheoremId, n_max: usize, jobs: Option<usize>) -> Result<SweepReport> {
    sweep_statement(t.statement(), &t.to_string(), n_max, jobs)
}

pub fn sweep_statement(
    statement: Statement,
    name: &str,
    n_max: usize,
    jobs: Option<usize>,
) -> Result<SweepReport> {
    let checker = Checker::new(statement);
    let mut all = Vec::new();
    for n in 1..=n_max {
        let cfg = crate::enumerate::EnumConfig {
            jobs,
            ..crate::enumerate::EnumConfig::connected(n)
        };
        all.extend(crate::enumerate::enumerate(&cfg)?);
    }
    sweep(all.into_iter().map(Ok), &checker, name, jobs)
}
