//! Named forbidden subgraphs and induced-subgraph search.
//!
//! `N(k,l,m)` is a triangle `0,1,2` with pendant paths of `k`, `l` and `m`
//! further vertices hanging off `0`, `1` and `2` respectively. `Z_k`, `B_{k,l}`
//! and the net are the usual special cases and are stored as `Nklm`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    Complete(usize),
    Path(usize),
    Star13,
    Nklm(usize, usize, usize),
}

impl PatternSpec {
    pub fn z(k: usize) -> Self {
        PatternSpec::Nklm(k, 0, 0)
    }

    pub fn b(k: usize, l: usize) -> Self {
        PatternSpec::Nklm(k, l, 0)
    }

    pub fn net() -> Self {
        PatternSpec::Nklm(1, 1, 1)
    }

    pub fn order(&self) -> usize {
        match *self {
            PatternSpec::Complete(n) | PatternSpec::Path(n) => n,
            PatternSpec::Star13 => 4,
            PatternSpec::Nklm(k, l, m) => k + l + m + 3,
        }
    }

    pub fn graph(&self) -> Graph {
        make_pattern(*self)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternSpec::Complete(n) => write!(f, "K{n}"),
            PatternSpec::Path(n) => write!(f, "P{n}"),
            PatternSpec::Star13 => write!(f, "K1,3"),
            PatternSpec::Nklm(1, 1, 1) => write!(f, "N"),
            PatternSpec::Nklm(k, 0, 0) => write!(f, "Z{k}"),
            PatternSpec::Nklm(k, l, 0) => write!(f, "B{k},{l}"),
            PatternSpec::Nklm(k, l, m) => write!(f, "N({k},{l},{m})"),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = |msg: &str| Error::description(s, msg);
        let num = |x: &str| -> Result<usize> {
            x.trim()
                .parse::<usize>()
                .map_err(|_| bad("expected a non-negative integer"))
        };
        let positive = |x: &str| -> Result<usize> {
            match num(x)? {
                0 => Err(bad("order must be at least 1")),
                n => Ok(n),
            }
        };
        match t.to_ascii_lowercase().as_str() {
            "claw" | "k1,3" => return Ok(PatternSpec::Star13),
            "n" | "net" => return Ok(PatternSpec::net()),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("N(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 3 {
                return Err(bad("N(k,l,m) takes three lengths"));
            }
            return Ok(PatternSpec::Nklm(num(parts[0])?, num(parts[1])?, num(parts[2])?));
        }
        if let Some(rest) = t.strip_prefix('B') {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 2 {
                return Err(bad("B takes two lengths, as in B1,2"));
            }
            return Ok(PatternSpec::b(num(parts[0])?, num(parts[1])?));
        }
        if let Some(rest) = t.strip_prefix('Z') {
            return Ok(PatternSpec::z(num(rest)?));
        }
        if let Some(rest) = t.strip_prefix('K') {
            return Ok(PatternSpec::Complete(positive(rest)?));
        }
        if let Some(rest) = t.strip_prefix('P') {
            return Ok(PatternSpec::Path(positive(rest)?));
        }
        Err(bad("unknown pattern"))
    }
}

impl Serialize for PatternSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated family such as `K1,3,Z2` or `K1,3,B1,2,N(2,1,1)`.
///
/// Commas also occur inside names, so tokens are regrouped: `K1` followed by
/// a bare number is the claw and `B` takes the next bare number as its second length.
pub fn parse_family(text: &str) -> Result<Vec<PatternSpec>> {
    let mut tokens: Vec<String> = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            tokens.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    tokens.push(cur);
    let tokens: Vec<String> = tokens.into_iter().map(|t| t.trim().to_string()).collect();
    let is_num = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let t = &tokens[i];
        if t.is_empty() {
            return Err(Error::description(text, "empty family member"));
        }
        let joinable = t == "K1" || (t.starts_with('B') && !t.contains(','));
        if joinable && i + 1 < tokens.len() && is_num(&tokens[i + 1]) {
            out.push(format!("{t},{}", tokens[i + 1]).parse()?);
            i += 2;
        } else {
            out.push(t.parse()?);
            i += 1;
        }
    }
    Ok(out)
}

pub fn make_pattern(spec: PatternSpec) -> Graph {
    match spec {
        PatternSpec::Complete(n) => Graph::complete(n),
        PatternSpec::Path(n) => Graph::path(n),
        PatternSpec::Star13 => {
            let mut g = Graph::empty(4);
            for leaf in 1..4 {
                g.add_edge(0, leaf);
            }
            g
        }
        PatternSpec::Nklm(k, l, m) => {
            let mut g = Graph::empty(k + l + m + 3);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(1, 2);
            let mut next = 3;
            for (anchor, len) in [(0, k), (1, l), (2, m)] {
                let mut prev = anchor;
                for _ in 0..len {
                    g.add_edge(prev, next);
                    prev = next;
                    next += 1;
                }
            }
            g
        }
    }
}

/// Injective map from pattern vertices to host vertices: `map[a]` is the
/// image of pattern vertex `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    /// Whether this is an induced embedding of `pattern` into `host`.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let map = &self.0;
        if map.len() != pattern.order() || map.iter().any(|&v| v >= host.order()) {
            return false;
        }
        for a in 0..map.len() {
            for b in a + 1..map.len() {
                if map[a] == map[b] || pattern.has_edge(a, b) != host.has_edge(map[a], map[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Search order for pattern vertices: each next vertex has the most
/// already-placed neighbours, then the largest degree, then the smallest index.
fn search_order(p: &Graph) -> Vec<usize> {
    let k = p.order();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = order.iter().filter(|&&u| p.has_edge(u, v)).count();
                (back, p.degree(v), std::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Some induced copy of `pattern` in `host`, or `None`. The result is the
/// lexicographically least image sequence along the fixed search order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    Matcher::new(pattern).find(host)
}

/// A pattern with its search order precomputed, for repeated queries.
#[derive(Clone, Debug)]
pub struct Matcher {
    pattern: Graph,
    order: Vec<usize>,
    /// `back[d]` lists `(j, adjacent)` for each earlier position `j < d`.
    back: Vec<Vec<(usize, bool)>>,
    degree: Vec<usize>,
}

impl Matcher {
    pub fn new(pattern: &Graph) -> Self {
        let order = search_order(pattern);
        let back = (0..order.len())
            .map(|d| {
                (0..d)
                    .map(|j| (j, pattern.has_edge(order[d], order[j])))
                    .collect()
            })
            .collect();
        let degree = order.iter().map(|&v| pattern.degree(v)).collect();
        Matcher {
            pattern: pattern.clone(),
            order,
            back,
            degree,
        }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn find(&self, host: &Graph) -> Option<Embedding> {
        let k = self.order.len();
        if k > host.order() {
            return None;
        }
        if k == 0 {
            return Some(Embedding(Vec::new()));
        }
        let words = host.words();
        let host_deg: Vec<usize> = (0..host.order()).map(|v| host.degree(v)).collect();
        let mut image = vec![0usize; k];
        let mut used = vec![0u64; words];
        let mut cand = vec![0u64; words];
        if self.extend(host, &host_deg, 0, &mut image, &mut used, &mut cand) {
            let mut map = vec![0; k];
            for (d, &a) in self.order.iter().enumerate() {
                map[a] = image[d];
            }
            Some(Embedding(map))
        } else {
            None
        }
    }

    fn extend(
        &self,
        host: &Graph,
        host_deg: &[usize],
        d: usize,
        image: &mut [usize],
        used: &mut [u64],
        scratch: &mut [u64],
    ) -> bool {
        if d == self.order.len() {
            return true;
        }
        let n = host.order();
        let words = scratch.len();
        for w in 0..words {
            scratch[w] = !used[w];
        }
        if !n.is_multiple_of(64) {
            scratch[words - 1] &= (1u64 << (n % 64)) - 1;
        }
        for &(j, adjacent) in &self.back[d] {
            let row = host.row(image[j]);
            for w in 0..words {
                if adjacent {
                    scratch[w] &= row[w];
                } else {
                    scratch[w] &= !row[w];
                }
            }
        }
        let cands: Vec<usize> = bits::iter(scratch).collect();
        let mut inner = vec![0u64; words];
        for v in cands {
            if host_deg[v] < self.degree[d] {
                continue;
            }
            image[d] = v;
            bits::set(used, v);
            let found = self.extend(host, host_deg, d + 1, image, used, &mut inner);
            bits::clear(used, v);
            if found {
                return true;
            }
        }
        false
    }
}

/// A member of a family found in a host, with its embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub pattern: PatternSpec,
    pub embedding: Embedding,
}

/// A forbidden family with its matchers built once.
#[derive(Clone, Debug)]
pub struct Family {
    members: Vec<(PatternSpec, Matcher)>,
}

impl Family {
    pub fn new(specs: &[PatternSpec]) -> Self {
        Family {
            members: specs
                .iter()
                .map(|&s| (s, Matcher::new(&make_pattern(s))))
                .collect(),
        }
    }

    pub fn specs(&self) -> impl Iterator<Item = PatternSpec> + '_ {
        self.members.iter().map(|(s, _)| *s)
    }

    /// The first member, in family order, that occurs in `host`.
    pub fn violation(&self, host: &Graph) -> Option<Violation> {
        self.members.iter().find_map(|(spec, m)| {
            m.find(host).map(|embedding| Violation {
                pattern: *spec,
                embedding,
            })
        })
    }

    pub fn is_free(&self, host: &Graph) -> bool {
        self.violation(host).is_none()
    }
}

/// Whether `host` contains none of `family` as an induced subgraph.
pub fn is_free(host: &Graph, family: &[PatternSpec]) -> bool {
    Family::new(family).is_free(host)
}

/// The first member of `family` found in `host`, with its embedding.
pub fn violation(host: &Graph, family: &[PatternSpec]) -> Option<Violation> {
    Family::new(family).violation(host)
}

/// `f1 <= f2`: every member of `f2` contains some member of `f1`.
pub fn family_leq(f1: &[PatternSpec], f2: &[PatternSpec]) -> bool {
    let small: Vec<Matcher> = f1.iter().map(|&s| Matcher::new(&make_pattern(s))).collect();
    f2.iter().all(|&h2| {
        let big = make_pattern(h2);
        small.iter().any(|m| m.find(&big).is_some())
    })
}

/// Isomorphism test: with equal orders an induced embedding is a bijection
/// preserving edges and non-edges.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && find_induced(b, a).is_some()
}
