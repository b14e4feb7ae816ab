//! The families `H_0..H_8`. `H_0` is the pointed combs; `H_1..H_5` are fixed
//! graphs whose expandable vertices may be blown up into cliques; `H_6..H_8`
//! are single graphs. The fixed graphs are read from `fixtures/h_graphs.txt`.

use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use super::comb::{add_clique, build_comb, recognize_comb, CombDescription};
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

const FIXTURE: &str = include_str!("../../fixtures/h_graphs.txt");

/// One of the fixed graphs `H_1..H_8` with its vertex labels.
#[derive(Clone, Debug)]
pub struct HPattern {
    pub index: usize,
    pub labels: Vec<String>,
    /// Positions (into `labels`) of the expandable vertices, in label order.
    pub expandable: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl HPattern {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.labels.len(), &self.edges).expect("fixture edges are valid")
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

static PATTERNS: LazyLock<Vec<HPattern>> = LazyLock::new(|| {
    let mut out = Vec::new();
    for line in FIXTURE.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, rest) = line.split_once(':').expect("fixture line has a name");
        let (verts, edges) = rest.split_once('|').expect("fixture line has edges");
        let index: usize = name.trim_start_matches('H').parse().expect("fixture index");
        let mut labels = Vec::new();
        let mut expandable = Vec::new();
        for (i, tok) in verts.split_whitespace().enumerate() {
            match tok.strip_suffix('*') {
                Some(l) => {
                    expandable.push(i);
                    labels.push(l.to_string());
                }
                None => labels.push(tok.to_string()),
            }
        }
        let pos = |l: &str| labels.iter().position(|x| x == l).expect("edge endpoint listed");
        let edges = edges
            .split_whitespace()
            .map(|e| {
                let (a, b) = e.split_once('-').expect("edge a-b");
                (pos(a), pos(b))
            })
            .collect();
        out.push(HPattern {
            index,
            labels,
            expandable,
            edges,
        });
    }
    assert_eq!(
        out.iter().map(|p| p.index).collect::<Vec<_>>(),
        (1..=8).collect::<Vec<_>>()
    );
    out
});

/// The fixed graph `H_index` for `1 <= index <= 8`.
pub fn h_pattern(index: usize) -> Result<&'static HPattern> {
    if !(1..=8).contains(&index) {
        return Err(Error::argument(format!("no fixed graph H{index}; index must be 1..=8")));
    }
    Ok(&PATTERNS[index - 1])
}

/// A member of `H_0 ∪ ... ∪ H_8`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HExpansion {
    /// `H_0`: a pointed generalized comb.
    Comb { comb: CombDescription },
    /// `H_1..H_5` with the clique size of each expandable vertex, in label order.
    Expanded { index: usize, cliques: Vec<usize> },
    /// `H_6..H_8`.
    Fixed { index: usize },
}

impl HExpansion {
    /// `H_index` itself: all cliques of size one.
    pub fn plain(index: usize) -> Result<Self> {
        match index {
            1..=5 => Ok(HExpansion::Expanded {
                index,
                cliques: vec![1; h_pattern(index)?.expandable.len()],
            }),
            6..=8 => Ok(HExpansion::Fixed { index }),
            _ => Err(Error::argument(format!("H{index} has no plain member"))),
        }
    }

    pub fn index(&self) -> usize {
        match self {
            HExpansion::Comb { .. } => 0,
            HExpansion::Expanded { index, .. } | HExpansion::Fixed { index } => *index,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            HExpansion::Comb { comb } => {
                comb.validate()?;
                if !comb.is_pointed() {
                    return Err(Error::argument("H0 members are pointed combs"));
                }
                Ok(())
            }
            HExpansion::Expanded { index, cliques } => {
                if !(1..=5).contains(index) {
                    return Err(Error::argument(format!("H{index} has no expandable vertices")));
                }
                let want = h_pattern(*index)?.expandable.len();
                if cliques.len() != want {
                    return Err(Error::argument(format!(
                        "H{index} has {want} expandable vertices, got {} clique sizes",
                        cliques.len()
                    )));
                }
                if cliques.contains(&0) {
                    return Err(Error::argument("expanded cliques must be non-empty"));
                }
                Ok(())
            }
            HExpansion::Fixed { index } => {
                if !(6..=8).contains(index) {
                    return Err(Error::argument(format!("H{index} is not a fixed family")));
                }
                Ok(())
            }
        }
    }

    /// Vertex ids of each labelled vertex (a clique for expandable ones), in
    /// label order. Not defined for `H_0`.
    pub fn layout(&self) -> Result<Vec<Vec<usize>>> {
        self.validate()?;
        let sizes = match self {
            HExpansion::Comb { .. } => {
                return Err(Error::argument("H0 members use the comb layout"));
            }
            HExpansion::Expanded { index, cliques } => {
                let pat = h_pattern(*index)?;
                let mut sizes = vec![1; pat.labels.len()];
                for (&pos, &s) in pat.expandable.iter().zip(cliques) {
                    sizes[pos] = s;
                }
                sizes
            }
            HExpansion::Fixed { index } => vec![1; h_pattern(*index)?.labels.len()],
        };
        let mut next = 0;
        Ok(sizes
            .iter()
            .map(|&s| {
                let block: Vec<usize> = (next..next + s).collect();
                next += s;
                block
            })
            .collect())
    }
}

pub fn build_h(e: &HExpansion) -> Result<Graph> {
    e.validate()?;
    if let HExpansion::Comb { comb } = e {
        return build_comb(comb);
    }
    let pat = h_pattern(e.index())?;
    let layout = e.layout()?;
    let n = layout.iter().map(Vec::len).sum();
    let mut g = Graph::empty(n);
    for block in &layout {
        add_clique(&mut g, block);
    }
    for &(a, b) in &pat.edges {
        for &x in &layout[a] {
            for &y in &layout[b] {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

/// Compositions of `total` into `parts` positive summands, in lexicographic order.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Some member of `H_0 ∪ ... ∪ H_8` isomorphic to `g`, with the least index.
///
/// `H_0` is answered by the comb recognizer. For `H_1..H_5` every clique-size
/// assignment with the right total order is built and compared by canonical
/// form; the fixed families are compared directly.
pub fn recognize_h_union(g: &Graph) -> Option<HExpansion> {
    if !g.is_connected() {
        return None;
    }
    if let Some(comb) = recognize_comb(g) {
        if comb.is_pointed() {
            return Some(HExpansion::Comb { comb });
        }
    }
    let n = g.order();
    let degrees = g.degree_sequence();
    let edges = g.edge_count();
    let mut form: Option<String> = None;
    let mut matches = |cand: &Graph| -> bool {
        if cand.edge_count() != edges || cand.degree_sequence() != degrees {
            return false;
        }
        let f = form.get_or_insert_with(|| canonical_form(g));
        canonical_form(cand) == *f
    };
    for index in 1..=8 {
        let pat = h_pattern(index).expect("index in range");
        let base = pat.labels.len();
        if index <= 5 {
            let u = pat.expandable.len();
            if n + u < base {
                continue;
            }
            for cliques in compositions(n + u - base, u) {
                let e = HExpansion::Expanded { index, cliques };
                if matches(&build_h(&e).expect("valid expansion")) {
                    return Some(e);
                }
            }
        } else if n == base && matches(&pat.graph()) {
            return Some(HExpansion::Fixed { index });
        }
    }
    None
}
