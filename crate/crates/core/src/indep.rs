//! Independence numbers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{find_induced, make_pattern, Family, PatternSpec};
use crate::structures::{build_fat, recognize_fat_cliques, FatDescription, FatKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaMethod {
    Bruteforce,
    FatFormula,
    Dispatcher,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaResult {
    pub alpha: usize,
    pub witness: VertexSet,
    pub method: AlphaMethod,
}

/// Largest order handled by [`alpha_bruteforce`]; vertex sets are single words.
pub const MAX_BRUTEFORCE_ORDER: usize = 64;

fn checked(g: &Graph, witness: VertexSet, method: AlphaMethod) -> Result<AlphaResult> {
    if !g.is_independent(witness.members()) {
        return Err(Error::Inconsistency {
            graph6: crate::write_graph6(g),
            message: format!("witness {:?} is not independent", witness.members()),
        });
    }
    Ok(AlphaResult {
        alpha: witness.len(),
        witness,
        method,
    })
}

struct Search {
    closed: Vec<u64>,
    best: u64,
    best_len: u32,
}

impl Search {
    // Some vertex of N[v] lies in every maximal independent set of the
    // candidates, so branching over N[v] for a v of least degree is exhaustive.
    fn run(&mut self, chosen: u64, cand: u64) {
        let size = chosen.count_ones();
        if cand == 0 {
            if size > self.best_len {
                self.best = chosen;
                self.best_len = size;
            }
            return;
        }
        if size + cand.count_ones() <= self.best_len {
            return;
        }
        let mut pivot = cand.trailing_zeros() as usize;
        let mut low = u32::MAX;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.closed[v] & cand).count_ones();
            if d < low {
                low = d;
                pivot = v;
            }
        }
        let mut branch = self.closed[pivot] & cand;
        while branch != 0 {
            let u = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            self.run(chosen | 1 << u, cand & !self.closed[u]);
        }
    }
}

/// Exact independence number by branch and bound.
pub fn alpha_bruteforce(g: &Graph) -> Result<AlphaResult> {
    let n = g.order();
    if n > MAX_BRUTEFORCE_ORDER {
        return Err(Error::argument(format!(
            "brute force handles at most {MAX_BRUTEFORCE_ORDER} vertices, got {n}"
        )));
    }
    let closed = (0..n)
        .map(|v| g.neighbors(v).fold(1u64 << v, |acc, u| acc | 1 << u))
        .collect();
    let mut s = Search {
        closed,
        best: 0,
        best_len: 0,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    s.run(0, all);
    let witness = (0..n).filter(|&v| s.best >> v & 1 == 1).collect();
    checked(g, witness, AlphaMethod::Bruteforce)
}

/// Indices of the fundamental cliques an optimal independent set meets:
/// every other clique, and for a cycle never both the first and the last.
fn alternate_cliques(kind: FatKind, count: usize) -> impl Iterator<Item = usize> {
    let take = match kind {
        FatKind::Path => count.div_ceil(2),
        FatKind::Cycle => count / 2,
    };
    (0..take).map(|i| 2 * i)
}

fn fat_witness(kind: FatKind, cliques: &[Vec<usize>]) -> VertexSet {
    alternate_cliques(kind, cliques.len()).map(|i| cliques[i][0]).collect()
}

/// Independence number of a fat path or cycle from its clique sequence.
pub fn alpha_fat(d: &FatDescription) -> Result<AlphaResult> {
    let g = build_fat(d)?;
    checked(&g, fat_witness(d.kind, &d.layout()), AlphaMethod::FatFormula)
}

/// Independence number of a graph recognized as a fat path or cycle, with the
/// witness in the graph's own labels.
pub fn alpha_fat_graph(g: &Graph) -> Result<AlphaResult> {
    let (d, cliques) = recognize_fat_cliques(g, 1)
        .ok_or_else(|| Error::precondition("graph is not a fat path or fat cycle with parameter >= 3"))?;
    checked(g, fat_witness(d.kind, &cliques), AlphaMethod::FatFormula)
}

/// Independence number of a connected {K1,3, B1,1}-free graph: graphs with an
/// induced P5 are fat structures with parameter at least 5, the rest go to
/// brute force.
pub fn alpha_b11free(g: &Graph) -> Result<AlphaResult> {
    if !g.is_connected() {
        return Err(Error::precondition("graph is not connected"));
    }
    let family = Family::new(&[PatternSpec::Star13, PatternSpec::b(1, 1)]);
    if let Some(v) = family.violation(g) {
        return Err(Error::precondition(format!(
            "graph contains an induced {} at {:?}",
            v.pattern, v.embedding.0
        )));
    }
    if find_induced(g, &make_pattern(PatternSpec::Path(5))).is_none() {
        let r = alpha_bruteforce(g)?;
        return checked(g, r.witness, AlphaMethod::Dispatcher);
    }
    let Some((d, cliques)) = recognize_fat_cliques(g, 5) else {
        return Err(Error::Inconsistency {
            graph6: crate::write_graph6(g),
            message: "{K1,3, B1,1}-free with an induced P5 but not a fat structure with parameter >= 5"
                .into(),
        });
    };
    checked(g, fat_witness(d.kind, &cliques), AlphaMethod::FatFormula)
}
