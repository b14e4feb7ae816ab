//! Generation of all connected graphs of a given order, one per isomorphism class.
//!
//! Canonical augmentation by vertex addition: a child `G` of parent `P` is `P`
//! plus a new vertex `x` adjacent to a non-empty subset of `V(P)`. The child is
//! kept only if `x` lies in the orbit of the canonical deletion vertex of `G`:
//! among the non-cut vertices with the lexicographically largest
//! `(degree, sorted neighbour degrees)` key, the one that comes first in the
//! canonical order. Every connected graph then has exactly one parent class,
//! and duplicates can only come from the same parent, where they are removed
//! by comparing canonical forms.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling, same_orbit};
pub use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order generated in-process.
pub const MAX_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumConfig {
    pub n: usize,
    pub connected_only: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl EnumConfig {
    pub fn connected(n: usize) -> Self {
        EnumConfig {
            n,
            connected_only: true,
            jobs: None,
        }
    }
}

/// All connected graphs on `n` vertices (`1 <= n <= 9`), canonically labelled,
/// in a fixed order that does not depend on the number of threads.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    enumerate(&EnumConfig::connected(n))
}

pub fn enumerate(config: &EnumConfig) -> Result<Vec<Graph>> {
    check_order(config)?;
    let pool = Pool::new(config.jobs)?;
    let mut level = vec![Graph::empty(1)];
    for _ in 1..config.n {
        level = pool.run(|| next_level(&level));
    }
    Ok(level)
}

/// Streams the graphs of `enumerate(config)` to `sink` in the same order,
/// holding only the parents in memory.
pub fn for_each(config: &EnumConfig, mut sink: impl FnMut(&Graph)) -> Result<()> {
    check_order(config)?;
    if config.n == 1 {
        sink(&Graph::empty(1));
        return Ok(());
    }
    let pool = Pool::new(config.jobs)?;
    let mut level = vec![Graph::empty(1)];
    for _ in 2..config.n {
        level = pool.run(|| next_level(&level));
    }
    for batch in level.chunks(256) {
        let kids: Vec<Vec<Graph>> = pool.run(|| batch.par_iter().map(children).collect());
        kids.iter().flatten().for_each(&mut sink);
    }
    Ok(())
}

fn check_order(config: &EnumConfig) -> Result<()> {
    if !config.connected_only {
        return Err(Error::argument(
            "only connected graphs are generated in-process",
        ));
    }
    if !(1..=MAX_ORDER).contains(&config.n) {
        return Err(Error::argument(format!(
            "order {} outside 1..={MAX_ORDER}",
            config.n
        )));
    }
    Ok(())
}

/// Optional dedicated rayon pool.
pub(crate) struct Pool(Option<rayon::ThreadPool>);

impl Pool {
    pub(crate) fn new(jobs: Option<usize>) -> Result<Self> {
        jobs.map(|j| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::argument(e.to_string()))
        })
        .transpose()
        .map(Pool)
    }

    pub(crate) fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match &self.0 {
            Some(p) => p.install(f),
            None => f(),
        }
    }
}

fn next_level(parents: &[Graph]) -> Vec<Graph> {
    let kids: Vec<Vec<Graph>> = parents.par_iter().map(children).collect();
    kids.into_iter().flatten().collect()
}

fn vertex_key(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Canonical children of one parent, in increasing order of the new vertex's
/// neighbourhood bitmask.
pub(crate) fn children(parent: &Graph) -> Vec<Graph> {
    let k = parent.order();
    assert!(k < 64, "augmentation masks are single words");
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << k) {
        let mut g = Graph::empty(k + 1);
        for (u, v) in parent.edges() {
            g.add_edge(u, v);
        }
        for u in 0..k {
            if mask >> u & 1 == 1 {
                g.add_edge(u, k);
            }
        }
        let new_key = vertex_key(&g, k);
        let mut tied = vec![k];
        let mut rejected = false;
        for v in 0..k {
            let key = vertex_key(&g, v);
            if key < new_key || g.is_cut_vertex(v) {
                continue;
            }
            if key > new_key {
                rejected = true;
                break;
            }
            tied.push(v);
        }
        if rejected {
            continue;
        }
        let lab = canonical_labeling(&g, None);
        if tied.len() > 1 {
            let chosen = *lab
                .order
                .iter()
                .find(|v| tied.contains(v))
                .expect("tied set is non-empty");
            if chosen != k && !same_orbit(&g, chosen, k) {
                continue;
            }
        }
        if seen.insert(lab.graph.clone()) {
            out.push(lab.graph);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(10).is_err());
        let cfg = EnumConfig {
            n: 4,
            connected_only: false,
            jobs: None,
        };
        assert!(enumerate(&cfg).is_err());
    }

    #[test]
    fn streaming_matches_collected() {
        let all = enumerate_connected(6).unwrap();
        let mut streamed = Vec::new();
        for_each(&EnumConfig::connected(6), |g| streamed.push(g.clone())).unwrap();
        assert_eq!(all, streamed);
        let mut one = Vec::new();
        for_each(&EnumConfig::connected(1), |g| one.push(g.clone())).unwrap();
        assert_eq!(one, vec![Graph::empty(1)]);
    }
}
