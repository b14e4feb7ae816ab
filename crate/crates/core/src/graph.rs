//! Simple undirected graphs on vertices `0..n`, stored as adjacency bit rows.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Word-level helpers for the adjacency rows.
pub(crate) mod bits {
    #[inline]
    pub fn words_for(n: usize) -> usize {
        n.div_ceil(64).max(1)
    }

    #[inline]
    pub fn test(words: &[u64], i: usize) -> bool {
        words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn set(words: &mut [u64], i: usize) {
        words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn clear(words: &mut [u64], i: usize) {
        words[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn count(words: &[u64]) -> usize {
        words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Mask with bits `0..n` set.
    pub fn iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
        words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// A set of vertex indices, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn check_within(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= g.order() => Err(Error::argument(format!(
                "vertex {v} out of range for graph of order {}",
                g.order()
            ))),
            _ => Ok(()),
        }
    }
}

impl From<&[usize]> for VertexSet {
    fn from(s: &[usize]) -> Self {
        VertexSet::new(s.iter().copied())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Simple undirected graph. Row `v` holds the neighbourhood of `v` as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Checked construction from an edge list. Rejects loops and out-of-range endpoints;
    /// repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge {u}-{v} out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds the edge `u-v`. Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge {u}-{v}");
        let w = self.words;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::clear(&mut self.rows[u * w..(u + 1) * w], v);
        bits::clear(&mut self.rows[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Subgraph induced by `set`, relabelled `0..|set|` in increasing vertex order.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph> {
        set.check_within(self)?;
        Ok(self.induced_unchecked(set.members()))
    }

    /// Subgraph induced by `vs` (distinct, in range), vertex `vs[i]` becoming `i`.
    pub(crate) fn induced_unchecked(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::empty(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Graph with vertex `v` deleted; later vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_unchecked(&keep)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A single vertex counts as connected; the empty graph does not.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![0u64; self.words];
        bits::set(&mut seen, 0);
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !bits::test(&seen, v) {
                    bits::set(&mut seen, v);
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Whether deleting `v` disconnects the graph.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        if self.n <= 2 {
            return false;
        }
        let start = if v == 0 { 1 } else { 0 };
        let mut seen = vec![0u64; self.words];
        bits::set(&mut seen, v);
        bits::set(&mut seen, start);
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if !bits::test(&seen, w) {
                    bits::set(&mut seen, w);
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached != self.n - 1
    }

    /// Minimum number of vertices whose deletion disconnects the graph, with
    /// `K_n` giving `n - 1` and `K_1` giving 0.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::argument("vertex connectivity of the empty graph"));
        }
        if self.n == 1 || !self.is_connected() {
            return Ok(0);
        }
        let mut best = (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0);
        let mut flow = VertexFlow::new(self);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    continue;
                }
                let k = flow.local_connectivity(u, v, best);
                best = best.min(k);
                if best == 0 {
                    return Ok(0);
                }
            }
        }
        Ok(best)
    }

    /// Classes of vertices with equal closed neighbourhoods, ordered by smallest member.
    pub fn closed_twin_classes(&self) -> Vec<Vec<usize>> {
        let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let mut key = self.row(v).to_vec();
            bits::set(&mut key, v);
            match index.get(&key) {
                Some(&c) => classes[c].push(v),
                None => {
                    index.insert(key, classes.len());
                    classes.push(vec![v]);
                }
            }
        }
        classes
    }

    /// Partite sets if the graph is complete multipartite (complement is a disjoint
    /// union of cliques), ordered by smallest member; `None` otherwise.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        if self.n == 0 {
            return None;
        }
        let parts = self.complement().components();
        if parts.iter().any(|p| !self.is_independent(p)) {
            return None;
        }
        let total: usize = parts.iter().map(Vec::len).sum();
        let inside: usize = parts.iter().map(|p| p.len() * p.len()).sum();
        // every cross pair must be an edge
        if self.edge_count() * 2 != total * total - inside {
            return None;
        }
        Some(parts)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.n, self.edges())
    }
}

/// Unit vertex-capacity flow network: vertex `v` becomes `2v -> 2v+1`.
struct VertexFlow {
    size: usize,
    base: Vec<i32>,
    cap: Vec<i32>,
}

impl VertexFlow {
    fn new(g: &Graph) -> Self {
        let size = 2 * g.order();
        let big = g.order() as i32;
        let mut base = vec![0; size * size];
        for v in 0..g.order() {
            base[(2 * v) * size + 2 * v + 1] = 1;
            for w in g.neighbors(v) {
                base[(2 * v + 1) * size + 2 * w] = big;
            }
        }
        VertexFlow {
            size,
            cap: base.clone(),
            base,
        }
    }

    /// Maximum number of internally disjoint `s`-`t` paths, stopping early at `limit`.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base);
        let n = self.size;
        let (src, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut prev = vec![usize::MAX; n];
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[src] = src;
            let mut queue = std::collections::VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for v in 0..n {
                    if prev[v] == usize::MAX && self.cap[u * n + v] > 0 {
                        prev[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut v = sink;
            while v != src {
                let u = prev[v];
                self.cap[u * n + v] -= 1;
                self.cap[v * n + u] += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fat_path(sizes: &[usize]) -> Graph {
        let n: usize = sizes.iter().sum();
        let mut g = Graph::empty(n);
        let mut start = 0;
        let mut prev: Vec<usize> = Vec::new();
        for &s in sizes {
            let cur: Vec<usize> = (start..start + s).collect();
            for (i, &u) in cur.iter().enumerate() {
                for &v in &cur[i + 1..] {
                    g.add_edge(u, v);
                }
                for &p in &prev {
                    g.add_edge(u, p);
                }
            }
            prev = cur;
            start += s;
        }
        g
    }

    #[test]
    fn induced_examples() {
        let k4 = Graph::complete(4);
        let t = k4.induced(&VertexSet::new([0, 2, 3])).unwrap();
        assert_eq!(t, Graph::complete(3));
        let p5 = Graph::path(5);
        let iso = p5.induced(&VertexSet::new([0, 2, 4])).unwrap();
        assert_eq!(iso.edge_count(), 0);
        assert_eq!(iso.order(), 3);
        assert!(p5.induced(&VertexSet::new([1, 7])).is_err());
        let all = VertexSet::new(0..5);
        assert_eq!(p5.induced(&all).unwrap(), p5);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(Graph::complete(4).vertex_connectivity().unwrap(), 3);
        assert_eq!(Graph::path(5).vertex_connectivity().unwrap(), 1);
        assert_eq!(Graph::cycle(6).vertex_connectivity().unwrap(), 2);
        assert_eq!(Graph::empty(1).vertex_connectivity().unwrap(), 0);
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).vertex_connectivity().is_err());
        assert_eq!(Graph::empty(3).vertex_connectivity().unwrap(), 0);
        // K_{3,3}
        let mut k33 = Graph::empty(6);
        for a in 0..3 {
            for b in 3..6 {
                k33.add_edge(a, b);
            }
        }
        assert_eq!(k33.vertex_connectivity().unwrap(), 3);
    }

    #[test]
    fn twin_classes() {
        assert_eq!(Graph::complete(4).closed_twin_classes(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(Graph::path(5).closed_twin_classes().len(), 5);
        let g = fat_path(&[2, 1, 1, 1, 2]);
        assert_eq!(
            g.closed_twin_classes(),
            vec![vec![0, 1], vec![2], vec![3], vec![4], vec![5, 6]]
        );
    }

    #[test]
    fn multipartite() {
        let c4 = Graph::cycle(4);
        let parts = c4.complete_multipartite_parts().unwrap();
        assert_eq!(parts, vec![vec![0, 2], vec![1, 3]]);
        assert!(Graph::path(4).complete_multipartite_parts().is_none());
        // K_{1,1,2}: K4 minus the edge 2-3
        let mut g = Graph::complete(4);
        g.remove_edge(2, 3);
        let parts = g.complete_multipartite_parts().unwrap();
        let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2]);
    }

    #[test]
    fn cut_vertices() {
        let p = Graph::path(4);
        assert!(!p.is_cut_vertex(0));
        assert!(p.is_cut_vertex(1));
        assert!(!Graph::cycle(5).is_cut_vertex(2));
    }
}
