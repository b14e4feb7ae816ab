//! Canonical labelling by partition refinement with individualization.
//!
//! The search tree is the usual one: refine to an equitable ordered partition,
//! individualize each vertex of the first non-singleton cell, recurse. Leaves
//! are compared by their relabelled adjacency matrix and the largest wins.
//! Subtrees are pruned with automorphisms that fix the current prefix
//! pointwise; these come from pairs of equal leaves and from transpositions of
//! twins, which are seeded up front so that large cliques of twins cost one
//! branch instead of a factorial.

use crate::graph::{bits, Graph};
use crate::graph6::write_graph6;

/// Result of canonical labelling: `order[i]` is the vertex placed at position `i`.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    pub order: Vec<usize>,
    pub graph: Graph,
}

/// Canonical labelling of `g`. With `colors`, only colour-preserving
/// relabellings are considered and colour classes appear in increasing colour order.
pub fn canonical_labeling(g: &Graph, colors: Option<&[u32]>) -> CanonicalLabeling {
    let n = g.order();
    if n == 0 {
        return CanonicalLabeling {
            order: Vec::new(),
            graph: Graph::empty(0),
        };
    }
    let colors: Vec<u32> = match colors {
        Some(c) => {
            assert_eq!(c.len(), n, "one colour per vertex");
            c.to_vec()
        }
        None => vec![0; n],
    };
    let mut keys: Vec<u32> = colors.clone();
    keys.sort_unstable();
    keys.dedup();
    let cells: Vec<Vec<usize>> = keys
        .iter()
        .map(|&k| (0..n).filter(|&v| colors[v] == k).collect())
        .collect();

    let mut search = Search {
        g,
        colors: &colors,
        best: None,
        autos: twin_transpositions(g, &colors),
    };
    let mut prefix = Vec::new();
    search.explore(cells, &mut prefix);
    let (_, order) = search.best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    CanonicalLabeling {
        graph: g.permuted(&perm),
        order,
    }
}

/// graph6 string of the canonically relabelled graph; equal iff isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    write_graph6(&canonical_labeling(g, None).graph)
}

/// Whether some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let mark = |x: usize| -> Vec<u32> { (0..g.order()).map(|w| (w == x) as u32).collect() };
    canonical_labeling(g, Some(&mark(u))).graph == canonical_labeling(g, Some(&mark(v))).graph
}

fn twin_transpositions(g: &Graph, colors: &[u32]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut open: std::collections::HashMap<(Vec<u64>, u32), usize> = Default::default();
    let mut closed: std::collections::HashMap<(Vec<u64>, u32), usize> = Default::default();
    let transposition = |a: usize, b: usize| {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        p
    };
    for v in 0..n {
        let row = g.row(v).to_vec();
        let mut cl = row.clone();
        bits::set(&mut cl, v);
        // chaining consecutive members generates the full symmetric group on a class
        if let Some(prev) = open.insert((row, colors[v]), v) {
            out.push(transposition(prev, v));
        }
        if let Some(prev) = closed.insert((cl, colors[v]), v) {
            out.push(transposition(prev, v));
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    colors: &'a [u32],
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let target = cells[t].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &x in &target {
            if !explored.is_empty() && self.equivalent_to_explored(x, &explored, prefix) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(vec![x]);
            next.push(target.iter().copied().filter(|&y| y != x).collect());
            next.extend_from_slice(&cells[t + 1..]);
            prefix.push(x);
            self.explore(next, prefix);
            prefix.pop();
            explored.push(x);
        }
    }

    fn equivalent_to_explored(&self, x: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rx = find(&mut parent, x);
        explored.iter().any(|&y| find(&mut parent, y) == rx)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, self.colors, &order);
        match &self.best {
            Some((best, best_order)) if *best == cert => {
                let n = order.len();
                let mut gamma = vec![0; n];
                for i in 0..n {
                    gamma[order[i]] = best_order[i];
                }
                self.autos.push(gamma);
            }
            Some((best, _)) if *best > cert => {}
            _ => self.best = Some((cert, order)),
        }
    }
}

/// Colours in position order followed by the relabelled upper triangle.
fn certificate(g: &Graph, colors: &[u32], order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut out: Vec<u64> = order.iter().map(|&v| colors[v] as u64).collect();
    let mut acc = 0u64;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(order[i], order[j]) as u64;
            k += 1;
            if k == 64 {
                out.push(acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(acc << (64 - k));
    }
    out
}

/// Coarsest equitable refinement of an ordered partition. A cell is split by
/// the number of neighbours each member has in a splitter cell; fragments are
/// ordered by that count.
pub(crate) fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let words = g.words();
    let mut mask = vec![0u64; words];
    'restart: loop {
        for s in 0..cells.len() {
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &cells[s] {
                bits::set(&mut mask, v);
            }
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let counts: Vec<u32> = cells[c]
                    .iter()
                    .map(|&v| {
                        g.row(v)
                            .iter()
                            .zip(&mask)
                            .map(|(a, b)| (a & b).count_ones())
                            .sum()
                    })
                    .collect();
                if counts.iter().all(|&x| x == counts[0]) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    counts.into_iter().zip(cells[c].iter().copied()).collect();
                keyed.sort_unstable();
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        groups.push(Vec::new());
                        last = Some(k);
                    }
                    groups.last_mut().unwrap().push(v);
                }
                cells.splice(c..c + 1, groups);
                continue 'restart;
            }
        }
        return cells;
    }
}
