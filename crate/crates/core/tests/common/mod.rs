//! Independent oracles and random generators shared by the integration tests.
//! Nothing here calls into the crate's canonical labeller, matcher or
//! recognizers.
#![allow(dead_code)]

use std::collections::HashSet;

use combclass::halin::FanCycleSystem;
use combclass::structures::{CombDescription, FatDescription, HExpansion};
use combclass::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// isomorphism

/// Upper-triangle adjacency bits of `g` under `order` (position -> vertex).
fn code(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    c
}

fn for_each_perm(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_perm(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Canonical code: least adjacency code over orderings that list vertices by
/// an isomorphism-invariant key (degree, then sorted neighbour degrees).
/// Order at most 11.
pub fn brute_canon(g: &Graph) -> (usize, u64) {
    let n = g.order();
    assert!(n <= 11);
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| key(v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match groups.last_mut() {
            Some(last) if key(last[0]) == key(v) => last.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    fn rec(g: &Graph, groups: &[Vec<usize>], prefix: &mut Vec<usize>, best: &mut u64) {
        let Some((first, rest)) = groups.split_first() else {
            *best = (*best).min(code(g, prefix));
            return;
        };
        let mut items = first.clone();
        for_each_perm(&mut items, 0, &mut |p| {
            let len = prefix.len();
            prefix.extend_from_slice(p);
            rec(g, rest, prefix, best);
            prefix.truncate(len);
        });
    }
    rec(g, &groups, &mut Vec::new(), &mut best);
    (n, best)
}

/// Isomorphism by trying every bijection. Order at most 8.
pub fn brute_iso(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    assert!(n <= 8);
    let target = code(b, &(0..n).collect::<Vec<_>>());
    let mut found = false;
    for_each_perm(&mut (0..n).collect(), 0, &mut |p| {
        found |= code(a, p) == target;
    });
    found
}

fn connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if g.has_edge(v, u) && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Every labelled graph on `n <= 6` vertices, connected ones kept, one per
/// isomorphism class.
pub fn connected_classes_bruteforce(n: usize) -> Vec<Graph> {
    assert!(n <= 6);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if connected(&g) && seen.insert(brute_canon(&g)) {
            out.push(g);
        }
    }
    out
}

/// Connected graphs on `n` vertices, grown from those on `n - 1` by adding a
/// vertex with every non-empty neighbourhood (a connected graph always has a
/// vertex whose removal keeps it connected) and deduplicated by
/// [`brute_canon`].
pub fn connected_classes_by_extension(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..1 << (k - 1) {
                let mut h = Graph::empty(k);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, k - 1);
                    }
                }
                if seen.insert(brute_canon(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

// ---------------------------------------------------------------------------
// Hamiltonicity

/// Hamiltonian cycle existence by subset dynamic programming. Order at most 16.
pub fn has_hamiltonian_cycle(g: &Graph) -> bool {
    let n = g.order();
    assert!(n <= 16);
    if n < 3 {
        return false;
    }
    let full = (1usize << n) - 1;
    // reach[mask] = set of end vertices of paths from 0 covering mask
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || reach[mask] == 0 {
            continue;
        }
        for v in 0..n {
            if reach[mask] >> v & 1 == 0 {
                continue;
            }
            for u in 0..n {
                if mask >> u & 1 == 0 && g.has_edge(v, u) {
                    reach[mask | 1 << u] |= 1 << u;
                }
            }
        }
    }
    (1..n).any(|v| reach[full] >> v & 1 == 1 && g.has_edge(v, 0))
}

// ---------------------------------------------------------------------------
// planarity by Kuratowski subdivision search

/// Whether internally disjoint paths realise every pair, internal vertices
/// drawn from outside `used`.
fn route(g: &Graph, pairs: &[(usize, usize)], used: &mut Vec<bool>) -> bool {
    let Some((&(a, b), rest)) = pairs.split_first() else {
        return true;
    };
    fn extend(g: &Graph, cur: usize, b: usize, rest: &[(usize, usize)], used: &mut Vec<bool>) -> bool {
        if g.has_edge(cur, b) && route(g, rest, used) {
            return true;
        }
        for u in g.neighbors(cur).collect::<Vec<_>>() {
            if used[u] {
                continue;
            }
            used[u] = true;
            if extend(g, u, b, rest, used) {
                return true;
            }
            used[u] = false;
        }
        false
    }
    extend(g, a, b, rest, used)
}

fn subsets(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if rec(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, k, 0, &mut Vec::new(), f)
}

fn branch_routing(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.order()];
    for &v in branch {
        used[v] = true;
    }
    route(g, pairs, &mut used)
}

pub fn has_k5_subdivision(g: &Graph) -> bool {
    let cand: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 4).collect();
    subsets(&cand, 5, &mut |s| {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (s[i], s[j]))).collect();
        branch_routing(g, s, &pairs)
    })
}

pub fn has_k33_subdivision(g: &Graph) -> bool {
    let cand: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    subsets(&cand, 6, &mut |s| {
        // s[0] on side A with two of the other five
        let others = &s[1..];
        subsets(others, 2, &mut |pick| {
            let a = [s[0], pick[0], pick[1]];
            let b: Vec<usize> = others.iter().copied().filter(|v| !pick.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).collect();
            branch_routing(g, s, &pairs)
        })
    })
}

/// Kuratowski: planar iff no subdivision of K5 or K3,3.
pub fn is_planar(g: &Graph) -> bool {
    !has_k5_subdivision(g) && !has_k33_subdivision(g)
}

// ---------------------------------------------------------------------------
// exhaustive instances

/// All sequences of `parts` positive integers with sum at most `max_total`.
pub fn sequences(parts: usize, max_total: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=max_total.saturating_sub(parts - 1) {
        for mut rest in sequences(parts - 1, max_total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every generalized comb on at most `max_order` vertices, one per multiset of
/// (root, leaf) pairs and base size.
pub fn all_combs(max_order: usize) -> Vec<CombDescription> {
    let mut out = Vec::new();
    for m in 3..=max_order / 2 {
        for roots in sequences(m, max_order) {
            for leaves in sequences(m, max_order) {
                let pairs: Vec<(usize, usize)> = roots.iter().copied().zip(leaves.iter().copied()).collect();
                if !pairs.windows(2).all(|w| w[0] <= w[1]) {
                    continue;
                }
                let covered: usize = roots.iter().sum();
                let leaf_total: usize = leaves.iter().sum();
                for base in covered..=max_order.saturating_sub(leaf_total) {
                    out.push(CombDescription::new(base, roots.clone(), leaves.clone()).unwrap());
                }
            }
        }
    }
    out
}

pub fn all_h(max_order: usize) -> Vec<HExpansion> {
    let plain = [0, 5, 6, 6, 6, 7];
    let expandable = [0, 3, 2, 1, 3, 1];
    let mut out: Vec<HExpansion> = all_combs(max_order)
        .into_iter()
        .filter(|c| c.is_pointed())
        .map(|comb| HExpansion::Comb { comb })
        .collect();
    for index in 1..=5 {
        let budget = max_order - plain[index] + expandable[index];
        for cliques in sequences(expandable[index], budget) {
            out.push(HExpansion::Expanded { index, cliques });
        }
    }
    out.extend((6..=8).map(|index| HExpansion::Fixed { index }));
    out
}

pub fn all_fat(max_order: usize, min_param: usize) -> Vec<FatDescription> {
    let mut out = Vec::new();
    for k in min_param..=max_order {
        out.extend(sequences(k, max_order).into_iter().map(|s| FatDescription::path(s).unwrap()));
    }
    for k in (min_param + 1).max(3)..=max_order {
        out.extend(sequences(k, max_order).into_iter().map(|s| FatDescription::cycle(s).unwrap()));
    }
    out
}

// ---------------------------------------------------------------------------
// random instances

pub fn random_pointed_comb(rng: &mut ChaCha8Rng, max_order: usize) -> CombDescription {
    loop {
        let m = rng.gen_range(3..=5);
        let roots: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=3)).collect();
        let base = roots.iter().sum::<usize>() + rng.gen_range(0..=2);
        if base + m <= max_order {
            return CombDescription::pointed(base, roots).unwrap();
        }
    }
}

pub fn random_comb(rng: &mut ChaCha8Rng, max_order: usize) -> CombDescription {
    loop {
        let m = rng.gen_range(3..=4);
        let roots: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=2)).collect();
        let leaves: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=2)).collect();
        let base = roots.iter().sum::<usize>() + rng.gen_range(0..=1);
        let d = CombDescription::new(base, roots, leaves).unwrap();
        if d.order() <= max_order {
            return d;
        }
    }
}

/// Member of `H_0 ∪ ... ∪ H_8` with at most `max_order` vertices.
pub fn random_h(rng: &mut ChaCha8Rng, max_order: usize) -> HExpansion {
    // plain orders of H1..H5 are 5, 6, 6, 6, 7
    let plain = [0, 5, 6, 6, 6, 7];
    let expandable = [0, 3, 2, 1, 3, 1];
    loop {
        let index = rng.gen_range(0..=8);
        match index {
            0 => return HExpansion::Comb { comb: random_pointed_comb(rng, max_order) },
            1..=5 => {
                let cliques: Vec<usize> = (0..expandable[index]).map(|_| rng.gen_range(1..=4)).collect();
                let order = plain[index] + cliques.iter().sum::<usize>() - cliques.len();
                if order <= max_order {
                    return HExpansion::Expanded { index, cliques };
                }
            }
            _ => return HExpansion::Fixed { index },
        }
    }
}

pub fn random_fat(rng: &mut ChaCha8Rng, params: std::ops::RangeInclusive<usize>, max_size: usize) -> FatDescription {
    let l = rng.gen_range(params);
    if rng.gen_bool(0.5) {
        FatDescription::path((0..l).map(|_| rng.gen_range(1..=max_size)).collect()).unwrap()
    } else {
        FatDescription::cycle((0..=l).map(|_| rng.gen_range(1..=max_size)).collect()).unwrap()
    }
}

/// Random 3-connected fat structure with parameter in `params`: path ends
/// free, interior cliques of size at least 3; cycles with at most two
/// singleton cliques, consecutive.
pub fn random_3connected_fat(rng: &mut ChaCha8Rng, params: std::ops::RangeInclusive<usize>, max_size: usize) -> FatDescription {
    let l = rng.gen_range(params);
    if rng.gen_bool(0.5) {
        let sizes = (0..l)
            .map(|i| {
                if i == 0 || i == l - 1 {
                    rng.gen_range(1..=max_size)
                } else {
                    rng.gen_range(3..=max_size.max(3))
                }
            })
            .collect();
        FatDescription::path(sizes).unwrap()
    } else {
        let k = l + 1;
        let singles = rng.gen_range(0..=2);
        let start = rng.gen_range(0..k);
        let sizes = (0..k)
            .map(|i| {
                if (i + k - start) % k < singles {
                    1
                } else {
                    rng.gen_range(2..=max_size.max(2))
                }
            })
            .collect();
        FatDescription::cycle(sizes).unwrap()
    }
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let mut h = Graph::empty(g.order());
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    h
}

pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A random graph with a fan-cycle system satisfying all six axioms, plus
/// random extra edges, randomly relabelled.
pub fn random_fan_cycle_system(rng: &mut ChaCha8Rng) -> (Graph, FanCycleSystem) {
    loop {
        let k = rng.gen_range(3..=9);
        let mut paths: Vec<Vec<usize>> = Vec::new();
        let mut uncovered = Vec::new();
        let mut i = 0;
        while i < k {
            let room = k - i;
            if room >= 2 && rng.gen_bool(0.5) {
                let len = rng.gen_range(2..=room.min(4));
                let mut q: Vec<usize> = (i..i + len).collect();
                if rng.gen_bool(0.5) {
                    q.reverse();
                }
                paths.push(q);
                i += len;
            } else {
                uncovered.push(i);
                i += 1;
            }
        }
        let m = paths.len();
        if uncovered.len() + m < 3 {
            continue;
        }
        let n = k + 1 + m;
        let apex = k;
        let attach: Vec<usize> = (k + 1..n).collect();
        let mut h = Graph::empty(n);
        for v in 0..k {
            h.add_edge(v, (v + 1) % k);
        }
        for &w in uncovered.iter().chain(&attach) {
            h.add_edge(apex, w);
        }
        for (q, &x) in paths.iter().zip(&attach) {
            for &u in q {
                h.add_edge(x, u);
            }
        }
        let p = rng.gen_range(0.0..0.3);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    h.add_edge(u, v);
                }
            }
        }
        let perm = random_perm(rng, n);
        let f = FanCycleSystem {
            cycle: (0..k).map(|v| perm[v]).collect(),
            apex: perm[apex],
            paths: paths.iter().map(|q| q.iter().map(|&v| perm[v]).collect()).collect(),
            attach: attach.iter().map(|&v| perm[v]).collect(),
        };
        return (relabel(&h, &perm), f);
    }
}

/// Random tree on at most `max_order` vertices without degree-2 vertices,
/// with its leaves; vertex 0 is internal.
pub fn random_reduced_tree(rng: &mut ChaCha8Rng, max_order: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    let mut n = 4;
    let mut leaves: Vec<usize> = vec![1, 2, 3];
    let mut internal = vec![0];
    let target = rng.gen_range(4..=max_order);
    while n < target {
        if n + 2 <= target && rng.gen_bool(0.5) {
            let i = rng.gen_range(0..leaves.len());
            let v = leaves.swap_remove(i);
            internal.push(v);
            edges.push((v, n));
            edges.push((v, n + 1));
            leaves.extend([n, n + 1]);
            n += 2;
        } else {
            let v = internal[rng.gen_range(0..internal.len())];
            edges.push((v, n));
            leaves.push(n);
            n += 1;
        }
    }
    (edges, leaves)
}

/// Leaves of a tree in depth-first order from vertex 0; a cyclic order in
/// which every subtree's leaves are consecutive.
pub fn dfs_leaf_order(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut out = Vec::new();
    let mut stack = vec![(0, usize::MAX)];
    while let Some((v, parent)) = stack.pop() {
        if adj[v].len() == 1 {
            out.push(v);
        }
        for &u in adj[v].iter().rev() {
            if u != parent {
                stack.push((u, v));
            }
        }
    }
    out
}

pub fn union_graph(n: usize, tree: &[(usize, usize)], cycle: &[usize]) -> Graph {
    let mut g = Graph::empty(n);
    for &(u, v) in tree {
        g.add_edge(u, v);
    }
    for i in 0..cycle.len() {
        g.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    g
}
