//! Fan-cycle systems and spanning Halin subgraphs.
//!
//! A fan-cycle system `(C; v; Q_1..Q_m; x_1..x_m)` consists of a cycle `C`, an
//! apex `v`, vertex-disjoint subpaths `Q_i` of `C` with at least two vertices
//! each, and attachment vertices `x_i`, such that `v` and the `x_i` are exactly
//! the vertices off `C`, `|V(C) - ∪Q_i| + m >= 3`, `v` sees every uncovered
//! cycle vertex and every `x_i`, and `x_i` sees all of `Q_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structures::{build_fat, build_h, h_pattern, FatDescription, FatKind, HExpansion};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanCycleSystem {
    pub cycle: Vec<usize>,
    pub apex: usize,
    pub paths: Vec<Vec<usize>>,
    pub attach: Vec<usize>,
}

/// The first axiom (numbered 1 to 6 as in the definition) that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: u8,
    pub message: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom ({}): {}", self.axiom, self.message)
    }
}

fn violated(axiom: u8, message: impl Into<String>) -> std::result::Result<(), AxiomViolation> {
    Err(AxiomViolation {
        axiom,
        message: message.into(),
    })
}

/// Checks that `cycle` is a cycle of `g`: at least three distinct vertices,
/// cyclically consecutive ones adjacent.
fn cycle_problem(g: &Graph, cycle: &[usize]) -> Option<String> {
    let n = g.order();
    if cycle.len() < 3 {
        return Some(format!("a cycle needs at least 3 vertices, got {}", cycle.len()));
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n {
            return Some(format!("vertex {v} out of range"));
        }
        if seen[v] {
            return Some(format!("vertex {v} repeated"));
        }
        seen[v] = true;
    }
    let k = cycle.len();
    (0..k)
        .map(|i| (cycle[i], cycle[(i + 1) % k]))
        .find(|&(a, b)| !g.has_edge(a, b))
        .map(|(a, b)| format!("{a}-{b} is not an edge"))
}

pub fn verify_fan_cycle_system(g: &Graph, f: &FanCycleSystem) -> std::result::Result<(), AxiomViolation> {
    let n = g.order();
    if let Some(p) = cycle_problem(g, &f.cycle) {
        return violated(1, p);
    }
    let k = f.cycle.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in f.cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut covered = vec![false; n];
    for (i, q) in f.paths.iter().enumerate() {
        if q.len() < 2 {
            return violated(2, format!("Q{} has {} vertices, needs at least 2", i + 1, q.len()));
        }
        for &v in q {
            if v >= n || pos[v] == usize::MAX {
                return violated(2, format!("Q{} vertex {v} is not on C", i + 1));
            }
            if covered[v] {
                return violated(2, format!("vertex {v} lies on two paths"));
            }
            covered[v] = true;
        }
        let step = |a: usize, b: usize| (pos[b] + k - pos[a]) % k;
        let forward = q.windows(2).all(|w| step(w[0], w[1]) == 1);
        let backward = q.windows(2).all(|w| step(w[1], w[0]) == 1);
        if !forward && !backward {
            return violated(2, format!("Q{} is not a subpath of C", i + 1));
        }
    }
    let m = f.paths.len();
    if f.attach.len() != m {
        return violated(3, format!("{m} paths but {} attachment vertices", f.attach.len()));
    }
    let mut off = vec![false; n];
    for &v in std::iter::once(&f.apex).chain(&f.attach) {
        if v >= n {
            return violated(3, format!("vertex {v} out of range"));
        }
        if pos[v] != usize::MAX {
            return violated(3, format!("vertex {v} lies on C"));
        }
        if off[v] {
            return violated(3, format!("vertex {v} used twice off C"));
        }
        off[v] = true;
    }
    if let Some(v) = (0..n).find(|&v| pos[v] == usize::MAX && !off[v]) {
        return violated(3, format!("vertex {v} is neither on C nor the apex or an attachment"));
    }
    let uncovered: Vec<usize> = f.cycle.iter().copied().filter(|&v| !covered[v]).collect();
    if uncovered.len() + m < 3 {
        return violated(
            4,
            format!("{} uncovered cycle vertices plus {m} paths is below 3", uncovered.len()),
        );
    }
    if let Some(&w) = uncovered.iter().chain(&f.attach).find(|&&w| !g.has_edge(f.apex, w)) {
        return violated(5, format!("apex {} is not adjacent to {w}", f.apex));
    }
    for (i, (q, &x)) in f.paths.iter().zip(&f.attach).enumerate() {
        if let Some(&u) = q.iter().find(|&&u| !g.has_edge(x, u)) {
            return violated(6, format!("x{} = {x} is not adjacent to {u} on Q{}", i + 1, i + 1));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalinCandidate {
    pub tree_edges: Vec<(usize, usize)>,
    pub cycle: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HalinReason {
    /// A tree or cycle edge is missing from the host.
    EdgeNotInGraph,
    /// The tree edges do not form a spanning tree.
    NotSpanningTree,
    /// Some tree vertex has degree 2.
    DegreeTwo,
    /// The tree has no vertex of degree at least 3.
    NoInternalVertex,
    /// The cycle is not a cycle exactly through the leaves of the tree.
    CycleNotOnLeaves,
    /// The leaves below some tree edge are not consecutive on the cycle.
    NotContiguous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalinViolation {
    pub reason: HalinReason,
    pub message: String,
}

impl fmt::Display for HalinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.reason, self.message)
    }
}

fn halin_err(reason: HalinReason, message: impl Into<String>) -> std::result::Result<(), HalinViolation> {
    Err(HalinViolation {
        reason,
        message: message.into(),
    })
}

/// Checks that `h` is a spanning Halin subgraph of `g`.
///
/// Planarity is checked through the leaf order: `T ∪ C` has the required
/// plane embedding exactly when, for every tree edge, the leaves on either
/// side of it form an arc of `C`.
pub fn verify_halin(g: &Graph, h: &HalinCandidate) -> std::result::Result<(), HalinViolation> {
    use HalinReason::*;
    let n = g.order();
    if let Some(&(u, v)) = h
        .tree_edges
        .iter()
        .find(|&&(u, v)| u >= n || v >= n || !g.has_edge(u, v))
    {
        return halin_err(EdgeNotInGraph, format!("tree edge {u}-{v} is not an edge of the graph"));
    }
    if n == 0 || h.tree_edges.len() != n - 1 {
        return halin_err(
            NotSpanningTree,
            format!("{} tree edges for {n} vertices", h.tree_edges.len()),
        );
    }
    let mut tree = Graph::empty(n);
    for &(u, v) in &h.tree_edges {
        if tree.has_edge(u, v) {
            return halin_err(NotSpanningTree, format!("tree edge {u}-{v} repeated"));
        }
        tree.add_edge(u, v);
    }
    if !tree.is_connected() {
        return halin_err(NotSpanningTree, "tree edges do not connect all vertices");
    }
    if let Some(v) = (0..n).find(|&v| tree.degree(v) == 2) {
        return halin_err(DegreeTwo, format!("vertex {v} has tree degree 2"));
    }
    if (0..n).all(|v| tree.degree(v) < 3) {
        return halin_err(NoInternalVertex, "the tree has no vertex of degree at least 3");
    }
    if let Some(p) = cycle_problem(g, &h.cycle) {
        let reason = if p.contains("not an edge") { EdgeNotInGraph } else { CycleNotOnLeaves };
        return halin_err(reason, p);
    }
    let mut leaves: Vec<usize> = (0..n).filter(|&v| tree.degree(v) == 1).collect();
    let mut on_cycle = h.cycle.clone();
    leaves.sort_unstable();
    on_cycle.sort_unstable();
    if leaves != on_cycle {
        return halin_err(CycleNotOnLeaves, "cycle vertices differ from the tree's leaves");
    }
    let k = h.cycle.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in h.cycle.iter().enumerate() {
        pos[v] = i;
    }
    for &(u, v) in &h.tree_edges {
        // leaves on u's side of the edge
        let mut side = vec![false; n];
        side[u] = true;
        let mut stack = vec![u];
        while let Some(a) = stack.pop() {
            for b in tree.neighbors(a) {
                if !side[b] && !(a == u && b == v) {
                    side[b] = true;
                    stack.push(b);
                }
            }
        }
        let inside = |i: usize| side[h.cycle[i % k]];
        let starts = (0..k).filter(|&i| inside(i) && !inside(i + k - 1)).count();
        if starts > 1 {
            return halin_err(
                NotContiguous,
                format!("leaves beyond tree edge {u}-{v} are split into {starts} arcs of the cycle"),
            );
        }
    }
    Ok(())
}

/// The spanning Halin subgraph of a fan-cycle system: the apex is joined to
/// the uncovered cycle vertices and to every attachment, and each attachment
/// to the vertices of its path.
pub fn halin_from_fan_cycle(g: &Graph, f: &FanCycleSystem) -> Result<HalinCandidate> {
    verify_fan_cycle_system(g, f)
        .map_err(|v| Error::precondition(format!("not a fan-cycle system: {v}")))?;
    let mut covered = vec![false; g.order()];
    for &v in f.paths.iter().flatten() {
        covered[v] = true;
    }
    let mut tree_edges: Vec<(usize, usize)> = f
        .cycle
        .iter()
        .filter(|&&w| !covered[w])
        .chain(&f.attach)
        .map(|&w| (f.apex, w))
        .collect();
    for (q, &x) in f.paths.iter().zip(&f.attach) {
        tree_edges.extend(q.iter().map(|&u| (x, u)));
    }
    Ok(HalinCandidate {
        tree_edges,
        cycle: f.cycle.clone(),
    })
}

fn require_3_connected(g: &Graph) -> Result<()> {
    let k = g.vertex_connectivity()?;
    if k < 3 {
        return Err(Error::precondition(format!("graph is only {k}-connected, 3 needed")));
    }
    Ok(())
}

/// A fan-cycle system for a 3-connected member of `H_0`, `H_1`, `H_4`, `H_7`
/// or `H_8`, where `g` is `build_h(e)`.
pub fn fan_cycle_for_h(g: &Graph, e: &HExpansion) -> Result<FanCycleSystem> {
    let index = e.index();
    if matches!(index, 2 | 3 | 5 | 6) {
        return Err(Error::precondition(format!(
            "members of H{index} are never 3-connected"
        )));
    }
    if *g != build_h(e)? {
        return Err(Error::precondition("graph is not the one built from the expansion"));
    }
    require_3_connected(g)?;
    let f = match e {
        HExpansion::Comb { comb } => {
            let lay = comb.layout();
            // v_i is the first vertex of R_i; the apex is v_1
            let mut cycle: Vec<usize> = Vec::new();
            let r1 = &lay.roots[0];
            cycle.push(r1[1]);
            cycle.extend(&lay.leaves[0]);
            cycle.extend(&r1[2..]);
            let mut paths = Vec::new();
            for (root, leaf) in lay.roots.iter().zip(&lay.leaves).skip(1) {
                let mut q = vec![root[1]];
                q.extend(leaf);
                q.extend(&root[2..]);
                cycle.extend(&q);
                paths.push(q);
            }
            let in_root: usize = comb.root_sizes.iter().sum();
            cycle.extend(in_root..comb.base_size);
            FanCycleSystem {
                cycle,
                apex: r1[0],
                paths,
                attach: lay.roots[1..].iter().map(|r| r[0]).collect(),
            }
        }
        HExpansion::Expanded { index: 1, .. } => {
            let lay = Labelled::new(e)?;
            let (s1, s2) = (lay.get("s1")[0], lay.get("s2")[0]);
            let (c3, c4, c5) = (lay.get("s3"), lay.get("s4"), lay.get("s5"));
            let mut q = vec![c4[1], s2];
            q.extend(&c4[2..]);
            let mut cycle = q.clone();
            cycle.extend(c5);
            cycle.extend([c3[1], s1]);
            cycle.extend(&c3[2..]);
            FanCycleSystem {
                cycle,
                apex: c3[0],
                paths: vec![q],
                attach: vec![c4[0]],
            }
        }
        HExpansion::Expanded { index: 4, cliques } => {
            let lay = Labelled::new(e)?;
            // rotate v4 -> v5 -> v6 (with v1 -> v2 -> v3) until C_v4 and C_v5 have two vertices
            let r = (0..3)
                .find(|&r| cliques[r] >= 2 && cliques[(r + 1) % 3] >= 2)
                .ok_or_else(|| Error::precondition("H4 member needs two cliques of size 2"))?;
            let big = |i: usize| lay.get(&format!("v{}", 4 + (r + i) % 3)).to_vec();
            let small = |i: usize| lay.get(&format!("v{}", 1 + (r + i) % 3))[0];
            let (a, b, d) = (big(0), big(1), big(2));
            let mut q = b[1..].to_vec();
            q.push(small(2));
            let mut cycle = d;
            cycle.push(small(0));
            cycle.extend(&a[1..]);
            cycle.push(small(1));
            cycle.extend(&q);
            FanCycleSystem {
                cycle,
                apex: a[0],
                paths: vec![q],
                attach: vec![b[0]],
            }
        }
        HExpansion::Fixed { index: 7 } => fixed_system(7, &["y2", "y4", "y7", "y8", "y6"], "y1", &[&["y4", "y7"], &["y8", "y6"]], &["y3", "y5"])?,
        HExpansion::Fixed { index: 8 } => fixed_system(8, &["z2", "z4", "z7", "z9", "z8", "z6"], "z1", &[&["z4", "z7"], &["z8", "z6"]], &["z3", "z5"])?,
        _ => unreachable!("indices 2, 3, 5, 6 rejected above"),
    };
    verify_fan_cycle_system(g, &f).map_err(|v| {
        Error::Inconsistency {
            graph6: crate::graph6::write_graph6(g),
            message: format!("constructed fan-cycle system fails {v}"),
        }
    })?;
    Ok(f)
}

/// Vertex blocks of an expansion keyed by the fixture labels.
struct Labelled {
    pattern: &'static crate::structures::HPattern,
    blocks: Vec<Vec<usize>>,
}

impl Labelled {
    fn new(e: &HExpansion) -> Result<Self> {
        Ok(Labelled {
            pattern: h_pattern(e.index())?,
            blocks: e.layout()?,
        })
    }

    fn get(&self, label: &str) -> &[usize] {
        &self.blocks[self.pattern.position(label).expect("label present in fixture")]
    }
}

fn fixed_system(index: usize, cycle: &[&str], apex: &str, paths: &[&[&str]], attach: &[&str]) -> Result<FanCycleSystem> {
    let pat = h_pattern(index)?;
    let at = |l: &str| pat.position(l).expect("label present in fixture");
    Ok(FanCycleSystem {
        cycle: cycle.iter().map(|l| at(l)).collect(),
        apex: at(apex),
        paths: paths.iter().map(|q| q.iter().map(|l| at(l)).collect()).collect(),
        attach: attach.iter().map(|l| at(l)).collect(),
    })
}

/// A spanning Halin subgraph of a 3-connected fat path or fat cycle with parameter at least 5.
///
/// One vertex `a_i` is taken from each interior clique and the `a_i` form a
/// path in the tree; each `a_i` also takes the rest of its clique as leaves,
/// and the two end ones take the outer cliques. The cycle runs through all
/// other vertices.
pub fn halin_for_fat(d: &FatDescription) -> Result<HalinCandidate> {
    let g = build_fat(d)?;
    if d.parameter() < 5 {
        return Err(Error::precondition("fat structures have parameter at least 5"));
    }
    require_3_connected(&g)?;
    let lay = d.layout();
    let (outer_first, mid, outer_last, cycle) = match d.kind {
        FatKind::Path => {
            let l = lay.len();
            let mid: Vec<&[usize]> = lay[1..l - 1].iter().map(Vec::as_slice).collect();
            let mut cycle = lay[0].clone();
            let split = |c: &[usize]| 1 + (c.len() - 1).div_ceil(2);
            for c in &mid {
                cycle.extend(&c[1..split(c)]);
            }
            cycle.extend(&lay[l - 1]);
            for c in mid.iter().rev() {
                cycle.extend(&c[split(c)..]);
            }
            (lay[0].clone(), mid, lay[l - 1].clone(), cycle)
        }
        FatKind::Cycle => {
            let k = lay.len();
            // start so that only the first and last clique may be singletons
            let s = (0..k)
                .find(|&s| (1..k - 1).all(|i| lay[(s + i) % k].len() >= 2))
                .ok_or_else(|| Error::precondition("too many singleton cliques"))?;
            let rot: Vec<&[usize]> = (0..k).map(|i| lay[(s + i) % k].as_slice()).collect();
            let mid: Vec<&[usize]> = rot[1..k - 1].to_vec();
            let mut cycle = rot[0].to_vec();
            for c in &mid {
                cycle.extend(&c[1..]);
            }
            cycle.extend(rot[k - 1]);
            (rot[0].to_vec(), mid, rot[k - 1].to_vec(), cycle)
        }
    };
    let a: Vec<usize> = mid.iter().map(|c| c[0]).collect();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    tree_edges.extend(outer_first.iter().map(|&u| (a[0], u)));
    tree_edges.extend(outer_last.iter().map(|&u| (a[a.len() - 1], u)));
    for (i, c) in mid.iter().enumerate() {
        tree_edges.extend(c[1..].iter().map(|&u| (a[i], u)));
        if i + 1 < a.len() {
            tree_edges.push((a[i], a[i + 1]));
        }
    }
    let h = HalinCandidate { tree_edges, cycle };
    verify_halin(&g, &h).map_err(|v| Error::Inconsistency {
        graph6: crate::graph6::write_graph6(&g),
        message: format!("constructed Halin subgraph fails: {v}"),
    })?;
    Ok(h)
}
