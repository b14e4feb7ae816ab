//! Fat paths and fat cycles: sequences of cliques with consecutive cliques
//! fully joined (cyclically, for fat cycles), and the boundary graphs `F'`.

use serde::{Deserialize, Serialize};

use super::comb::add_clique;
use super::twin_quotient;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FatKind {
    Path,
    Cycle,
}

/// A fat path with `l` cliques has parameter `l`; a fat cycle with `l + 1`
/// cliques has parameter `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FatDescription {
    pub kind: FatKind,
    pub sizes: Vec<usize>,
}

impl FatDescription {
    pub fn path(sizes: Vec<usize>) -> Result<Self> {
        let d = FatDescription {
            kind: FatKind::Path,
            sizes,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn cycle(sizes: Vec<usize>) -> Result<Self> {
        let d = FatDescription {
            kind: FatKind::Cycle,
            sizes,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn parameter(&self) -> usize {
        match self.kind {
            FatKind::Path => self.sizes.len(),
            FatKind::Cycle => self.sizes.len() - 1,
        }
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.sizes.contains(&0) {
            return Err(Error::argument("fundamental cliques must be non-empty"));
        }
        match self.kind {
            FatKind::Path if self.sizes.is_empty() => {
                Err(Error::argument("a fat path needs at least one clique"))
            }
            FatKind::Cycle if self.sizes.len() < 3 => {
                Err(Error::argument("a fat cycle needs at least three cliques"))
            }
            _ => Ok(()),
        }
    }

    /// Vertex ids of each fundamental clique, consecutive blocks in order.
    pub fn layout(&self) -> Vec<Vec<usize>> {
        let mut next = 0;
        self.sizes
            .iter()
            .map(|&s| {
                let block: Vec<usize> = (next..next + s).collect();
                next += s;
                block
            })
            .collect()
    }

    /// The same structure with its clique sequence replaced by the
    /// lexicographically least reversal (paths) or rotation/reflection (cycles).
    pub fn canonical(&self) -> Self {
        let perm = canonical_order(self.kind, &self.sizes);
        FatDescription {
            kind: self.kind,
            sizes: perm.iter().map(|&i| self.sizes[i]).collect(),
        }
    }
}

/// Index sequence realising the canonical clique order.
fn canonical_order(kind: FatKind, sizes: &[usize]) -> Vec<usize> {
    let k = sizes.len();
    let mut options: Vec<Vec<usize>> = vec![(0..k).collect(), (0..k).rev().collect()];
    if kind == FatKind::Cycle {
        options = (0..k)
            .flat_map(|s| {
                [
                    (0..k).map(|i| (s + i) % k).collect::<Vec<_>>(),
                    (0..k).map(|i| (s + k - i) % k).collect(),
                ]
            })
            .collect();
    }
    options
        .into_iter()
        .min_by(|a, b| {
            let ka: Vec<usize> = a.iter().map(|&i| sizes[i]).collect();
            let kb: Vec<usize> = b.iter().map(|&i| sizes[i]).collect();
            ka.cmp(&kb).then_with(|| a.cmp(b))
        })
        .expect("at least one ordering")
}

pub fn build_fat(d: &FatDescription) -> Result<Graph> {
    d.validate()?;
    let lay = d.layout();
    let mut g = Graph::empty(d.order());
    for block in &lay {
        add_clique(&mut g, block);
    }
    let k = lay.len();
    let joins = match d.kind {
        FatKind::Path => k - 1,
        FatKind::Cycle => k,
    };
    for i in 0..joins {
        for &a in &lay[i] {
            for &b in &lay[(i + 1) % k] {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// Smallest parameter for which twin classes are exactly the fundamental
/// cliques; smaller requests are raised to it.
const MIN_RECOGNIZABLE: usize = 3;

/// A fat path or cycle with parameter at least `min_l` isomorphic to `g`.
pub fn recognize_fat(g: &Graph, min_l: usize) -> Option<FatDescription> {
    recognize_fat_cliques(g, min_l).map(|(d, _)| d)
}

/// Like [`recognize_fat`], also returning the vertices of each fundamental
/// clique in the canonical order.
///
/// With parameter at least 3 two vertices are closed twins exactly when they
/// lie in the same fundamental clique, so the structure is read off the
/// quotient by closed-twin classes, which must be a path or a cycle.
pub fn recognize_fat_cliques(g: &Graph, min_l: usize) -> Option<(FatDescription, Vec<Vec<usize>>)> {
    let min_l = min_l.max(MIN_RECOGNIZABLE);
    if !g.is_connected() {
        return None;
    }
    let (classes, q) = twin_quotient(g);
    let k = q.order();
    let degrees: Vec<usize> = (0..k).map(|c| q.degree(c)).collect();
    if degrees.iter().any(|&d| d > 2) {
        return None;
    }
    let ends: Vec<usize> = (0..k).filter(|&c| degrees[c] <= 1).collect();
    let (kind, start) = match ends.as_slice() {
        [] => (FatKind::Cycle, 0),
        [a, _] => (FatKind::Path, *a),
        _ => return None,
    };
    // walk the quotient; it is connected because g is
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while seq.len() < k {
        let next = q.neighbors(cur).find(|&c| c != prev && !seq.contains(&c))?;
        seq.push(next);
        prev = cur;
        cur = next;
    }
    let param = match kind {
        FatKind::Path => k,
        FatKind::Cycle => k - 1,
    };
    if param < min_l {
        return None;
    }
    let sizes: Vec<usize> = seq.iter().map(|&c| classes[c].len()).collect();
    let perm = canonical_order(kind, &sizes);
    let d = FatDescription {
        kind,
        sizes: perm.iter().map(|&i| sizes[i]).collect(),
    };
    let cliques = perm.iter().map(|&i| classes[seq[i]].clone()).collect();
    Some((d, cliques))
}

/// Membership in `P(l)`: fat paths and fat cycles with parameter at least `l`.
pub fn in_p(g: &Graph, l: usize) -> bool {
    recognize_fat(g, l).is_some()
}

/// Length of the fat path underlying `F'(m)`.
pub fn f_prime_length(m: usize) -> usize {
    (3 * m).saturating_sub(1).max(m + 3)
}

/// The 1-based path cliques joined to `K` in `F'(m)`.
pub fn f_prime_attachments(m: usize) -> [usize; 4] {
    [
        m.saturating_sub(1).max(1),
        m.max(2),
        (2 * m).max(3),
        (2 * m + 1).max(4),
    ]
}

/// `F'(m)`: a fat path with `max(3m-1, m+3)` cliques plus a clique `K` joined
/// to four of them. Path cliques come first, then `K`. `sizes` defaults to
/// all ones.
pub fn build_f_prime(m: usize, sizes: Option<&[usize]>, k_size: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::argument("F' needs m >= 1"));
    }
    if k_size == 0 {
        return Err(Error::argument("the clique K must be non-empty"));
    }
    let len = f_prime_length(m);
    let sizes: Vec<usize> = match sizes {
        Some(s) if s.len() != len => {
            return Err(Error::argument(format!(
                "F'({m}) has {len} path cliques, got {} sizes",
                s.len()
            )))
        }
        Some(s) => s.to_vec(),
        None => vec![1; len],
    };
    let path = FatDescription::path(sizes)?;
    let lay = path.layout();
    let base = build_fat(&path)?;
    let n = base.order();
    let mut g = Graph::empty(n + k_size);
    for (u, v) in base.edges() {
        g.add_edge(u, v);
    }
    let k: Vec<usize> = (n..n + k_size).collect();
    add_clique(&mut g, &k);
    for idx in f_prime_attachments(m) {
        for &a in &lay[idx - 1] {
            for &b in &k {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// A Hamiltonian cycle of `build_fat(d)`, as a vertex sequence.
///
/// Fat cycles are traversed clique by clique. Fat paths go out along one
/// vertex of each interior clique and come back through the rest.
pub fn fat_hamiltonian_cycle(d: &FatDescription) -> Result<Vec<usize>> {
    let g = build_fat(d)?;
    if g.order() < 3 || g.vertex_connectivity()? < 2 {
        return Err(Error::precondition(
            "Hamiltonian cycle requested for a fat structure that is not 2-connected",
        ));
    }
    let lay = d.layout();
    let tour: Vec<usize> = match d.kind {
        FatKind::Cycle => lay.concat(),
        FatKind::Path => {
            let k = lay.len();
            let mut t = lay[0].clone();
            if k > 1 {
                t.extend(lay[1..k - 1].iter().map(|c| c[0]));
                t.extend(&lay[k - 1]);
                for c in lay[1..k - 1].iter().rev() {
                    t.extend(&c[1..]);
                }
            }
            t
        }
    };
    debug_assert!(is_hamiltonian_cycle(&g, &tour));
    Ok(tour)
}

/// Whether `tour` visits every vertex once with consecutive (and last-first) vertices adjacent.
pub fn is_hamiltonian_cycle(g: &Graph, tour: &[usize]) -> bool {
    let n = g.order();
    if n < 3 || tour.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in tour {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(tour[i], tour[(i + 1) % n]))
}
