//! Generalized combs: a base clique `C` and `m >= 3` leaf cliques `L_i`, each
//! fully joined to its own non-empty root `R_i ⊆ C`, the roots pairwise disjoint.

use serde::{Deserialize, Serialize};

use super::twin_quotient;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Up to isomorphism a comb is determined by `|C|` and the multiset of
/// `(|R_i|, |L_i|)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CombDescription {
    pub base_size: usize,
    pub root_sizes: Vec<usize>,
    pub leaf_sizes: Vec<usize>,
}

/// Vertex ids of each part in the graph built from a description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombLayout {
    pub base: Vec<usize>,
    pub roots: Vec<Vec<usize>>,
    pub leaves: Vec<Vec<usize>>,
}

impl CombDescription {
    pub fn new(base_size: usize, root_sizes: Vec<usize>, leaf_sizes: Vec<usize>) -> Result<Self> {
        let d = CombDescription {
            base_size,
            root_sizes,
            leaf_sizes,
        };
        d.validate()?;
        Ok(d)
    }

    /// Pointed comb with one leaf per root.
    pub fn pointed(base_size: usize, root_sizes: Vec<usize>) -> Result<Self> {
        let m = root_sizes.len();
        Self::new(base_size, root_sizes, vec![1; m])
    }

    pub fn m(&self) -> usize {
        self.leaf_sizes.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.leaf_sizes.iter().all(|&s| s == 1)
    }

    pub fn order(&self) -> usize {
        self.base_size + self.leaf_sizes.iter().sum::<usize>()
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.leaf_sizes.len();
        if self.root_sizes.len() != m {
            return Err(Error::argument(format!(
                "comb has {m} leaf cliques but {} roots",
                self.root_sizes.len()
            )));
        }
        if m < 3 {
            return Err(Error::argument(format!("comb needs m >= 3 leaf cliques, got {m}")));
        }
        if self.leaf_sizes.contains(&0) {
            return Err(Error::argument("comb leaf cliques must be non-empty"));
        }
        if self.root_sizes.contains(&0) {
            return Err(Error::argument("comb roots must be non-empty"));
        }
        let covered: usize = self.root_sizes.iter().sum();
        if covered > self.base_size {
            return Err(Error::argument(format!(
                "disjoint roots need {covered} base vertices but the base clique has {}",
                self.base_size
            )));
        }
        Ok(())
    }

    /// Same comb with the `(root, leaf)` pairs sorted.
    pub fn canonical(&self) -> Self {
        let mut pairs: Vec<(usize, usize)> = self
            .root_sizes
            .iter()
            .copied()
            .zip(self.leaf_sizes.iter().copied())
            .collect();
        pairs.sort_unstable();
        CombDescription {
            base_size: self.base_size,
            root_sizes: pairs.iter().map(|p| p.0).collect(),
            leaf_sizes: pairs.iter().map(|p| p.1).collect(),
        }
    }

    /// Base clique first with the roots as consecutive blocks from 0, then the leaf cliques.
    pub fn layout(&self) -> CombLayout {
        let base: Vec<usize> = (0..self.base_size).collect();
        let mut next = 0;
        let roots = self
            .root_sizes
            .iter()
            .map(|&r| {
                let block: Vec<usize> = (next..next + r).collect();
                next += r;
                block
            })
            .collect();
        let mut next = self.base_size;
        let leaves = self
            .leaf_sizes
            .iter()
            .map(|&l| {
                let block: Vec<usize> = (next..next + l).collect();
                next += l;
                block
            })
            .collect();
        CombLayout { base, roots, leaves }
    }
}

pub fn build_comb(d: &CombDescription) -> Result<Graph> {
    d.validate()?;
    let lay = d.layout();
    let mut g = Graph::empty(d.order());
    add_clique(&mut g, &lay.base);
    for (leaf, root) in lay.leaves.iter().zip(&lay.roots) {
        add_clique(&mut g, leaf);
        for &a in leaf {
            for &b in root {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

pub(crate) fn add_clique(g: &mut Graph, vs: &[usize]) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            g.add_edge(a, b);
        }
    }
}

/// Recognizes a connected generalized comb; the description is canonical.
pub fn recognize_comb(g: &Graph) -> Option<CombDescription> {
    recognize_comb_parts(g).map(|(d, _)| d)
}

/// Like [`recognize_comb`], also returning where each part sits in `g`.
///
/// In a comb the closed-twin classes are exactly the leaf cliques, the roots
/// and (if non-empty) the uncovered part of the base. In the quotient the leaf
/// classes are the pendant vertices, their neighbours are the roots, and
/// everything that is not a leaf forms a clique.
pub fn recognize_comb_parts(g: &Graph) -> Option<(CombDescription, CombLayout)> {
    if !g.is_connected() {
        return None;
    }
    let (classes, q) = twin_quotient(g);
    let k = q.order();
    let pendants: Vec<usize> = (0..k).filter(|&c| q.degree(c) == 1).collect();
    let m = pendants.len();
    if m < 3 {
        return None;
    }
    let root_of: Vec<usize> = pendants
        .iter()
        .map(|&c| q.neighbors(c).next().expect("degree one"))
        .collect();
    let mut is_leaf = vec![false; k];
    let mut is_root = vec![false; k];
    for (&c, &r) in pendants.iter().zip(&root_of) {
        is_leaf[c] = true;
        if is_root[r] || is_leaf[r] {
            return None;
        }
        is_root[r] = true;
    }
    let core: Vec<usize> = (0..k).filter(|&c| !is_leaf[c]).collect();
    let extra: Vec<usize> = core.iter().copied().filter(|&c| !is_root[c]).collect();
    if extra.len() > 1 || !q.is_clique(&core) {
        return None;
    }
    let base_size: usize = core.iter().map(|&c| classes[c].len()).sum();
    let mut parts: Vec<(usize, usize, usize, usize)> = pendants
        .iter()
        .zip(&root_of)
        .map(|(&c, &r)| (classes[r].len(), classes[c].len(), r, c))
        .collect();
    parts.sort_unstable();
    let d = CombDescription {
        base_size,
        root_sizes: parts.iter().map(|p| p.0).collect(),
        leaf_sizes: parts.iter().map(|p| p.1).collect(),
    };
    let roots: Vec<Vec<usize>> = parts.iter().map(|p| classes[p.2].clone()).collect();
    let mut base: Vec<usize> = roots.iter().flatten().copied().collect();
    if let Some(&u) = extra.first() {
        base.extend(&classes[u]);
    }
    let layout = CombLayout {
        base,
        roots,
        leaves: parts.iter().map(|p| classes[p.3].clone()).collect(),
    };
    Some((d, layout))
}
