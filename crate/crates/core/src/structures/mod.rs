//! The characterized classes: generalized combs, the families `H_0..H_8`,
//! fat paths and fat cycles, and the graphs `F'`.

mod comb;
mod fat;
mod hfam;

use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use comb::{build_comb, recognize_comb, recognize_comb_parts, CombDescription, CombLayout};
pub use fat::{
    build_f_prime, build_fat, f_prime_attachments, f_prime_length, fat_hamiltonian_cycle, in_p,
    is_hamiltonian_cycle, recognize_fat, recognize_fat_cliques, FatDescription, FatKind,
};
pub use hfam::{build_h, h_pattern, recognize_h_union, HExpansion, HPattern};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Closed-twin classes of `g` and the quotient graph on them.
pub(crate) fn twin_quotient(g: &Graph) -> (Vec<Vec<usize>>, Graph) {
    let classes = g.closed_twin_classes();
    let mut q = Graph::empty(classes.len());
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            if g.has_edge(classes[a][0], classes[b][0]) {
                q.add_edge(a, b);
            }
        }
    }
    (classes, q)
}

/// A textual description of a structured graph, as accepted on the command line:
///
/// * `fatpath:2,1,3,1,2`, `fatcycle:1,1,1,1,1,1`
/// * `comb:m=3;C=4;R=1,1,1;L=1,1,2` (`L` defaults to all ones, `m` is optional)
/// * `H0:C=4;R=1,1,2`, `H3:u6=2`, `H1:s3=3,s4=3`, `H7`
/// * `Fprime:m=2`, optionally with `;K=2` and `;L=...` for the path cliques
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Description {
    Comb { comb: CombDescription },
    H { h: HExpansion },
    Fat { fat: FatDescription },
    FPrime { m: usize, sizes: Option<Vec<usize>>, k: usize },
}

impl Description {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Description::Comb { comb } => build_comb(comb),
            Description::H { h } => build_h(h),
            Description::Fat { fat } => build_fat(fat),
            Description::FPrime { m, sizes, k } => build_f_prime(*m, sizes.as_deref(), *k),
        }
    }
}

fn number_list(input: &str, text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::description(input, format!("`{t}` is not a number")))
        })
        .collect()
}

fn key_values<'a>(input: &str, text: &'a str, seps: &[char]) -> Result<Vec<(&'a str, &'a str)>> {
    text.split(seps)
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::description(input, format!("expected key=value, got `{kv}`")))
        })
        .collect()
}

fn comb_from_pairs(input: &str, pairs: &[(&str, &str)], pointed: bool) -> Result<CombDescription> {
    let (mut m, mut base, mut roots, mut leaves) = (None, None, None, None);
    for &(k, v) in pairs {
        match k {
            "m" => m = Some(number_list(input, v)?[0]),
            "C" => base = Some(number_list(input, v)?[0]),
            "R" => roots = Some(number_list(input, v)?),
            "L" if !pointed => leaves = Some(number_list(input, v)?),
            _ => return Err(Error::description(input, format!("unknown key `{k}`"))),
        }
    }
    let base = base.ok_or_else(|| Error::description(input, "missing base size C"))?;
    let roots = roots.ok_or_else(|| Error::description(input, "missing root sizes R"))?;
    let leaves = leaves.unwrap_or_else(|| vec![1; roots.len()]);
    if let Some(m) = m {
        if m != roots.len() || m != leaves.len() {
            return Err(Error::description(input, format!("m={m} does not match the R and L lists")));
        }
    }
    CombDescription::new(base, roots, leaves)
        .map_err(|e| Error::description(input, e.to_string()))
}

impl FromStr for Description {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let (head, body) = s.split_once(':').unwrap_or((s, ""));
        let wrap = |e: Error| Error::description(input, e.to_string());
        match head {
            "fatpath" => Ok(Description::Fat {
                fat: FatDescription::path(number_list(input, body)?).map_err(wrap)?,
            }),
            "fatcycle" => Ok(Description::Fat {
                fat: FatDescription::cycle(number_list(input, body)?).map_err(wrap)?,
            }),
            "comb" => Ok(Description::Comb {
                comb: comb_from_pairs(input, &key_values(input, body, &[';'])?, false)?,
            }),
            "H0" => Ok(Description::H {
                h: HExpansion::Comb {
                    comb: comb_from_pairs(input, &key_values(input, body, &[';'])?, true)?,
                },
            }),
            "Fprime" => {
                let (mut m, mut sizes, mut k) = (None, None, 1);
                for (key, v) in key_values(input, body, &[';'])? {
                    match key {
                        "m" => m = Some(number_list(input, v)?[0]),
                        "K" => k = number_list(input, v)?[0],
                        "L" => sizes = Some(number_list(input, v)?),
                        _ => return Err(Error::description(input, format!("unknown key `{key}`"))),
                    }
                }
                let m = m.ok_or_else(|| Error::description(input, "missing m"))?;
                let d = Description::FPrime { m, sizes, k };
                d.build().map_err(wrap)?;
                Ok(d)
            }
            h if h.starts_with('H') => {
                let index: usize = h[1..]
                    .parse()
                    .map_err(|_| Error::description(input, "expected H0..H8"))?;
                let mut e = HExpansion::plain(index).map_err(wrap)?;
                let pairs = key_values(input, body, &[';', ','])?;
                match &mut e {
                    HExpansion::Expanded { cliques, .. } => {
                        let pat = h_pattern(index)?;
                        for (label, v) in pairs {
                            let pos = pat
                                .expandable
                                .iter()
                                .position(|&p| pat.labels[p] == label)
                                .ok_or_else(|| {
                                    Error::description(
                                        input,
                                        format!("`{label}` is not an expandable vertex of H{index}"),
                                    )
                                })?;
                            cliques[pos] = number_list(input, v)?[0];
                        }
                    }
                    _ if !pairs.is_empty() => {
                        return Err(Error::description(input, format!("H{index} takes no parameters")));
                    }
                    _ => {}
                }
                e.validate().map_err(wrap)?;
                Ok(Description::H { h: e })
            }
            _ => Err(Error::description(input, "unknown structure")),
        }
    }
}
