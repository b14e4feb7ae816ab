//! Seeded random instances for `build --random`.

use clap::ValueEnum;
use combclass::structures::{CombDescription, Description, FatDescription, HExpansion};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RandomKind {
    /// Generalized comb.
    Comb,
    /// Member of H0..H8.
    H,
    /// Fat path or cycle with parameter at least `--min-l`.
    Fat,
}

/// Clique sizes drawn from `1..=max_size`.
fn sizes(rng: &mut ChaCha8Rng, count: usize, max_size: usize) -> Vec<usize> {
    (0..count).map(|_| rng.gen_range(1..=max_size)).collect()
}

fn comb(rng: &mut ChaCha8Rng, pointed: bool) -> CombDescription {
    let m = rng.gen_range(3..=5);
    let roots = sizes(rng, m, 3);
    let leaves = if pointed { vec![1; m] } else { sizes(rng, m, 2) };
    let base = roots.iter().sum::<usize>() + rng.gen_range(0..=2);
    CombDescription::new(base, roots, leaves).expect("generated comb is valid")
}

pub fn random_description(rng: &mut ChaCha8Rng, kind: RandomKind, min_l: usize) -> Description {
    match kind {
        RandomKind::Comb => Description::Comb { comb: comb(rng, false) },
        RandomKind::H => {
            // expandable vertices per index, H1..H5
            let expandable = [3, 2, 1, 3, 1];
            let h = match rng.gen_range(0..=8) {
                0 => HExpansion::Comb { comb: comb(rng, true) },
                index @ 1..=5 => HExpansion::Expanded {
                    index,
                    cliques: sizes(rng, expandable[index - 1], 3),
                },
                index => HExpansion::Fixed { index },
            };
            Description::H { h }
        }
        RandomKind::Fat => {
            let l = rng.gen_range(min_l..=min_l + 3);
            let fat = if rng.gen_bool(0.5) {
                FatDescription::path(sizes(rng, l, 3))
            } else {
                FatDescription::cycle(sizes(rng, l + 1, 3))
            };
            Description::Fat {
                fat: fat.expect("generated fat structure is valid"),
            }
        }
    }
}
