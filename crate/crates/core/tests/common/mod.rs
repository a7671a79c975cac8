#![allow(dead_code)]

use ktree_domination::generators::gen_random_ktree;
use ktree_domination::{Graph, KTree};

/// One corpus entry: a seeded random k-tree.
pub struct CorpusEntry {
    pub k: usize,
    pub n: usize,
    pub seed: u64,
    pub tree: KTree,
}

/// 1000 random k-trees, k cycling through 1..=4 and n sweeping k+2..=40.
pub fn corpus() -> Vec<CorpusEntry> {
    (0..1000usize)
        .map(|j| {
            let k = 1 + j % 4;
            let span = 40 - (k + 2) + 1;
            let n = k + 2 + (j / 4) % span;
            let seed = 1000 + j as u64;
            CorpusEntry {
                k,
                n,
                seed,
                tree: gen_random_ktree(k, n, seed).unwrap(),
            }
        })
        .collect()
}

fn closed_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).fold(1u32 << v, |acc, u| acc | (1 << u)))
        .collect()
}

fn all_dominated(masks: &[u32], set: u32) -> bool {
    let full = (1u32 << masks.len()) - 1;
    let covered = (0..masks.len())
        .filter(|&v| set >> v & 1 == 1)
        .fold(0u32, |acc, v| acc | masks[v]);
    covered == full
}

fn independent(masks: &[u32], set: u32) -> bool {
    (0..masks.len())
        .filter(|&v| set >> v & 1 == 1)
        .all(|v| masks[v] & set == 1 << v)
}

/// γ_i by enumerating all 2^n subsets.
pub fn brute_gamma_i(g: &Graph) -> usize {
    assert!(g.vertex_count() <= 20);
    let masks = closed_masks(g);
    (0u32..1 << masks.len())
        .filter(|&s| independent(&masks, s) && all_dominated(&masks, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// γ by enumerating all 2^n subsets.
pub fn brute_gamma(g: &Graph) -> usize {
    assert!(g.vertex_count() <= 20);
    let masks = closed_masks(g);
    (0u32..1 << masks.len())
        .filter(|&s| all_dominated(&masks, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}
