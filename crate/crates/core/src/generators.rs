//! Seeded and structured k-tree families.
//!
//! Random k-trees use ChaCha8 seeded through `SeedableRng::seed_from_u64`
//! (rand_core 0.6, which expands the 64-bit seed with PCG32). Each attachment
//! clique is drawn uniformly from every k-clique created so far, using
//! rejection sampling on raw 64-bit outputs (see [`uniform_index`]), so the
//! same `(k, n, seed)` always produces the same edge set.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ktree::KTree;

/// Which family to build. Sizes are validated by the matching `gen_*` function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSpec {
    Complete { k: usize },
    Random { k: usize, n: usize, seed: u64 },
    KPath { k: usize, t: usize },
    Tight { k: usize, t: usize },
    Caterpillar { m: usize },
}

impl GenSpec {
    /// The declared `k` (caterpillars are 1-trees).
    pub fn k(&self) -> usize {
        match *self {
            GenSpec::Complete { k }
            | GenSpec::Random { k, .. }
            | GenSpec::KPath { k, .. }
            | GenSpec::Tight { k, .. } => k,
            GenSpec::Caterpillar { .. } => 1,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        Ok(match *self {
            GenSpec::Complete { k } => gen_complete(k)?.into_graph(),
            GenSpec::Random { k, n, seed } => gen_random_ktree(k, n, seed)?.into_graph(),
            GenSpec::KPath { k, t } => gen_kpath(k, t)?.into_graph(),
            GenSpec::Tight { k, t } => gen_tight(k, t)?.into_graph(),
            GenSpec::Caterpillar { m } => gen_caterpillar(m)?,
        })
    }
}

pub fn gen_complete(k: usize) -> Result<KTree> {
    KTree::new(k)
}

/// Uniform integer in `0..bound` from raw 64-bit draws: values at or above
/// the largest multiple of `bound` are rejected, the rest are reduced mod
/// `bound`.
pub fn uniform_index(rng: &mut impl RngCore, bound: usize) -> usize {
    assert!(bound > 0);
    let bound = bound as u64;
    let zone = u64::MAX - (u64::MAX % bound);
    loop {
        let x = rng.next_u64();
        if x < zone {
            return (x % bound) as usize;
        }
    }
}

pub fn gen_random_ktree(k: usize, n: usize, seed: u64) -> Result<KTree> {
    let mut tree = KTree::new(k)?;
    if n < k + 1 {
        return Err(Error::InvalidParameter(format!(
            "a {k}-tree needs at least {} vertices, got {n}",
            k + 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // every k-subset of the base, in order of the omitted vertex
    let mut registry: Vec<Vec<usize>> = (0..=k)
        .map(|skip| (0..=k).filter(|&u| u != skip).collect())
        .collect();

    while tree.vertex_count() < n {
        let clique = registry[uniform_index(&mut rng, registry.len())].clone();
        let v = tree.attach(&clique.iter().copied().collect())?;
        for skip in 0..k {
            let mut next: Vec<usize> = clique
                .iter()
                .copied()
                .filter(|&u| u != clique[skip])
                .collect();
            next.push(v);
            registry.push(next);
        }
    }
    Ok(tree)
}

fn check_blocks(k: usize, t: usize) -> Result<()> {
    if k == 0 || t == 0 || k * t < k + 1 {
        return Err(Error::InvalidParameter(format!(
            "k-path needs k >= 1 and kt >= k+1 (k={k}, t={t})"
        )));
    }
    Ok(())
}

/// The k-th power of a path on `kt` vertices `0..kt`.
///
/// Block `i` (1-based) is `(i−1)k .. ik` and induces `K_k`.
pub fn gen_kpath(k: usize, t: usize) -> Result<KTree> {
    check_blocks(k, t)?;
    let mut tree = KTree::new(k)?;
    for j in k + 1..k * t {
        tree.attach(&(j - k..j).collect())?;
    }
    Ok(tree)
}

/// Vertices of block `i` (1-based) of [`gen_kpath`].
pub fn kpath_block(k: usize, i: usize) -> VertexSet {
    ((i - 1) * k..i * k).collect()
}

/// [`gen_kpath`] plus one pendant vertex `x_i = kt + i − 1` on each block.
pub fn gen_tight(k: usize, t: usize) -> Result<KTree> {
    let mut tree = gen_kpath(k, t)?;
    for i in 1..=t {
        tree.attach(&kpath_block(k, i))?;
    }
    Ok(tree)
}

/// Path `0..m` with leaf `m + i` hanging off path vertex `i`.
pub fn gen_caterpillar(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter("caterpillar needs m >= 1".into()));
    }
    let mut g = Graph::new(2 * m);
    for i in 0..m {
        if i > 0 {
            g.add_edge(i - 1, i)?;
        }
        g.add_edge(i, m + i)?;
    }
    Ok(g)
}
