//! Proper `(k+2)`-colorings of k-trees in which every vertex of degree at
//! least `k+1` sees all `k+2` colors in its closed neighborhood.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ktree::KTree;

/// Colors are `1..=k+2`; `colors[v]` is the color of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Wraps an explicit assignment. No validity checks; see [`verify_rainbow`].
    pub fn from_colors(k: usize, colors: Vec<usize>) -> Self {
        Coloring { colors, k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn palette_size(&self) -> usize {
        self.k + 2
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn set_color(&mut self, v: usize, color: usize) {
        self.colors[v] = color;
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette_size() + 1];
        for &c in &self.colors {
            if c < seen.len() {
                seen[c] = true;
            }
        }
        seen.iter().filter(|&&s| s).count()
    }
}

/// Builds the coloring by replaying the construction of `tree`.
///
/// The base clique gets colors `1..=k+1` in ascending id order. Each
/// attached vertex `x` with attachment clique `C` is then colored against
/// the partially rebuilt graph:
///
/// * if some `u ∈ C` currently has degree `k`, then `N[u]` is a properly
///   colored `(k+1)`-clique and `x` takes its single missing color, so that
///   `u` (about to reach degree `k+1`) sees every color;
/// * otherwise `x` takes the smaller of the two colors absent from `C`.
///
/// All degree-`k` members of `C` must agree on the missing color. That holds
/// whenever the witness is a genuine k-tree construction; disagreement is
/// reported as [`Error::InvariantViolation`].
pub fn rainbow_coloring(tree: &KTree) -> Result<Coloring> {
    let g = tree.graph();
    let k = tree.k();
    let n = g.vertex_count();
    let palette = k + 2;

    let mut colors = vec![0usize; n];
    let mut present = vec![false; n];
    let mut degree = vec![0usize; n];

    for (i, v) in tree.base().iter().enumerate() {
        colors[v] = i + 1;
        present[v] = true;
        degree[v] = k;
    }

    let mut seen = vec![false; palette + 1];
    for step in tree.build_order() {
        let x = step.vertex;
        let mut case_one: Option<(usize, usize)> = None;
        for u in step.clique.iter().filter(|&u| degree[u] == k) {
            seen.fill(false);
            seen[colors[u]] = true;
            for w in g.neighbors(u).filter(|&w| present[w]) {
                seen[colors[w]] = true;
            }
            let missing = single_missing(&seen).ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "closed neighborhood of degree-{k} vertex {u} does not miss exactly one color"
                ))
            })?;
            match case_one {
                None => case_one = Some((u, missing)),
                Some((first, color)) if color != missing => {
                    return Err(Error::InvariantViolation(format!(
                        "vertices {first} and {u} disagree on the color for {x} ({color} vs {missing})"
                    )));
                }
                Some(_) => {}
            }
        }

        let color = match case_one {
            Some((_, missing)) => missing,
            None => {
                seen.fill(false);
                for u in &step.clique {
                    seen[colors[u]] = true;
                }
                (1..=palette).find(|&c| !seen[c]).ok_or_else(|| {
                    Error::InvariantViolation(format!("no free color for vertex {x}"))
                })?
            }
        };

        colors[x] = color;
        present[x] = true;
        degree[x] = k;
        for u in &step.clique {
            degree[u] += 1;
        }
    }

    Ok(Coloring { colors, k })
}

fn single_missing(seen: &[bool]) -> Option<usize> {
    let mut missing = (1..seen.len()).filter(|&c| !seen[c]);
    match (missing.next(), missing.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

/// A vertex of degree at least `k+1` whose closed neighborhood lacks colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowViolation {
    pub vertex: usize,
    pub missing: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RainbowReport {
    /// Vertices whose color is outside `1..=k+2` (or missing entirely).
    pub out_of_palette: Vec<usize>,
    /// Edges whose endpoints share a color.
    pub properness: Vec<(usize, usize)>,
    pub rainbow: Vec<RainbowViolation>,
    /// For every degree-`k` vertex, the colors absent from its closed
    /// neighborhood. Exactly one per vertex on a proper coloring of a k-tree.
    pub k_vertex_missing: Vec<(usize, Vec<usize>)>,
}

impl RainbowReport {
    pub fn is_valid(&self) -> bool {
        self.out_of_palette.is_empty() && self.properness.is_empty() && self.rainbow.is_empty()
    }
}

pub fn verify_rainbow(g: &Graph, k: usize, coloring: &Coloring) -> RainbowReport {
    let palette = k + 2;
    let color = |v: usize| coloring.colors.get(v).copied().unwrap_or(0);
    let mut report = RainbowReport::default();

    for v in g.vertices() {
        if !(1..=palette).contains(&color(v)) {
            report.out_of_palette.push(v);
        }
    }
    for (u, v) in g.edges() {
        if color(u) == color(v) {
            report.properness.push((u, v));
        }
    }

    let mut seen = vec![false; palette + 1];
    for v in g.vertices() {
        let d = g.degree(v);
        if d < k {
            continue;
        }
        seen.fill(false);
        for w in g.neighbors(v).chain([v]) {
            if let Some(slot) = seen.get_mut(color(w)) {
                *slot = true;
            }
        }
        let missing: Vec<usize> = (1..=palette).filter(|&c| !seen[c]).collect();
        if d == k {
            report.k_vertex_missing.push((v, missing));
        } else if !missing.is_empty() {
            report.rainbow.push(RainbowViolation { vertex: v, missing });
        }
    }
    report
}
