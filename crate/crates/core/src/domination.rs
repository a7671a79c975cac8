//! Independent dominating sets from rainbow colorings.
//!
//! For each color `i`, `Z_i` is the color class and `S_i` the degree-`k`
//! vertices that `Z_i` fails to dominate. Every `D_i = Z_i ∪ S_i` is an
//! independent dominating set, the `S_i` partition `V_k`, and so the sizes
//! `|D_i|` sum to `n + |V_k|`. The smallest `D_i` is therefore at most the
//! average `(n + |V_k|) / (k+2)`.

use std::fmt;

use crate::coloring::{rainbow_coloring, Coloring};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::ktree::KTree;

/// The exact rational `num / den`, kept unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub num: usize,
    pub den: usize,
}

impl Bound {
    pub fn floor(&self) -> usize {
        self.num / self.den
    }

    /// `size ≤ num / den`, compared without division.
    pub fn admits(&self, size: usize) -> bool {
        size * self.den <= self.num
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `(n + |V_k|) / (k+2)`.
pub fn bound_value(n: usize, vk: usize, k: usize) -> Bound {
    Bound {
        num: n + vk,
        den: k + 2,
    }
}

/// One candidate set `D_i = Z_i ∪ S_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub color: usize,
    pub z: VertexSet,
    pub s: VertexSet,
}

impl CandidateSet {
    pub fn size(&self) -> usize {
        self.z.len() + self.s.len()
    }

    pub fn members(&self) -> VertexSet {
        self.z.union(&self.s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationCertificate {
    pub k: usize,
    pub n: usize,
    /// `|V_k|`.
    pub vk: usize,
    /// Empty when the input is `K_{k+1}`.
    pub classes: Vec<CandidateSet>,
    pub chosen: usize,
    pub chosen_set: VertexSet,
    pub bound: Bound,
}

impl DominationCertificate {
    /// `true` for the `K_{k+1}` case, where the chosen set is `{0}`.
    pub fn is_base_case(&self) -> bool {
        self.classes.is_empty()
    }

    /// `Σ_i |D_i|`, which equals `n + |V_k|` on a valid certificate.
    pub fn identity_total(&self) -> usize {
        self.classes.iter().map(CandidateSet::size).sum()
    }
}

/// Splits the vertices into the `k+2` color classes; index `i` holds color `i+1`.
pub fn color_classes(coloring: &Coloring, n: usize) -> Vec<VertexSet> {
    let mut classes = vec![VertexSet::new(); coloring.palette_size()];
    for v in 0..n {
        let c = coloring.color(v);
        if (1..=classes.len()).contains(&c) {
            classes[c - 1].insert(v);
        }
    }
    classes
}

/// `S_i = V_k − N[Z_i]` for every class.
pub fn residual_sets(g: &Graph, k: usize, classes: &[VertexSet]) -> Vec<VertexSet> {
    let k_vertices = g.k_vertex_set(k);
    classes
        .iter()
        .map(|z| {
            k_vertices
                .iter()
                .filter(|&v| !z.contains(v) && g.neighbors(v).all(|u| !z.contains(u)))
                .collect()
        })
        .collect()
}

/// Vertices of degree at least `k+1` not dominated by `z`. Empty for every
/// color class of a rainbow coloring.
pub fn undominated_high_degree(g: &Graph, k: usize, z: &VertexSet) -> Vec<usize> {
    g.undominated(z).filter(|&v| g.degree(v) > k).collect()
}

/// Colors `tree`, forms all `k+2` candidates and picks the smallest one
/// (lowest color on ties).
pub fn construct_independent_dominating_set(tree: &KTree) -> Result<DominationCertificate> {
    let g = tree.graph();
    let k = tree.k();
    let n = g.vertex_count();
    let vk = g.k_vertex_set(k).len();
    let bound = bound_value(n, vk, k);

    if n == k + 1 {
        return Ok(DominationCertificate {
            k,
            n,
            vk,
            classes: Vec::new(),
            chosen: 1,
            chosen_set: VertexSet::from([0]),
            bound,
        });
    }

    let coloring = rainbow_coloring(tree)?;
    let zs = color_classes(&coloring, n);
    let ss = residual_sets(g, k, &zs);
    let classes: Vec<CandidateSet> = zs
        .into_iter()
        .zip(ss)
        .enumerate()
        .map(|(i, (z, s))| CandidateSet { color: i + 1, z, s })
        .collect();

    let best = classes
        .iter()
        .min_by_key(|c| (c.size(), c.color))
        .expect("k+2 >= 3 classes");
    let chosen = best.color;
    let chosen_set = best.members();

    Ok(DominationCertificate {
        k,
        n,
        vk,
        classes,
        chosen,
        chosen_set,
        bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateViolation {
    WrongVertexCount { expected: usize, found: usize },
    WrongKVertexCount { expected: usize, found: usize },
    WrongBound { expected: Bound, found: Bound },
    WrongClassCount { expected: usize, found: usize },
    ClassesNotPartition,
    ResidualMismatch { color: usize },
    ResidualsOverlap { a: usize, b: usize },
    IdentityMismatch { expected: usize, found: usize },
    NotIndependent { color: usize, u: usize, v: usize },
    NotDominating { color: usize, vertex: usize },
    ChosenNotIndependent { u: usize, v: usize },
    ChosenNotDominating { vertex: usize },
    ChosenMismatch,
    ChosenNotMinimum,
    BoundExceeded { size: usize, bound: Bound },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CertificateReport {
    pub violations: Vec<CertificateViolation>,
}

impl CertificateReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn first_internal_edge(g: &Graph, s: &VertexSet) -> Option<(usize, usize)> {
    s.iter().find_map(|u| {
        g.neighbors(u)
            .find(|&v| v > u && s.contains(v))
            .map(|v| (u, v))
    })
}

/// Re-derives every claim of `cert` from `g` alone.
pub fn verify_certificate(g: &Graph, cert: &DominationCertificate) -> CertificateReport {
    use CertificateViolation as V;
    let mut out = Vec::new();
    let n = g.vertex_count();
    let k = cert.k;
    let k_vertices = g.k_vertex_set(k);

    if cert.n != n {
        out.push(V::WrongVertexCount {
            expected: n,
            found: cert.n,
        });
    }
    if cert.vk != k_vertices.len() {
        out.push(V::WrongKVertexCount {
            expected: k_vertices.len(),
            found: cert.vk,
        });
    }
    let bound = bound_value(n, k_vertices.len(), k);
    if cert.bound != bound {
        out.push(V::WrongBound {
            expected: bound,
            found: cert.bound,
        });
    }

    if let Some((u, v)) = first_internal_edge(g, &cert.chosen_set) {
        out.push(V::ChosenNotIndependent { u, v });
    }
    if let Some(vertex) = g.undominated(&cert.chosen_set).next() {
        out.push(V::ChosenNotDominating { vertex });
    }
    if !bound.admits(cert.chosen_set.len()) {
        out.push(V::BoundExceeded {
            size: cert.chosen_set.len(),
            bound,
        });
    }

    if !cert.is_base_case() {
        if cert.classes.len() != k + 2 {
            out.push(V::WrongClassCount {
                expected: k + 2,
                found: cert.classes.len(),
            });
        }

        let mut owner = vec![0usize; n];
        let mut partition_ok = true;
        for class in &cert.classes {
            for v in &class.z {
                match owner.get_mut(v) {
                    Some(slot) if *slot == 0 => *slot = class.color,
                    _ => partition_ok = false,
                }
            }
        }
        if !partition_ok || owner.contains(&0) {
            out.push(V::ClassesNotPartition);
        }

        for class in &cert.classes {
            let expected: VertexSet = k_vertices
                .iter()
                .filter(|&v| !class.z.contains(v) && g.neighbors(v).all(|u| !class.z.contains(u)))
                .collect();
            if expected != class.s {
                out.push(V::ResidualMismatch { color: class.color });
            }
            let d = class.members();
            if let Some((u, v)) = first_internal_edge(g, &d) {
                out.push(V::NotIndependent {
                    color: class.color,
                    u,
                    v,
                });
            }
            let missed = g.undominated(&d).next();
            if let Some(vertex) = missed {
                out.push(V::NotDominating {
                    color: class.color,
                    vertex,
                });
            }
        }

        for (i, a) in cert.classes.iter().enumerate() {
            for b in &cert.classes[i + 1..] {
                if !a.s.is_disjoint(&b.s) {
                    out.push(V::ResidualsOverlap {
                        a: a.color,
                        b: b.color,
                    });
                }
            }
        }

        let total: usize = cert.classes.iter().map(|c| c.members().len()).sum();
        if total != n + k_vertices.len() {
            out.push(V::IdentityMismatch {
                expected: n + k_vertices.len(),
                found: total,
            });
        }

        match cert.classes.iter().find(|c| c.color == cert.chosen) {
            Some(c) if c.members() == cert.chosen_set => {
                let min = cert.classes.iter().map(|c| c.members().len()).min();
                if min != Some(cert.chosen_set.len()) {
                    out.push(V::ChosenNotMinimum);
                }
            }
            _ => out.push(V::ChosenMismatch),
        }
    }

    CertificateReport { violations: out }
}
