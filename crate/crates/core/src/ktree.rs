//! k-tree construction and recognition.
//!
//! A k-tree starts as `K_{k+1}` and grows by attaching a new vertex to an
//! existing k-clique. [`KTree`] carries that construction as a witness;
//! [`recognize`] recovers a witness for an arbitrary graph by repeatedly
//! peeling simplicial degree-`k` vertices.

use std::collections::BTreeSet;

use crate::error::{Error, NotKTree, Result};
use crate::graph::{Graph, VertexSet};

/// One construction step: `vertex` joined to every member of `clique`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    pub vertex: usize,
    pub clique: VertexSet,
}

/// A graph together with the construction order that certifies it is a k-tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTree {
    graph: Graph,
    k: usize,
    base: VertexSet,
    build_order: Vec<Attachment>,
}

/// `k·n − k(k+1)/2`, the edge count of every k-tree on `n` vertices.
pub fn edge_count_expected(n: usize, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if n < k + 1 {
        return Err(Error::InvalidParameter(format!(
            "a {k}-tree needs at least {} vertices, got {n}",
            k + 1
        )));
    }
    Ok(k * n - k * (k + 1) / 2)
}

impl KTree {
    /// The smallest k-tree, `K_{k+1}` on vertices `0..=k`.
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        Ok(KTree {
            graph: Graph::complete(k + 1),
            k,
            base: (0..=k).collect(),
            build_order: Vec::new(),
        })
    }

    /// Adds a new vertex adjacent to exactly the members of `clique` and
    /// returns its id.
    pub fn attach(&mut self, clique: &VertexSet) -> Result<usize> {
        if clique.len() != self.k {
            return Err(Error::InvalidAttachment(format!(
                "expected a {}-clique, got {} vertices",
                self.k,
                clique.len()
            )));
        }
        if let Some(v) = clique.iter().find(|&v| v >= self.graph.vertex_count()) {
            return Err(Error::InvalidAttachment(format!(
                "vertex {v} does not exist"
            )));
        }
        if !self.graph.is_clique(clique) {
            return Err(Error::InvalidAttachment(format!(
                "{clique} is not a clique"
            )));
        }
        let v = self.graph.add_vertex();
        for u in clique {
            self.graph.add_edge(u, v)?;
        }
        self.build_order.push(Attachment {
            vertex: v,
            clique: clique.clone(),
        });
        Ok(v)
    }

    /// Recognizes `graph` as a k-tree and wraps it with the recovered witness.
    pub fn from_graph(graph: Graph, k: usize) -> Result<Self> {
        let order = recognize(&graph, k)?;
        let mut build_order = order.steps;
        build_order.reverse();
        Ok(KTree {
            graph,
            k,
            base: order.residual_base,
            build_order,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn base(&self) -> &VertexSet {
        &self.base
    }

    pub fn build_order(&self) -> &[Attachment] {
        &self.build_order
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// The construction read backwards.
    pub fn elimination_order(&self) -> EliminationOrder {
        EliminationOrder {
            steps: self.build_order.iter().rev().cloned().collect(),
            residual_base: self.base.clone(),
        }
    }
}

/// Peeling sequence down to a residual `K_{k+1}`. Each step records the
/// removed vertex and its neighborhood at removal time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    pub steps: Vec<Attachment>,
    pub residual_base: VertexSet,
}

impl EliminationOrder {
    /// Removed vertices in peeling order.
    pub fn order(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    /// Replays the order in reverse on a graph with `n` vertex slots.
    pub fn rebuild(&self, n: usize) -> Result<Graph> {
        let mut g = Graph::new(n);
        let base = self.residual_base.to_vec();
        for (i, &u) in base.iter().enumerate() {
            for &v in &base[i + 1..] {
                g.add_edge(u, v)?;
            }
        }
        for step in self.steps.iter().rev() {
            for u in &step.clique {
                g.add_edge(u, step.vertex)?;
            }
        }
        Ok(g)
    }
}

/// Decides whether `g` is a k-tree for the declared `k`.
///
/// Checks the closed-form edge count first, then greedily removes the
/// smallest-id vertex of current degree `k`. In a k-tree every degree-`k`
/// vertex is simplicial and removing it leaves a k-tree, so the greedy choice
/// never paints itself into a corner.
pub fn recognize(g: &Graph, k: usize) -> Result<EliminationOrder> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.vertex_count();
    let reject = |reason| Error::NotKTree { k, reason };
    if n < k + 1 {
        return Err(reject(NotKTree::TooFewVertices { n }));
    }
    let expected = edge_count_expected(n, k)?;
    if g.edge_count() != expected {
        return Err(reject(NotKTree::EdgeCountMismatch {
            expected,
            found: g.edge_count(),
        }));
    }

    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut candidates: BTreeSet<usize> = g.vertices().filter(|&v| degree[v] == k).collect();
    let mut steps = Vec::with_capacity(n - k - 1);

    let mut remaining = n;
    while remaining > k + 1 {
        let Some(v) = candidates.pop_first() else {
            return Err(reject(NotKTree::NoSimplicialVertex { remaining }));
        };
        let clique: VertexSet = g.neighbors(v).filter(|&u| !removed[u]).collect();
        debug_assert_eq!(clique.len(), k);
        if !g.is_clique(&clique) {
            return Err(reject(NotKTree::NonCliqueNeighborhood { vertex: v }));
        }
        removed[v] = true;
        remaining -= 1;
        for u in &clique {
            degree[u] -= 1;
            if degree[u] == k {
                candidates.insert(u);
            } else if degree[u] == k - 1 {
                candidates.remove(&u);
            }
        }
        steps.push(Attachment { vertex: v, clique });
    }

    let residual_base: VertexSet = g.vertices().filter(|&v| !removed[v]).collect();
    if !g.is_clique(&residual_base) {
        return Err(reject(NotKTree::ResidueNotComplete));
    }
    if n > k + 1 && !g.is_independent(&g.k_vertex_set(k)) {
        return Err(Error::InvariantViolation(
            "adjacent degree-k vertices in an accepted k-tree".into(),
        ));
    }
    Ok(EliminationOrder {
        steps,
        residual_base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_init() {
        let t = KTree::new(1).unwrap();
        assert_eq!(*t.graph(), Graph::complete(2));
        let t = KTree::new(3).unwrap();
        assert_eq!(t.graph().edge_count(), 6);
        assert!(t.build_order().is_empty());
        assert!(matches!(KTree::new(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn builder_attach() {
        let mut t = KTree::new(1).unwrap();
        assert_eq!(t.attach(&VertexSet::from([0])).unwrap(), 2);
        assert_eq!(t.graph().edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);

        let mut t = KTree::new(2).unwrap();
        assert_eq!(t.attach(&VertexSet::from([1, 2])).unwrap(), 3);
        assert_eq!(
            t.graph().closed_neighborhood(3).unwrap(),
            VertexSet::from([1, 2, 3])
        );
        assert!(matches!(
            t.attach(&VertexSet::from([0, 1, 2])),
            Err(Error::InvalidAttachment(_))
        ));
        // 0 and 3 are not adjacent
        assert!(matches!(
            t.attach(&VertexSet::from([0, 3])),
            Err(Error::InvalidAttachment(_))
        ));
        assert!(matches!(
            t.attach(&VertexSet::from([0, 9])),
            Err(Error::InvalidAttachment(_))
        ));
    }

    #[test]
    fn expected_edges() {
        assert_eq!(edge_count_expected(4, 3).unwrap(), 6);
        assert_eq!(edge_count_expected(16, 3).unwrap(), 42);
        for m in 1..10 {
            assert_eq!(edge_count_expected(2 * m, 1).unwrap(), 2 * m - 1);
        }
        assert!(edge_count_expected(3, 3).is_err());
    }

    #[test]
    fn recognize_complete() {
        let order = recognize(&Graph::complete(4), 3).unwrap();
        assert!(order.steps.is_empty());
        assert_eq!(order.residual_base, VertexSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn recognize_rejections() {
        let reason = |r: Result<EliminationOrder>| match r {
            Err(Error::NotKTree { reason, .. }) => reason,
            other => panic!("expected rejection, got {other:?}"),
        };
        // K_4 declared as a 2-tree: 6 != 2*4-3
        assert_eq!(
            reason(recognize(&Graph::complete(4), 2)),
            NotKTree::EdgeCountMismatch {
                expected: 5,
                found: 6
            }
        );
        assert_eq!(
            reason(recognize(&Graph::new(1), 1)),
            NotKTree::TooFewVertices { n: 1 }
        );
        // triangle plus an isolated vertex: right edge count for k=1, nothing to peel
        let mut g = Graph::new(4);
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(
            reason(recognize(&g, 1)),
            NotKTree::NoSimplicialVertex { remaining: 4 }
        );
        // 4-cycle 0-1-2-3 plus a vertex 4 on {0, 1, 2}: 7 edges, but N(3) = {0, 2}
        let mut g = Graph::new(5);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(
            reason(recognize(&g, 2)),
            NotKTree::NonCliqueNeighborhood { vertex: 3 }
        );
    }

    #[test]
    fn recognize_rebuilds_identical_graph() {
        let mut t = KTree::new(2).unwrap();
        t.attach(&VertexSet::from([1, 2])).unwrap();
        t.attach(&VertexSet::from([0, 1])).unwrap();
        t.attach(&VertexSet::from([1, 3])).unwrap();
        let order = recognize(t.graph(), 2).unwrap();
        assert_eq!(order.steps.len(), 3);
        assert_eq!(&order.rebuild(t.vertex_count()).unwrap(), t.graph());

        let rt = KTree::from_graph(t.graph().clone(), 2).unwrap();
        assert_eq!(rt.graph(), t.graph());
        assert_eq!(rt.build_order().len(), 3);
    }

    #[test]
    fn elimination_order_reverses_build() {
        let mut t = KTree::new(1).unwrap();
        t.attach(&VertexSet::from([1])).unwrap();
        t.attach(&VertexSet::from([2])).unwrap();
        let order = t.elimination_order();
        assert_eq!(order.order(), vec![3, 2]);
        assert_eq!(&order.rebuild(4).unwrap(), t.graph());
    }
}
