//! Exact (independent) domination numbers by branch and bound.
//!
//! Both searches branch on the closed neighborhood of the smallest-id vertex
//! that is not yet dominated: every dominating set must contain one of its
//! members. The independent variant only offers members that are not already
//! dominated, which keeps the partial set independent. The search is
//! independent of the k-tree machinery so it can serve as ground truth.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Size of the best set found; the exact optimum unless `limit_hit`.
    pub size: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub limit_hit: bool,
}

impl OracleResult {
    pub fn exact(&self) -> Option<usize> {
        (!self.limit_hit).then_some(self.size)
    }
}

/// Minimum independent dominating set.
pub fn exact_gamma_i(g: &Graph, node_limit: u64) -> OracleResult {
    Search::new(g, true, node_limit).run()
}

/// Minimum dominating set.
pub fn exact_gamma(g: &Graph, node_limit: u64) -> OracleResult {
    Search::new(g, false, node_limit).run()
}

/// Certified lower bound `|centers|` on the domination number, valid when the
/// closed neighborhoods of the centers are pairwise disjoint.
pub fn disjoint_neighborhood_lower_bound(g: &Graph, centers: &VertexSet) -> Result<usize> {
    g.check_set(centers)?;
    let mut owner: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for c in centers {
        for w in g.neighbors(c).chain([c]) {
            if let Some(a) = owner[w] {
                return Err(Error::InvalidPacking { a, b: c });
            }
            owner[w] = Some(c);
        }
    }
    Ok(centers.len())
}

/// Greedy packing of pairwise disjoint closed neighborhoods, low degree first.
pub fn greedy_packing(g: &Graph) -> VertexSet {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut covered = vec![false; g.vertex_count()];
    let mut centers = VertexSet::new();
    for v in order {
        if g.neighbors(v).chain([v]).all(|w| !covered[w]) {
            for w in g.neighbors(v).chain([v]) {
                covered[w] = true;
            }
            centers.insert(v);
        }
    }
    centers
}

/// Ascending-id greedy maximal independent set; always an independent
/// dominating set.
pub fn greedy_maximal_independent_set(g: &Graph) -> VertexSet {
    let mut blocked = vec![false; g.vertex_count()];
    let mut set = VertexSet::new();
    for v in g.vertices() {
        if !blocked[v] {
            set.insert(v);
            blocked[v] = true;
            for w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    set
}

struct Search<'a> {
    g: &'a Graph,
    independent: bool,
    node_limit: u64,
    closed: Vec<Vec<usize>>,
    dom_count: Vec<u32>,
    undominated: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
    root_bound: usize,
    max_closed: usize,
    nodes: u64,
    limit_hit: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, independent: bool, node_limit: u64) -> Self {
        let closed: Vec<Vec<usize>> = g
            .vertices()
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).collect();
                let at = nb.partition_point(|&u| u < v);
                nb.insert(at, v);
                nb
            })
            .collect();
        Search {
            g,
            independent,
            node_limit,
            dom_count: vec![0; g.vertex_count()],
            undominated: g.vertex_count(),
            chosen: Vec::new(),
            best: greedy_maximal_independent_set(g).to_vec(),
            root_bound: greedy_packing(g).len(),
            max_closed: g.max_degree() + 1,
            closed,
            nodes: 0,
            limit_hit: false,
        }
    }

    fn run(mut self) -> OracleResult {
        self.descend();
        OracleResult {
            size: self.best.len(),
            witness: self.best.iter().copied().collect(),
            nodes_explored: self.nodes,
            limit_hit: self.limit_hit,
        }
    }

    fn done(&self) -> bool {
        self.limit_hit || self.best.len() <= self.root_bound
    }

    fn descend(&mut self) {
        if self.done() {
            return;
        }
        if self.nodes >= self.node_limit {
            self.limit_hit = true;
            return;
        }
        self.nodes += 1;

        if self.undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        // each added vertex dominates at most max_closed new vertices
        let needed = self.undominated.div_ceil(self.max_closed);
        if self.chosen.len() + needed >= self.best.len() {
            return;
        }

        let v = (0..self.g.vertex_count())
            .find(|&v| self.dom_count[v] == 0)
            .expect("undominated vertex exists");
        for i in 0..self.closed[v].len() {
            let u = self.closed[v][i];
            if self.independent && self.dom_count[u] != 0 {
                continue;
            }
            self.push(u);
            self.descend();
            self.pop(u);
            if self.done() {
                return;
            }
        }
    }

    fn push(&mut self, u: usize) {
        self.chosen.push(u);
        for &w in &self.closed[u] {
            if self.dom_count[w] == 0 {
                self.undominated -= 1;
            }
            self.dom_count[w] += 1;
        }
    }

    fn pop(&mut self, u: usize) {
        self.chosen.pop();
        for &w in &self.closed[u] {
            self.dom_count[w] -= 1;
            if self.dom_count[w] == 0 {
                self.undominated += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for l in 1..=leaves {
            g.add_edge(0, l).unwrap();
        }
        g
    }

    fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    #[test]
    fn complete_graphs() {
        for n in 1..7 {
            let r = exact_gamma_i(&Graph::complete(n), DEFAULT_NODE_LIMIT);
            assert_eq!(r.exact(), Some(1));
        }
    }

    #[test]
    fn empty_graph() {
        let r = exact_gamma_i(&Graph::new(0), 10);
        assert_eq!(r.exact(), Some(0));
        assert!(r.witness.is_empty());
    }

    #[test]
    fn star_and_paths() {
        assert_eq!(exact_gamma(&star(3), 100).exact(), Some(1));
        assert_eq!(exact_gamma_i(&star(3), 100).exact(), Some(1));
        // γ(P_n) = ceil(n/3)
        for n in 1..12 {
            assert_eq!(
                exact_gamma(&path(n), DEFAULT_NODE_LIMIT).exact(),
                Some(n.div_ceil(3))
            );
            assert_eq!(
                exact_gamma_i(&path(n), DEFAULT_NODE_LIMIT).exact(),
                Some(n.div_ceil(3))
            );
        }
    }

    #[test]
    fn gamma_below_gamma_i() {
        // double star: two adjacent centers with three leaves each
        let mut g = Graph::new(8);
        for l in 1..=3 {
            g.add_edge(0, l).unwrap();
            g.add_edge(4, 4 + l).unwrap();
        }
        g.add_edge(0, 4).unwrap();
        assert_eq!(exact_gamma(&g, 1000).exact(), Some(2));
        // one center plus the other center's leaves
        assert_eq!(exact_gamma_i(&g, 1000).exact(), Some(4));
    }

    #[test]
    fn witnesses_are_valid() {
        let g = path(10);
        let r = exact_gamma_i(&g, DEFAULT_NODE_LIMIT);
        assert!(g.is_independent(&r.witness) && g.is_dominating(&r.witness));
        assert_eq!(r.witness.len(), r.size);
        let r = exact_gamma(&g, DEFAULT_NODE_LIMIT);
        assert!(g.is_dominating(&r.witness));
    }

    #[test]
    fn node_limit_is_reported() {
        let g = path(40);
        let r = exact_gamma_i(&g, 3);
        assert!(r.limit_hit);
        assert_eq!(r.exact(), None);
        assert!(r.nodes_explored <= 3);
        assert!(g.is_independent(&r.witness) && g.is_dominating(&r.witness));
    }

    #[test]
    fn packing_bound() {
        let g = star(3);
        assert_eq!(
            disjoint_neighborhood_lower_bound(&g, &VertexSet::from([1])).unwrap(),
            1
        );
        assert!(matches!(
            disjoint_neighborhood_lower_bound(&g, &VertexSet::from([0, 1])),
            Err(Error::InvalidPacking { a: 0, b: 1 })
        ));
        assert!(matches!(
            disjoint_neighborhood_lower_bound(&g, &VertexSet::from([9])),
            Err(Error::VertexOutOfRange { .. })
        ));
        let packing = greedy_packing(&path(9));
        assert_eq!(
            disjoint_neighborhood_lower_bound(&path(9), &packing).unwrap(),
            3
        );
    }
}
