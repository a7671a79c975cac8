//! Undirected simple graphs over dense vertex ids `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered set of vertex ids. Iteration is ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Returns `true` if `v` was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Undirected simple graph with sorted adjacency sets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("ids in range");
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adjacency.push(BTreeSet::new());
        self.adjacency.len() - 1
    }

    /// Inserts the edge `{u, v}`. Inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u == v || u >= n || v >= n {
            return Err(Error::InvalidEdge { u, v, n });
        }
        if self.adjacency[u].insert(v) {
            self.adjacency[v].insert(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|nb| nb.contains(&v))
    }

    /// Neighbors of `v` in ascending order. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    /// Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// All edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut set: VertexSet = self.neighbors(v).collect();
        set.insert(v);
        Ok(set)
    }

    /// Closed neighborhood of a whole set.
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s {
            out.extend(self.neighbors(v));
        }
        out
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.neighbors(u).all(|v| !s.contains(v)))
    }

    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.undominated(s).next().is_none()
    }

    /// Vertices neither in `s` nor adjacent to a member of `s`.
    pub fn undominated<'a>(&'a self, s: &'a VertexSet) -> impl Iterator<Item = usize> + 'a {
        self.vertices()
            .filter(move |&v| !s.contains(v) && self.neighbors(v).all(|u| !s.contains(u)))
    }

    /// `V_k`: the vertices of degree exactly `k`.
    pub fn k_vertex_set(&self, k: usize) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) == k).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    /// Checks that every member of `s` is a vertex of this graph.
    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
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

    #[test]
    fn empty_and_edgeless() {
        let g = Graph::new(0);
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);

        let g = Graph::new(3);
        assert!(g.vertices().all(|v| g.degree(v) == 0));
    }

    #[test]
    fn k4_from_six_edges() {
        let mut g = Graph::new(4);
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(g, Graph::complete(4));
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_clique(&g.vertices().collect()));
    }

    #[test]
    fn add_edge_rules() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(g.add_edge(2, 2), Err(Error::InvalidEdge { .. })));
        assert!(matches!(g.add_edge(0, 3), Err(Error::InvalidEdge { .. })));
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
    }

    #[test]
    fn closed_neighborhoods() {
        let g = Graph::new(2);
        assert_eq!(g.closed_neighborhood(1).unwrap(), VertexSet::from([1]));
        assert_eq!(
            star(3).closed_neighborhood(0).unwrap(),
            VertexSet::from([0, 1, 2, 3])
        );
        assert_eq!(Graph::complete(4).closed_neighborhood(2).unwrap().len(), 4);
        assert!(matches!(
            g.closed_neighborhood(5),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn clique_and_independence() {
        let g = star(3);
        assert!(g.is_clique(&VertexSet::from([2])));
        assert!(!g.is_clique(&VertexSet::from([1, 2])));
        assert!(g.is_independent(&VertexSet::new()));
        assert!(g.is_independent(&VertexSet::from([1, 2, 3])));
        assert!(!g.is_independent(&VertexSet::from([0, 1])));
    }

    #[test]
    fn domination_on_star() {
        let g = star(3);
        assert!(g.is_dominating(&g.vertices().collect()));
        assert!(g.is_dominating(&VertexSet::from([0])));
        assert!(!g.is_dominating(&VertexSet::from([1])));
        assert_eq!(
            g.undominated(&VertexSet::from([1])).collect::<Vec<_>>(),
            vec![2, 3]
        );
    }

    #[test]
    fn k_vertices() {
        assert_eq!(Graph::complete(4).k_vertex_set(3).len(), 4);
        assert_eq!(star(3).k_vertex_set(1), VertexSet::from([1, 2, 3]));
    }

    #[test]
    fn edges_sorted() {
        let mut g = Graph::new(4);
        g.add_edge(3, 1).unwrap();
        g.add_edge(2, 0).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);
    }
}
