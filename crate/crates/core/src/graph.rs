//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of a graph with `n` vertices are `0..n`.
pub type Vertex = usize;

/// A set of vertex ids, iterated in ascending order.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

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

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Checks every member against a graph with `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::input(format!(
                "vertex {v} out of range for a graph on {n} vertices"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(arr: [Vertex; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl Extend<Vertex> for VertexSet {
    fn extend<I: IntoIterator<Item = Vertex>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// A finite simple undirected graph.
///
/// Adjacency lists are sorted and deduplicated; the structure never changes
/// after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj: Vec<Vec<Vertex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Degree of `v`. Panics if `v` is out of range; see [`Graph::try_degree`].
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn try_degree(&self, v: Vertex) -> Result<usize> {
        self.adj
            .get(v)
            .map(Vec::len)
            .ok_or_else(|| Error::input(format!("vertex {v} out of range ({} vertices)", self.n())))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// `(δ, Δ)`; an input error on the empty graph.
    pub fn min_max_degree(&self) -> Result<(usize, usize)> {
        let mut it = self.adj.iter().map(Vec::len);
        let first = it
            .next()
            .ok_or_else(|| Error::input("degree bounds of a graph with no vertices"))?;
        Ok(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        match self.min_max_degree() {
            Ok((lo, hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    /// N(S): every vertex with at least one neighbor in `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> Result<VertexSet> {
        s.validate(self.n())?;
        Ok(s.iter().flat_map(|v| self.adj[v].iter().copied()).collect())
    }

    pub fn neighbor_set(&self, v: Vertex) -> VertexSet {
        self.adj[v].iter().copied().collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj: Vec<Vec<Vertex>> = (0..n)
            .map(|u| {
                let mut row = Vec::with_capacity(n - 1 - self.degree(u));
                let mut it = self.adj[u].iter().peekable();
                for v in 0..n {
                    if it.peek() == Some(&&v) {
                        it.next();
                    } else if v != u {
                        row.push(v);
                    }
                }
                row
            })
            .collect();
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// The subgraph induced by `s`. The returned map sends new id `i` to the
    /// original vertex `map[i]`; new ids follow ascending original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        s.validate(self.n())?;
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj: Vec<Vec<Vertex>> = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect()
            })
            .collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok((Graph { adj, m }, map))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| v < self.n() && self.adj[v].iter().all(|&u| !s.contains(u)))
    }

    /// Every vertex of `target` is in `s` or adjacent to a member of `s`.
    pub fn dominates(&self, s: &VertexSet, target: &VertexSet) -> bool {
        target
            .iter()
            .all(|v| s.contains(v) || self.adj[v].iter().any(|&u| s.contains(u)))
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut comp = VertexSet::new();
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            components.push(comp);
        }
        components
    }

    /// Disjoint union, with the vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| row.iter().map(|&v| v + shift).collect()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// Adjacency rows as bitmasks; `None` when `n > 128`.
    pub(crate) fn masks(&self) -> Option<Vec<u128>> {
        (self.n() <= 128).then(|| {
            self.adj
                .iter()
                .map(|row| row.iter().fold(0u128, |acc, &v| acc | (1u128 << v)))
                .collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn degrees() {
        assert!(cycle(5).vertices().all(|v| cycle(5).degree(v) == 2));
        assert!(complete(4).vertices().all(|v| complete(4).degree(v) == 3));
        assert_eq!(path3().degree(1), 2);
        assert!(matches!(path3().try_degree(3), Err(Error::Input(_))));
    }

    #[test]
    fn neighborhood_of_sets() {
        let c6 = cycle(6);
        assert_eq!(
            c6.neighborhood_of_set(&VertexSet::from([0, 2, 4])).unwrap(),
            VertexSet::from([1, 3, 5])
        );
        assert_eq!(
            complete(4).neighborhood_of_set(&VertexSet::from([0])).unwrap(),
            VertexSet::from([1, 2, 3])
        );
        assert!(c6.neighborhood_of_set(&VertexSet::new()).unwrap().is_empty());
        assert!(c6.neighborhood_of_set(&VertexSet::from([6])).is_err());
    }

    #[test]
    fn min_max() {
        assert_eq!(cycle(5).min_max_degree().unwrap(), (2, 2));
        assert_eq!(path3().min_max_degree().unwrap(), (1, 2));
        assert!(Graph::empty(0).min_max_degree().is_err());
    }

    #[test]
    fn complements() {
        let k4c = complete(4).complement();
        assert_eq!(k4c.n(), 4);
        assert_eq!(k4c.m(), 0);

        let c5c = cycle(5).complement();
        assert_eq!(c5c.regular_degree(), Some(2));
        assert!(c5c.is_connected());
        assert_eq!(c5c.m(), 5);

        // complement of C6 is the triangular prism: triangles {0,2,4}, {1,3,5}
        // plus the rungs 0-3, 1-4, 2-5.
        let prism = Graph::from_edges(
            6,
            [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(cycle(6).complement(), prism);
        assert_eq!(prism.regular_degree(), Some(3));
    }

    #[test]
    fn induced() {
        let (g, map) = cycle(6).induced_subgraph(&VertexSet::from([0, 2, 4])).unwrap();
        assert_eq!((g.n(), g.m()), (3, 0));
        assert_eq!(map, vec![0, 2, 4]);
        let (k3, _) = complete(4).induced_subgraph(&VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(k3, complete(3));
        let (p3, _) = cycle(6).induced_subgraph(&VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(p3, path3());
    }

    #[test]
    fn independence_and_components() {
        assert!(cycle(6).is_independent(&VertexSet::from([0, 2, 4])));
        assert!(!complete(4).is_independent(&VertexSet::from([0, 1])));
        let two_triangles = complete(3).disjoint_union(&complete(3));
        let comps = two_triangles.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert!(!two_triangles.is_connected());
    }

    #[test]
    fn construction_rules() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }
}
