use serde::{Deserialize, Serialize};

use crate::coloring::{is_dynamic, Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A hypergraph on vertices `0..n` with non-empty edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    /// Edges are deduplicated internally and kept in input order.
    pub fn new(n: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::input(format!("hyperedge {i} is empty")));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::input(format!("hyperedge {i} has vertex {v} >= {n}")));
            }
            clean.push(e);
        }
        Ok(Hypergraph { n, edges: clean })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }
}

/// Side of a vertex in the incidence graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IncidenceSide {
    /// Hypergraph vertex with this id.
    Vertex(Vertex),
    /// Hyperedge with this index.
    Edge(usize),
}

/// The bipartite incidence graph: ids `0..n` are the hypergraph vertices,
/// `n + i` is edge `i`, and `x ~ n + i` iff `x ∈ e_i`.
pub fn incidence_graph(h: &Hypergraph) -> (Graph, Vec<IncidenceSide>) {
    let n = h.n;
    let edges = h
        .edges
        .iter()
        .enumerate()
        .flat_map(|(i, e)| e.iter().map(move |&x| (x, n + i)));
    let g = Graph::from_edges(n + h.edges.len(), edges).unwrap();
    let labels = (0..n)
        .map(IncidenceSide::Vertex)
        .chain((0..h.edges.len()).map(IncidenceSide::Edge))
        .collect();
    (g, labels)
}

/// Restricts a dynamic coloring of the incidence graph to the hypergraph
/// vertices. Every edge with at least two vertices then sees two colors.
pub fn induce_hypergraph_coloring(h: &Hypergraph, c: &Coloring) -> Result<Vec<Color>> {
    let (g, _) = incidence_graph(h);
    c.check_len(&g)?;
    if !is_dynamic(&g, c) {
        return Err(Error::input("incidence coloring is not dynamic"));
    }
    Ok(c.as_slice()[..h.n].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::assert_bipartite;
    use crate::oracles::{optimal_dynamic_coloring, OracleBudget};

    fn properly_colors(h: &Hypergraph, colors: &[Color]) -> bool {
        h.edges()
            .iter()
            .filter(|e| e.len() > 1)
            .all(|e| e.iter().any(|&x| colors[x] != colors[e[0]]))
    }

    #[test]
    fn single_edge_is_a_star() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let (g, labels) = incidence_graph(&h);
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(3), 3);
        assert_eq!(labels[3], IncidenceSide::Edge(0));
    }

    #[test]
    fn disjoint_edges_give_two_stars() {
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let (g, _) = incidence_graph(&h);
        assert_eq!(g.connected_components().len(), 2);
    }

    #[test]
    fn fano_incidence() {
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        let h = Hypergraph::new(7, lines.iter().map(|l| l.to_vec()).collect()).unwrap();
        let (g, _) = incidence_graph(&h);
        assert_eq!(g.n(), 14);
        assert_eq!(g.regular_degree(), Some(3));
        let (x, y) = assert_bipartite(&g).unwrap();
        assert_eq!((x.len(), y.len()), (7, 7));
        let c = optimal_dynamic_coloring(&g, &OracleBudget::default()).unwrap();
        let colors = induce_hypergraph_coloring(&h, &c).unwrap();
        assert!(properly_colors(&h, &colors));
    }

    #[test]
    fn pair_edge_forces_distinct_ends() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let (g, _) = incidence_graph(&h);
        let c = optimal_dynamic_coloring(&g, &OracleBudget::default()).unwrap();
        let colors = induce_hypergraph_coloring(&h, &c).unwrap();
        assert_ne!(colors[0], colors[1]);
        assert!(induce_hypergraph_coloring(&h, &Coloring::new(vec![1, 1, 2]).unwrap()).is_err());
    }

    #[test]
    fn singleton_edges_unconstrained() {
        let h = Hypergraph::new(2, vec![vec![0], vec![1]]).unwrap();
        let c = Coloring::new(vec![1, 1, 2, 2]).unwrap();
        assert_eq!(induce_hypergraph_coloring(&h, &c).unwrap(), vec![1, 1]);
    }

    #[test]
    fn validation() {
        assert!(Hypergraph::new(2, vec![vec![]]).is_err());
        assert!(Hypergraph::new(2, vec![vec![2]]).is_err());
    }
}
