//! Vertex colorings, the proper/dynamic predicates, and the bad-vertex
//! decomposition `B_c / A_c / X_c / Y_c` built on top of them.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Color identifier. Ids are positive; they need not be contiguous.
pub type Color = u32;

/// A total map from the vertices of a graph to colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::input(format!("vertex {v} has color 0; ids must be positive")));
        }
        Ok(Coloring { colors })
    }

    /// Every vertex gets color `c`.
    pub fn uniform(n: usize, c: Color) -> Self {
        assert!(c > 0, "color ids are positive");
        Coloring { colors: vec![c; n] }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.colors
    }

    /// A copy with `v` recolored to `c`.
    pub fn recolored(&self, v: Vertex, c: Color) -> Coloring {
        let mut next = self.clone();
        next.set(v, c);
        next
    }

    pub(crate) fn set(&mut self, v: Vertex, c: Color) {
        debug_assert!(c > 0);
        self.colors[v] = c;
    }

    /// Number of distinct color ids in use.
    pub fn count_colors(&self) -> usize {
        self.palette().len()
    }

    /// Distinct color ids in ascending order.
    pub fn palette(&self) -> Vec<Color> {
        let set: BTreeSet<Color> = self.colors.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Renumbers colors onto `1..=k` preserving their relative order.
    pub fn compacted(&self) -> Coloring {
        let palette = self.palette();
        Coloring {
            colors: self
                .colors
                .iter()
                .map(|c| palette.binary_search(c).unwrap() as Color + 1)
                .collect(),
        }
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::input(format!(
                "coloring has {} entries but the graph has {} vertices",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Allocates color ids that are guaranteed unused so far.
#[derive(Debug, Clone)]
pub struct FreshColors {
    next: Color,
}

impl FreshColors {
    /// Starts right after the largest id used by `c`.
    pub fn after(c: &Coloring) -> Self {
        Self::starting_at(c.max_color() + 1)
    }

    pub fn starting_at(first: Color) -> Self {
        FreshColors { next: first.max(1) }
    }

    pub fn take(&mut self, count: usize) -> Vec<Color> {
        (0..count).map(|_| self.next_color()).collect()
    }

    pub fn next_color(&mut self) -> Color {
        let c = self.next;
        self.next += 1;
        c
    }

    /// The id the next call will hand out.
    pub fn peek(&self) -> Color {
        self.next
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.len() == g.n() && g.edges().all(|(u, v)| c.color(u) != c.color(v))
}

/// `v` has degree at least 2 and all of its neighbors share one color.
pub fn is_bad_vertex(g: &Graph, c: &Coloring, v: Vertex) -> bool {
    let ns = g.neighbors(v);
    ns.len() >= 2 && ns[1..].iter().all(|&u| c.color(u) == c.color(ns[0]))
}

/// Proper, and every vertex of degree at least 2 sees two neighbor colors.
pub fn is_dynamic(g: &Graph, c: &Coloring) -> bool {
    is_proper(g, c) && !g.vertices().any(|v| is_bad_vertex(g, c, v))
}

/// `B_c` without the properness check.
pub fn bad_vertices(g: &Graph, c: &Coloring) -> VertexSet {
    g.vertices().filter(|&v| is_bad_vertex(g, c, v)).collect()
}

/// The decomposition of a proper coloring into good and bad vertices, with
/// the bad vertices further split by whether they are isolated in `G[B_c]`.
#[derive(Debug, Clone)]
pub struct BadPartition {
    /// `B_c`
    pub bad: VertexSet,
    /// `A_c`
    pub good: VertexSet,
    /// `X_c`: isolated vertices of `G[B_c]`.
    pub isolated_bad: VertexSet,
    /// `B_c \ X_c`
    pub nonisolated_bad: VertexSet,
    /// `Y_c = G[B_c \ X_c]`, with the map from its ids back to `G`.
    pub nonisolated_bad_graph: (Graph, Vec<Vertex>),
}

pub fn bad_partition(g: &Graph, c: &Coloring) -> Result<BadPartition> {
    c.check_len(g)?;
    if !is_proper(g, c) {
        return Err(Error::input("bad partition of an improper coloring"));
    }
    let bad = bad_vertices(g, c);
    let good = g.vertex_set().difference(&bad);
    let (isolated_bad, nonisolated_bad): (Vec<Vertex>, Vec<Vertex>) = bad
        .iter()
        .partition(|&v| g.neighbors(v).iter().all(|&u| !bad.contains(u)));
    let isolated_bad: VertexSet = isolated_bad.into_iter().collect();
    let nonisolated_bad: VertexSet = nonisolated_bad.into_iter().collect();
    let nonisolated_bad_graph = g.induced_subgraph(&nonisolated_bad)?;
    Ok(BadPartition {
        bad,
        good,
        isolated_bad,
        nonisolated_bad,
        nonisolated_bad_graph,
    })
}

/// Two-colors `g` by breadth-first search. On failure the error carries an
/// odd cycle as a vertex sequence.
pub fn assert_bipartite(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].unwrap();
            for &u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!sv);
                        parent[u] = v;
                        depth[u] = depth[v] + 1;
                        queue.push_back(u);
                    }
                    Some(su) if su == sv => {
                        return Err(Error::NotBipartite {
                            cycle: odd_cycle(&parent, &depth, v, u),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == Some(false)).collect();
    let b = (0..n).filter(|&v| side[v] == Some(true)).collect();
    Ok((a, b))
}

/// Closes the BFS-tree paths from `v` and `u` (same side, adjacent) at
/// their lowest common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], v: Vertex, u: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (v, u);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
