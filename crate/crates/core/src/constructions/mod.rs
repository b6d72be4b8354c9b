//! Graph generators: standard small graphs, seeded random graphs, the
//! extremal families for the difference χ₂ − χ, and the hypergraph incidence
//! reduction.

mod enumerate;
mod hypergraph;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use enumerate::{all_connected_graphs, all_graphs, canonical_form};
pub use hypergraph::{incidence_graph, induce_hypergraph_coloring, Hypergraph, IncidenceSide};

const PAIRING_RETRIES: usize = 1000;

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("a path needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// Parts `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    Graph::from_edges(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)))).unwrap()
}

/// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// The 3-cube: vertices are 3-bit words, adjacent when they differ in one bit.
pub fn cube_q3() -> Graph {
    Graph::from_edges(
        8,
        (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)),
    )
    .unwrap()
}

/// A seeded random `r`-regular simple graph from the pairing model. Stubs
/// are paired one random pair at a time, skipping pairs that would form a
/// loop or a repeated edge; a dead end restarts the whole pairing. For
/// `r > (n−1)/2` the complement of a random `(n−1−r)`-regular graph is
/// returned instead.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if r >= n.max(1) {
        return Err(Error::input(format!("no {r}-regular graph on {n} vertices")));
    }
    if (n * r) % 2 == 1 {
        return Err(Error::input(format!(
            "n·r = {} is odd; no {r}-regular graph on {n} vertices",
            n * r
        )));
    }
    if n > 0 && 2 * r > n - 1 {
        return Ok(random_regular(n, n - 1 - r, seed)?.complement());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PAIRING_RETRIES {
        if let Some(edges) = try_pairing(n, r, &mut rng) {
            return Graph::from_edges(n, edges);
        }
    }
    Err(Error::resource(format!(
        "pairing model found no simple {r}-regular graph on {n} vertices in {PAIRING_RETRIES} tries"
    )))
}

fn try_pairing(n: usize, r: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(Vertex, Vertex)>> {
    let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    let mut adjacent = vec![false; n * n];
    let mut edges = Vec::with_capacity(stubs.len() / 2);
    let ok = |adjacent: &[bool], u: Vertex, v: Vertex| u != v && !adjacent[u * n + v];
    while !stubs.is_empty() {
        let len = stubs.len();
        let mut pick = None;
        for _ in 0..64 {
            let (i, j) = (rng.gen_range(0..len), rng.gen_range(0..len));
            if i != j && ok(&adjacent, stubs[i], stubs[j]) {
                pick = Some((i, j));
                break;
            }
        }
        if pick.is_none() {
            let valid: Vec<(usize, usize)> = (0..len)
                .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                .filter(|&(i, j)| ok(&adjacent, stubs[i], stubs[j]))
                .collect();
            pick = Some(*valid.choose(rng)?);
        }
        let (i, j) = pick.unwrap();
        let (u, v) = (stubs[i], stubs[j]);
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
        edges.push((u.min(v), u.max(v)));
        let (hi, lo) = (i.max(j), i.min(j));
        stubs.swap_remove(hi);
        stubs.swap_remove(lo);
    }
    Some(edges)
}

/// Erdős–Rényi `G(n, p)` with a seeded generator.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Replaces every edge `uv` (in edge order) by a path `u–w–v` through a new
/// vertex `w = n + index`.
pub fn two_subdivision(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<_> = g
        .edges()
        .enumerate()
        .flat_map(|(i, (u, v))| [(u, n + i), (n + i, v)])
        .collect();
    Graph::from_edges(n + g.m(), edges).unwrap()
}

/// The family with χ₂ − χ = ⌈Δ/δ⌉. Writing `a = bc + d` with `0 <= d < b`,
/// the vertices are `v[i][j]` for rows `1..=b` and columns `1..=c+1`, the
/// extra column `c+2` for rows `1..=d`, and `w[k]` for `k` in `1..=c+1`.
/// `v` vertices in different columns are adjacent unless the columns are
/// `{c+1, c+2}`; `w[k]` is adjacent to all of column `k`.
pub fn gab_graph(a: usize, b: usize) -> Result<Graph> {
    Ok(gab_graph_labeled(a, b)?.0)
}

/// [`gab_graph`] with labels `V{i}{j}` and `W{k}`, rows first.
pub fn gab_graph_labeled(a: usize, b: usize) -> Result<(Graph, Vec<String>)> {
    if b < 2 || a < b {
        return Err(Error::input(format!("need a >= b >= 2, got a={a}, b={b}")));
    }
    let (c, d) = (a / b, a % b);
    let mut labels = Vec::new();
    let mut columns = Vec::new();
    for i in 1..=b {
        let width = if i <= d { c + 2 } else { c + 1 };
        for j in 1..=width {
            labels.push(format!("V{i}{j}"));
            columns.push(j);
        }
    }
    let v_count = columns.len();
    for k in 1..=c + 1 {
        labels.push(format!("W{k}"));
    }
    let mut edges = Vec::new();
    for x in 0..v_count {
        for y in x + 1..v_count {
            let (j1, j2) = (columns[x].min(columns[y]), columns[x].max(columns[y]));
            if j1 != j2 && (j1, j2) != (c + 1, c + 2) {
                edges.push((x, y));
            }
        }
        if columns[x] <= c + 1 {
            edges.push((x, v_count + columns[x] - 1));
        }
    }
    Ok((Graph::from_edges(labels.len(), edges)?, labels))
}

/// The family with χ = a, α = b and χ₂ − χ = α − 1: the complete graph on
/// `a + b − 1` vertices with the matching `(0,1), (2,3), …` of `b − 1` edges
/// each replaced by a path through a new middle vertex.
pub fn prop2_graph(a: usize, b: usize) -> Result<Graph> {
    if b < 3 || a < b {
        return Err(Error::input(format!("need a >= b >= 3, got a={a}, b={b}")));
    }
    let k = a + b - 1;
    let matched = |u: Vertex, v: Vertex| u / 2 == v / 2 && u / 2 < b - 1;
    let mut edges: Vec<_> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .filter(|&(u, v)| !matched(u, v))
        .collect();
    for i in 0..b - 1 {
        let mid = k + i;
        edges.push((2 * i, mid));
        edges.push((2 * i + 1, mid));
    }
    Graph::from_edges(k + b - 1, edges)
}

/// The bipartite graph between the 2-subsets of `{1..a}` (ids `0..C(a,2)`,
/// lexicographic) and the elements (ids `C(a,2)..`), a subset joined to
/// its two elements.
pub fn matching_lower_bound_graph(a: usize) -> Result<Graph> {
    if a < 3 {
        return Err(Error::input(format!("need a >= 3, got {a}")));
    }
    let pairs: Vec<(usize, usize)> = (0..a).flat_map(|i| (i + 1..a).map(move |j| (i, j))).collect();
    let offset = pairs.len();
    let edges = pairs
        .iter()
        .enumerate()
        .flat_map(|(p, &(i, j))| [(p, offset + i), (p, offset + j)]);
    Graph::from_edges(offset + a, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::assert_bipartite;

    #[test]
    fn standard_graphs() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.regular_degree(), Some(2));
        assert!(cycle(2).is_err());
        assert_eq!(path(4).unwrap().m(), 3);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(complete_bipartite(3, 3).regular_degree(), Some(3));
        let p = petersen();
        assert_eq!((p.n(), p.m(), p.regular_degree()), (10, 15, Some(3)));
        let q = cube_q3();
        assert_eq!((q.n(), q.m(), q.regular_degree()), (8, 12, Some(3)));
        assert!(assert_bipartite(&q).is_ok());
    }

    #[test]
    fn regular_generator() {
        for seed in 0..30 {
            for (n, r) in [(10, 3), (12, 4), (20, 5), (8, 6), (9, 8), (6, 0)] {
                let g = random_regular(n, r, seed).unwrap();
                assert_eq!(g.n(), n);
                assert_eq!(g.regular_degree(), Some(r), "n={n} r={r}");
                assert_eq!(g.m(), n * r / 2);
            }
        }
        assert_eq!(random_regular(10, 3, 7).unwrap(), random_regular(10, 3, 7).unwrap());
        assert!(matches!(random_regular(5, 3, 0), Err(Error::Input(_))));
        assert!(random_regular(4, 4, 0).is_err());
    }

    #[test]
    fn subdivision() {
        let c6 = two_subdivision(&complete(3));
        assert_eq!(c6.regular_degree(), Some(2));
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert!(c6.is_connected());
        let p3 = two_subdivision(&complete(2));
        assert_eq!(p3, Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap());
        for n in 2..7 {
            assert!(assert_bipartite(&two_subdivision(&complete(n))).is_ok());
        }
    }

    #[test]
    fn gab_small_instance() {
        let (g, labels) = gab_graph_labeled(3, 2).unwrap();
        assert_eq!(labels, ["V11", "V12", "V13", "V21", "V22", "W1", "W2"]);
        assert_eq!(g.n(), 7);
        assert_eq!(g.min_max_degree().unwrap(), (2, 4));
        // columns 2 and 3 are not joined
        assert!(!g.has_edge(1, 2));
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(0, 5) && g.has_edge(3, 5));
        assert!(g.has_edge(1, 6) && g.has_edge(4, 6));
        assert!(gab_graph(1, 2).is_err());
        assert!(gab_graph(3, 1).is_err());
    }

    #[test]
    fn gab_degrees() {
        for b in 2..5 {
            for a in b..10 {
                let g = gab_graph(a, b).unwrap();
                assert_eq!(g.min_max_degree().unwrap(), (b, a + 1), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn matching_replaced_clique_shape() {
        let g = prop2_graph(3, 3).unwrap();
        assert_eq!(g.n(), 7);
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3));
        assert!(g.has_edge(0, 5) && g.has_edge(1, 5));
        assert!(prop2_graph(3, 2).is_err());
        assert!(prop2_graph(2, 3).is_err());
    }

    #[test]
    fn matching_example() {
        let g = matching_lower_bound_graph(3).unwrap();
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.is_connected());
        assert_eq!(g.n(), 6);
        let g4 = matching_lower_bound_graph(4).unwrap();
        assert_eq!(g4.n(), 10);
        assert!(matching_lower_bound_graph(2).is_err());
    }
}
