use serde::{Deserialize, Serialize};

use crate::coloring::{assert_bipartite, bad_partition, bad_vertices, is_bad_vertex, is_proper, Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalized {
    pub coloring: Coloring,
    /// Recolorings performed by the descent.
    pub descent_steps: usize,
    /// Vertices of the non-isolated bad part that were two-colored.
    pub y_recolored: usize,
}

/// Turns a proper coloring into one whose bad vertices form an independent
/// set, using at most three extra colors.
///
/// First a descent: while some bad vertex has only bad neighbors, recolor
/// it with a color (base palette first, then `extra.0`) that keeps the
/// coloring proper and strictly shrinks the bad set. Then the subgraph
/// induced by the non-isolated bad vertices, which is bipartite, is
/// two-colored with `extra.1` and `extra.2`.
pub fn lemma8_normalize(g: &Graph, base: &Coloring, extra: (Color, Color, Color)) -> Result<Normalized> {
    base.check_len(g)?;
    if !is_proper(g, base) {
        return Err(Error::input("normalization needs a proper coloring"));
    }
    let extras = [extra.0, extra.1, extra.2];
    if extras.contains(&0) || extra.0 == extra.1 || extra.1 == extra.2 || extra.0 == extra.2 {
        return Err(Error::input("normalization needs three distinct positive extra colors"));
    }
    let palette = base.palette();
    if let Some(c) = extras.iter().find(|c| palette.contains(c)) {
        return Err(Error::input(format!("extra color {c} is already in use")));
    }

    let mut candidates = palette;
    candidates.push(extra.0);
    let (mut coloring, descent_steps) = descend(g, base, &candidates)?;

    let bp = bad_partition(g, &coloring)?;
    let (y_graph, y_map) = &bp.nonisolated_bad_graph;
    let (left, right) = assert_bipartite(y_graph).map_err(|e| {
        Error::Consistency(format!("non-isolated bad vertices are not bipartite: {e}"))
    })?;
    for v in left.iter() {
        coloring.set(y_map[v], extra.1);
    }
    for v in right.iter() {
        coloring.set(y_map[v], extra.2);
    }

    let bad = bad_vertices(g, &coloring);
    if !is_proper(g, &coloring) || !g.is_independent(&bad) {
        return Err(Error::Consistency(
            "normalized coloring is improper or has adjacent bad vertices".into(),
        ));
    }
    Ok(Normalized {
        coloring,
        descent_steps,
        y_recolored: y_map.len(),
    })
}

/// While some bad vertex has all neighbors bad, recolor it with the first
/// color of `candidates` that keeps `c` proper and shrinks the bad set.
/// Returns the final coloring and the number of recolorings.
pub(crate) fn descend(g: &Graph, c: &Coloring, candidates: &[Color]) -> Result<(Coloring, usize)> {
    let mut c = c.clone();
    let mut bad: Vec<bool> = g.vertices().map(|v| is_bad_vertex(g, &c, v)).collect();
    let mut steps = 0;
    while let Some(v) = g
        .vertices()
        .find(|&v| bad[v] && g.neighbors(v).iter().all(|&u| bad[u]))
    {
        let current = c.color(v);
        let mut chosen = None;
        for &y in candidates {
            if y == current || g.neighbors(v).iter().any(|&u| c.color(u) == y) {
                continue;
            }
            c.set(v, y);
            let delta = bad_delta(g, &c, &bad, v);
            if delta < 0 {
                chosen = Some(y);
                break;
            }
            c.set(v, current);
        }
        if chosen.is_none() {
            return Err(Error::Consistency(format!(
                "no candidate color shrinks the bad set at vertex {v}"
            )));
        }
        for &u in g.neighbors(v) {
            bad[u] = is_bad_vertex(g, &c, u);
        }
        steps += 1;
    }
    Ok((c, steps))
}

/// Change in the number of bad vertices after recoloring `v`; only the
/// neighbors of `v` can change status.
fn bad_delta(g: &Graph, c: &Coloring, bad: &[bool], v: Vertex) -> i64 {
    g.neighbors(v)
        .iter()
        .map(|&u| is_bad_vertex(g, c, u) as i64 - bad[u] as i64)
        .sum()
}
