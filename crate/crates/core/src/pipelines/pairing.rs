use super::{require_connected, Algorithm, Phase, PipelineConfig, Run, RunReport};
use crate::coloring::{bad_vertices, is_bad_vertex, Coloring, FreshColors};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::oracles::maximal_independent_set_in_order;
use crate::repair::lemma8_normalize;

/// Normalizes so the bad vertices are independent, extends them to a
/// maximal independent set `T`, and spends fresh colors on `T` in three
/// passes:
///
/// 1. vertices of `T` sharing a neighbor are paired; one common neighbor
///    per pair gets its own color;
/// 2. remaining bad vertices are paired through two non-adjacent, not yet
///    recolored representatives, which share one new color;
/// 3. each vertex still bad gets one not yet recolored neighbor with its
///    own color. These neighbors are expected to form a clique.
///
/// Bound: base colors `+ ⌈(α + ω)/2⌉ + 3`.
pub fn theorem6_pipeline(g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
    let mut run = Run::start(Algorithm::Theorem6, g, base, cfg)?;
    require_connected(g, Algorithm::Theorem6)?;
    let alpha = run.alpha()?;
    let omega = run.omega()?;
    let bound = run.base_colors + (alpha + omega).div_ceil(2) + 3;
    if omega == 2 {
        run.note("triangle_free_bound", run.base_colors + alpha.div_ceil(2) + 4);
    }

    // Second-phase representatives must keep their first-phase colors.
    run.note("pair_representatives", "untouched");

    let mut fresh = FreshColors::after(base);
    let extra = fresh.take(3);
    let norm = lemma8_normalize(g, base, (extra[0], extra[1], extra[2]))?;
    let mut c = norm.coloring;
    let bad = bad_vertices(g, &c);
    run.trace.push(Phase::Normalize {
        descent_steps: norm.descent_steps,
        y_recolored: norm.y_recolored,
        bad_after: bad.len(),
    });
    let mut fresh = FreshColors::after(&c);
    let order: Vec<Vertex> = g.vertices().collect();
    let t: Vec<Vertex> = maximal_independent_set_in_order(g, &order, &bad)
        .iter()
        .filter(|&v| g.degree(v) >= 2)
        .collect();

    let n = g.n();
    let mut touched = vec![false; n];
    let mut paired = vec![false; n];

    let mut common_pairs = 0;
    for (i, &v) in t.iter().enumerate() {
        if paired[v] {
            continue;
        }
        for &u in &t[i + 1..] {
            if paired[u] {
                continue;
            }
            let common: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| g.has_edge(w, u)).collect();
            if common.is_empty() {
                continue;
            }
            if !is_bad_vertex(g, &c, v) && !is_bad_vertex(g, &c, u) {
                continue;
            }
            paired[v] = true;
            paired[u] = true;
            if let Some(&w) = common.iter().find(|&&w| !touched[w]) {
                c.set(w, fresh.next_color());
                touched[w] = true;
                common_pairs += 1;
            }
            break;
        }
    }

    let leftover: Vec<Vertex> = t.iter().copied().filter(|&v| !paired[v] && is_bad_vertex(g, &c, v)).collect();
    let mut representative_pairs = 0;
    for (i, &v) in leftover.iter().enumerate() {
        if paired[v] {
            continue;
        }
        let found = leftover[i + 1..].iter().filter(|&&u| !paired[u]).find_map(|&u| {
            representatives(g, &touched, v, u).map(|(x, y)| (u, x, y))
        });
        if let Some((u, x, y)) = found {
            paired[v] = true;
            paired[u] = true;
            let color = fresh.next_color();
            c.set(x, color);
            c.set(y, color);
            touched[x] = true;
            touched[y] = true;
            representative_pairs += 1;
        }
    }

    let singles: Vec<Vertex> = leftover.iter().copied().filter(|&v| !paired[v] && is_bad_vertex(g, &c, v)).collect();
    let mut picks = Vec::new();
    for &v in &singles {
        match g.neighbors(v).iter().find(|&&x| !touched[x]) {
            Some(&x) => picks.push(x),
            None => run.consistency(format!("bad vertex {v} has no untouched neighbor")),
        }
    }
    for (i, &x) in picks.iter().enumerate() {
        if let Some(&y) = picks[i + 1..].iter().find(|&&y| x != y && !g.has_edge(x, y)) {
            run.consistency(format!("representatives {x} and {y} are not adjacent"));
        }
    }
    picks.sort_unstable();
    picks.dedup();
    for &x in &picks {
        c.set(x, fresh.next_color());
        touched[x] = true;
    }
    run.trace.push(Phase::Pairing {
        common_neighbor_pairs: common_pairs,
        representative_pairs,
        singles: picks.len(),
    });
    run.finish(c, bound)
}

/// Non-adjacent, untouched `x ∈ N(v)` and `y ∈ N(u)`, lowest ids first.
fn representatives(g: &Graph, touched: &[bool], v: Vertex, u: Vertex) -> Option<(Vertex, Vertex)> {
    for &x in g.neighbors(v) {
        if touched[x] {
            continue;
        }
        for &y in g.neighbors(u) {
            if !touched[y] && x != y && !g.has_edge(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}
