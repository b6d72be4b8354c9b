use super::{require_connected, Algorithm, Phase, PipelineConfig, Run, RunReport};
use crate::coloring::{assert_bipartite, bad_partition, bad_vertices, Coloring, FreshColors};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracles::optimal_dynamic_coloring;
use crate::repair::descend;

/// Case analysis for connected graphs. Bipartite inputs take an optimal
/// dynamic coloring (bound base `+ α`); complete graphs keep the base.
/// Otherwise the base is improved by descent inside its own palette, the
/// non-isolated bad vertices are two-colored with two fresh colors, one
/// common neighbor of two remaining bad vertices gets a third fresh color
/// when such a pair exists, and fresh-color repair finishes.
///
/// Bound: base colors `+ α + 1`.
pub fn theorem5_pipeline(g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
    let mut run = Run::start(Algorithm::Theorem5, g, base, cfg)?;
    require_connected(g, Algorithm::Theorem5)?;
    let alpha = run.alpha()?;
    let k0 = run.base_colors;
    if k0 <= 1 {
        run.case = Some("trivial".into());
        return run.finish(base.clone(), k0 + alpha + 1);
    }
    if k0 == 2 {
        run.case = Some("bipartite".into());
        run.trace.push(Phase::Exact {
            reason: "two-colorable input".into(),
        });
        let c = optimal_dynamic_coloring(g, &cfg.budget)?;
        return run.finish(c, k0 + alpha);
    }
    let bound = k0 + alpha + 1;
    if alpha == 1 {
        run.case = Some("complete".into());
        return run.finish(base.clone(), bound);
    }

    let (mut c, steps) = descend(g, base, &base.palette())?;
    let bp = bad_partition(g, &c)?;
    let (y_graph, y_map) = &bp.nonisolated_bad_graph;
    run.trace.push(Phase::Normalize {
        descent_steps: steps,
        y_recolored: 0,
        bad_after: bp.bad.len(),
    });
    if y_map.is_empty() {
        run.case = Some("1".into());
        run.trace.push(Phase::Case {
            name: "1".into(),
            recolored: 0,
        });
        let c = run.repair(c, true)?;
        return run.finish(c, bound);
    }

    let mut fresh = FreshColors::after(&c);
    let (f1, f2) = (fresh.next_color(), fresh.next_color());
    let (left, right) = assert_bipartite(y_graph)
        .map_err(|e| Error::Consistency(format!("non-isolated bad vertices not bipartite: {e}")))?;
    for v in left.iter() {
        c.set(y_map[v], f1);
    }
    for v in right.iter() {
        c.set(y_map[v], f2);
    }
    let x: Vec<Vertex> = bad_vertices(g, &c).to_vec();
    if x.iter().any(|&v| g.neighbors(v).iter().any(|u| x.contains(u))) {
        run.consistency("bad vertices adjacent after two-coloring");
    }

    match common_neighbor_pair(g, &x) {
        Some((v, u, w)) => {
            run.case = Some("2B".into());
            c.set(w, fresh.next_color());
            run.trace.push(Phase::Case {
                name: "2B".into(),
                recolored: y_map.len() + 1,
            });
            log::debug!("theorem5: bad vertices {v} and {u} share neighbor {w}");
        }
        None => {
            run.case = Some("2A".into());
            run.trace.push(Phase::Case {
                name: "2A".into(),
                recolored: y_map.len(),
            });
        }
    }
    let c = run.repair(c, true)?;
    run.finish(c, bound)
}

/// The first ordered pair of distinct `v, u ∈ x` with a common neighbor,
/// together with their lowest common neighbor `w`.
fn common_neighbor_pair(g: &Graph, x: &[Vertex]) -> Option<(Vertex, Vertex, Vertex)> {
    for &v in x {
        for &u in x {
            if u == v {
                continue;
            }
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| g.has_edge(w, u)) {
                return Some((v, u, w));
            }
        }
    }
    None
}
