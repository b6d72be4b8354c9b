use super::domination::two_color_round;
use super::{require_regular, Algorithm, Phase, PipelineConfig, Run, RunReport};
use crate::coloring::{Coloring, FreshColors};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles::{maximum_independent_set, maximum_matching, optimal_dynamic_coloring};

/// For `r`-regular graphs on `n` vertices. Degree at most 2, and degree 3
/// with `n <= 7`, take an optimal dynamic coloring. Degree 3 with `n >= 8`
/// colors each edge of a perfect matching of the complement with its own
/// color. Degree at least 4 peels `⌈n/r⌉ − 1` maximum independent sets off
/// the graph and two-colors each with a fresh pair.
///
/// Bound: base colors `+ 2⌈n/r⌉ − 2` (the base colors alone when `r = 0`).
pub fn theorem7_pipeline(g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
    let mut run = Run::start(Algorithm::Theorem7, g, base, cfg)?;
    let r = require_regular(g, Algorithm::Theorem7)?;
    let n = g.n();
    if r == 0 {
        run.trace.push(Phase::Exact {
            reason: "edgeless".into(),
        });
        let bound = run.base_colors;
        return run.finish(base.clone(), bound);
    }
    let rounds = n.div_ceil(r);
    let bound = run.base_colors + 2 * rounds - 2;
    if r <= 2 || (r == 3 && n <= 7) {
        run.trace.push(Phase::Exact {
            reason: format!("degree {r} on {n} vertices"),
        });
        let c = optimal_dynamic_coloring(g, &cfg.budget)?;
        return run.finish(c, bound);
    }
    if r == 3 {
        let pairs = maximum_matching(&g.complement());
        if 2 * pairs.len() != n {
            return Err(Error::Consistency(format!(
                "complement of a cubic graph on {n} vertices has no perfect matching"
            )));
        }
        let mut colors = vec![0; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            colors[u] = i as u32 + 1;
            colors[v] = i as u32 + 1;
        }
        let c = Coloring::new(colors)?;
        for v in g.vertices() {
            let ns = g.neighbors(v);
            if ns.iter().all(|&u| c.color(u) == c.color(ns[0])) {
                run.consistency(format!("vertex {v} sees one color under the pair coloring"));
            }
        }
        run.trace.push(Phase::ComplementMatching { pairs: pairs.len() });
        return run.finish(c, bound);
    }

    let mut fresh = FreshColors::after(base);
    let mut c = base.clone();
    let mut remaining = g.vertex_set();
    for iteration in 1..rounds {
        if remaining.is_empty() {
            break;
        }
        let (sub, map) = g.induced_subgraph(&remaining)?;
        let t: VertexSet = maximum_independent_set(&sub, &cfg.budget)?
            .iter()
            .map(|v| map[v])
            .collect();
        c = two_color_round(&mut run, g, &t, &mut fresh, &c, cfg, iteration)?;
        remaining = remaining.difference(&t);
    }
    run.finish(c, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cube_q3, cycle, random_regular};
    use crate::pipelines::test_support::run_checked;

    #[test]
    fn small_cubic_exact() {
        let r = run_checked(Algorithm::Theorem7, &complete(4), 0);
        assert_eq!(r.colors_used, 4);
    }

    #[test]
    fn cube_uses_complement_matching() {
        let r = run_checked(Algorithm::Theorem7, &cube_q3(), 0);
        assert_eq!(r.colors_used, 4);
        assert_eq!(r.bound_formula_value, 6);
        assert!(r.trace.iter().any(|p| matches!(p, Phase::ComplementMatching { pairs: 4 })));
    }

    #[test]
    fn peeling_route() {
        let r = run_checked(Algorithm::Theorem7, &complete(5), 0);
        assert_eq!(r.bound_formula_value, 7);
        for seed in 0..5 {
            let g = random_regular(12, 4, seed).unwrap();
            assert!(run_checked(Algorithm::Theorem7, &g, seed).is_sound());
        }
    }

    #[test]
    fn cycles_exact() {
        let r = run_checked(Algorithm::Theorem7, &cycle(7).unwrap(), 0);
        assert!(r.within_bound);
    }
}
