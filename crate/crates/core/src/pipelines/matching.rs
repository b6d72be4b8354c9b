use super::{Algorithm, Phase, PipelineConfig, Run, RunReport};
use crate::coloring::{bad_vertices, Coloring, FreshColors};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::oracles::maximum_matching;
use crate::repair::lemma8_normalize;

/// Normalizes so the bad vertices `B` are independent, takes a maximum
/// matching `M`, and gives a distinct fresh color to every `M`-partner of a
/// matched bad vertex and to every matched neighbor of an unmatched bad
/// vertex. At most one endpoint of each matching edge is recolored.
///
/// Bound: base colors `+ α′ + 3`.
pub fn theorem8_pipeline(g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
    let mut run = Run::start(Algorithm::Theorem8, g, base, cfg)?;
    let matching_number = run.matching();
    let bound = run.base_colors + matching_number + 3;
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

    let m = maximum_matching(g);
    let mut partner = vec![None; g.n()];
    for &(u, v) in &m {
        partner[u] = Some(v);
        partner[v] = Some(u);
    }
    let matched_bad: VertexSet = bad.iter().filter(|&v| partner[v].is_some()).collect();
    let partners: VertexSet = matched_bad.iter().filter_map(|v| partner[v]).collect();
    let neighbors: VertexSet = bad
        .iter()
        .filter(|&v| partner[v].is_none())
        .flat_map(|v| g.neighbors(v).iter().copied())
        .filter(|&u| partner[u].is_some())
        .collect();
    let recolor = partners.union(&neighbors);
    for &(u, v) in &m {
        if recolor.contains(u) && recolor.contains(v) {
            run.consistency(format!("both ends of matching edge {u}-{v} recolored"));
        }
    }
    let mut fresh = FreshColors::after(&c);
    for v in recolor.iter() {
        c.set(v, fresh.next_color());
    }
    run.trace.push(Phase::Matching {
        size: m.len(),
        matched_bad: matched_bad.len(),
        partners_recolored: partners.len(),
        neighbors_recolored: neighbors.difference(&partners).len(),
    });
    run.finish(c, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, matching_lower_bound_graph, petersen};
    use crate::pipelines::test_support::run_checked;

    #[test]
    fn complete_graph() {
        let r = run_checked(Algorithm::Theorem8, &complete(4), 0);
        assert_eq!(r.bound_formula_value, 9);
        assert_eq!(r.colors_used, 4);
    }

    #[test]
    fn subset_incidence_example() {
        let g = matching_lower_bound_graph(3).unwrap();
        let r = run_checked(Algorithm::Theorem8, &g, 0);
        assert_eq!(r.bound_formula_value, 8);
        assert!(r.within_bound);
        assert!(r.consistency_errors.is_empty());
    }

    #[test]
    fn assorted_graphs() {
        for g in [cycle(5).unwrap(), cycle(8).unwrap(), petersen()] {
            let r = run_checked(Algorithm::Theorem8, &g, 0);
            assert!(r.within_bound);
            assert!(r.consistency_errors.is_empty());
        }
    }
}
