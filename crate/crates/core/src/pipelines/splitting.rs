use super::{Algorithm, Phase, PipelineConfig, Run, RunReport};
use crate::bounds::{palette_size, wide_degree_case};
use crate::coloring::{bad_vertices, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::repair::lemma9_split_classes;

/// Splits each base color class into `k = ⌈(4Δ²)^{1/(δ−1)}⌉` private colors
/// and resamples until dynamic. Bound: `k` times the base colors.
pub fn lemma9_pipeline(g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
    let mut run = Run::start(Algorithm::Lemma9, g, base, cfg)?;
    let (min_d, max_d) = g.min_max_degree()?;
    if min_d < 2 {
        return Err(Error::input(format!("lemma9 needs minimum degree >= 2, got {min_d}")));
    }
    let k = palette_size(min_d, max_d)? as usize;
    let bound = k
        .checked_mul(run.base_colors)
        .ok_or_else(|| Error::input("bound overflows"))?;
    if let Some(wide) = wide_degree_case(min_d, max_d) {
        run.note("degree_ratio_case", if wide { "wide" } else { "narrow" });
    }
    let out = lemma9_split_classes(g, base, &cfg.stream(0))?;
    run.trace.push(Phase::Split {
        per_class: k,
        classes: run.base_colors,
        rounds: out.rounds,
        repairs: out.repairs,
    });
    if !out.succeeded() {
        run.fallback_used = true;
    }
    run.finish(out.coloring, bound)
}

/// Fresh-color repair of the base alone. Bound: base colors `+ |B_c|`.
pub fn lemma6_pipeline(g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
    let mut run = Run::start(Algorithm::Lemma6, g, base, cfg)?;
    let bound = run.base_colors + bad_vertices(g, base).len();
    let c = run.repair(base.clone(), true)?;
    run.finish(c, bound)
}
