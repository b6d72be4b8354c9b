use super::{require_regular, Algorithm, Phase, PipelineConfig, Run, RunReport};
use crate::bounds::{floor_log2, floor_log_ratio, palette_size};
use crate::coloring::{Coloring, FreshColors};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles::{maximal_independent_dominating_set, optimal_dynamic_coloring};
use crate::repair::{lemma2_two_color_part_b, lemma4_independent_dominator, lemma5_recolor_independent, Fallback};

/// Repeatedly shrinks an independent dominating set with the counter-based
/// dominator and recolors each set with its own palette of size
/// `η = ⌈(4Δ²)^{1/(δ−1)}⌉`. After `k = ⌊log_{2Δ/(2Δ−δ)} α⌋ + 1` rounds at
/// most one vertex is left to repair.
///
/// Bound: base colors `+ η·k + 1`. Requires `δ >= 2`.
pub fn theorem3_pipeline(g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
    let mut run = Run::start(Algorithm::Theorem3, g, base, cfg)?;
    let (min_d, max_d) = g.min_max_degree()?;
    if min_d < 2 {
        return Err(Error::input(format!("theorem3 needs minimum degree >= 2, got {min_d}")));
    }
    let alpha = run.alpha()?;
    let eta = palette_size(min_d, max_d)? as usize;
    let k = floor_log_ratio(alpha, min_d, max_d)? + 1;
    let bound = eta
        .checked_mul(k)
        .and_then(|x| x.checked_add(run.base_colors + 1))
        .ok_or_else(|| Error::input("bound overflows"))?;
    if eta > 1 << 20 {
        return Err(Error::input(format!("palette of {eta} colors per round is too large")));
    }

    let mut fresh = FreshColors::after(base);
    let t1 = maximal_independent_dominating_set(g, cfg.seed());
    run.trace.push(Phase::DominatingSet { size: t1.len() });
    let mut c = recolor_round(&mut run, g, &t1, eta, &mut fresh, base, cfg, 1)?;

    let mut residual = t1;
    for iteration in 2..=k {
        if residual.is_empty() {
            break;
        }
        let (next, shrunk) = dominate(&mut run, g, &residual, iteration)?;
        c = recolor_round(&mut run, g, &next, eta, &mut fresh, &c, cfg, iteration)?;
        residual = shrunk;
    }
    finish_residual(run, c, &residual, bound)
}

#[allow(clippy::too_many_arguments)]
fn recolor_round(
    run: &mut Run,
    g: &Graph,
    t: &VertexSet,
    eta: usize,
    fresh: &mut FreshColors,
    c: &Coloring,
    cfg: &PipelineConfig,
    iteration: usize,
) -> Result<Coloring> {
    // η sampling colors plus one reserve color per vertex for the repair
    let palette = fresh.take(eta + g.n());
    let out = lemma5_recolor_independent(g, t, &palette, c, &cfg.stream(iteration as u64))?;
    run.trace.push(Phase::Resample {
        iteration,
        set_size: t.len(),
        palette: eta,
        rounds: out.rounds,
        repairs: out.repairs,
    });
    if !out.succeeded() {
        run.fallback_used = true;
    }
    Ok(out.coloring)
}

/// One dominator step: the new set and its overlap with `residual`.
fn dominate(run: &mut Run, g: &Graph, residual: &VertexSet, iteration: usize) -> Result<(VertexSet, VertexSet)> {
    let d = lemma4_independent_dominator(g, residual)?;
    run.trace.push(Phase::Dominator {
        iteration,
        input_size: residual.len(),
        chosen: d.trace.clone(),
        residual: d.t3_residual.len(),
    });
    Ok((d.t2, d.t3_residual))
}

/// Repairs what is left after the last round. The procedure expects at
/// most one leftover vertex and hence at most one extra color.
fn finish_residual(mut run: Run, c: Coloring, residual: &VertexSet, bound: usize) -> Result<(Coloring, RunReport)> {
    if residual.len() > 1 {
        run.consistency(format!("{} vertices left after the last round", residual.len()));
    }
    let before = c.count_colors();
    let c = run.repair(c, true)?;
    if c.count_colors() > before + 1 {
        run.fallback_used = true;
    }
    run.finish(c, bound)
}

/// For regular graphs: `r <= 3` takes an optimal dynamic coloring; `r >= 4`
/// follows the dominator loop but two-colors each set with a fresh pair so
/// every vertex whose neighborhood lies in the set sees both.
///
/// Bound: base colors `+ 2⌊log₂ α⌋ + 3`.
pub fn theorem4_pipeline(g: &Graph, base: &Coloring, cfg: &PipelineConfig) -> Result<(Coloring, RunReport)> {
    let mut run = Run::start(Algorithm::Theorem4, g, base, cfg)?;
    let r = require_regular(g, Algorithm::Theorem4)?;
    if r <= 3 {
        let bound = run.base_colors + 3;
        let c = optimal_dynamic_coloring(g, &cfg.budget)?;
        run.trace.push(Phase::Exact {
            reason: format!("degree {r} <= 3"),
        });
        return run.finish(c, bound);
    }
    let alpha = run.alpha()?;
    let k = floor_log2(alpha) + 1;
    let bound = run.base_colors + 2 * floor_log2(alpha) + 3;

    let mut fresh = FreshColors::after(base);
    let t1 = maximal_independent_dominating_set(g, cfg.seed());
    run.trace.push(Phase::DominatingSet { size: t1.len() });
    let mut c = two_color_round(&mut run, g, &t1, &mut fresh, base, cfg, 1)?;
    let mut residual = t1;
    for iteration in 2..=k {
        if residual.is_empty() {
            break;
        }
        let (next, shrunk) = dominate(&mut run, g, &residual, iteration)?;
        c = two_color_round(&mut run, g, &next, &mut fresh, &c, cfg, iteration)?;
        residual = shrunk;
    }
    finish_residual(run, c, &residual, bound)
}

/// Two-colors `t` so that every vertex with `N(v) ⊆ t` sees both colors.
/// A failed search leaves `c` as is when the repair fallback is enabled.
pub(super) fn two_color_round(
    run: &mut Run,
    g: &Graph,
    t: &VertexSet,
    fresh: &mut FreshColors,
    c: &Coloring,
    cfg: &PipelineConfig,
    iteration: usize,
) -> Result<Coloring> {
    let part_a: VertexSet = g
        .vertices()
        .filter(|&v| g.degree(v) > 0 && g.neighbors(v).iter().all(|&u| t.contains(u)))
        .collect();
    let pair = fresh.take(2);
    let rcfg = cfg.stream(iteration as u64);
    match lemma2_two_color_part_b(g, &part_a, t, (pair[0], pair[1]), c, &rcfg) {
        Ok(out) => {
            let phase = (part_a.len(), t.len(), out.flips, out.exact, None);
            push_two_color(run, iteration, phase);
            Ok(out.coloring)
        }
        Err(e @ (Error::Infeasible(_) | Error::Resource { .. })) if rcfg.fallback == Fallback::FreshColorRepair => {
            push_two_color(run, iteration, (part_a.len(), t.len(), 0, true, Some(e.to_string())));
            run.fallback_used = true;
            Ok(c.clone())
        }
        Err(e) => Err(e),
    }
}

fn push_two_color(run: &mut Run, iteration: usize, p: (usize, usize, usize, bool, Option<String>)) {
    let phase = match run.algorithm() {
        Algorithm::Theorem7 => Phase::Peel {
            iteration,
            constrained: p.0,
            set_size: p.1,
            flips: p.2,
            exact: p.3,
            failed: p.4,
        },
        _ => Phase::TwoColor {
            iteration,
            constrained: p.0,
            set_size: p.1,
            flips: p.2,
            exact: p.3,
            failed: p.4,
        },
    };
    run.trace.push(phase);
}
