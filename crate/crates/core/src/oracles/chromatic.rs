//! Exact chromatic number: DSATUR-ordered backtracking, bracketed by the
//! clique number from below and a greedy DSATUR coloring from above.

use super::{maximum_clique, with_bounds, Meter, OracleBudget};
use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::graph::{Graph, Vertex};

pub fn chromatic_number(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    Ok(optimal_coloring(g, budget)?.count_colors())
}

/// A proper coloring with exactly χ(G) colors, using ids `1..=χ`.
pub fn optimal_coloring(g: &Graph, budget: &OracleBudget) -> Result<Coloring> {
    budget.check_size(g, "chromatic number")?;
    if g.n() == 0 {
        return Coloring::new(Vec::new());
    }
    let lower = maximum_clique(g, budget)?.len();
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().copied().max().unwrap_or(1) as usize;
    let mut meter = Meter::new(budget, "chromatic number");
    for k in lower..upper {
        let mut colors = vec![0; g.n()];
        let found = extend(g, k as Color, &mut colors, 0, &mut meter)
            .map_err(|e| with_bounds(e, k, upper))?;
        if found {
            return Coloring::new(colors);
        }
    }
    Coloring::new(greedy)
}

fn saturation(g: &Graph, colors: &[Color], v: Vertex) -> u128 {
    g.neighbors(v)
        .iter()
        .filter(|&&u| colors[u] != 0)
        .fold(0u128, |m, &u| m | (1u128 << colors[u]))
}

/// Next vertex: most distinct neighbor colors, then highest degree, then
/// lowest id.
fn pick(g: &Graph, colors: &[Color]) -> Option<(Vertex, u128)> {
    let mut best: Option<(u32, usize, Vertex, u128)> = None;
    for v in g.vertices().filter(|&v| colors[v] == 0) {
        let sat = saturation(g, colors, v);
        let key = (sat.count_ones(), g.degree(v));
        if best.is_none_or(|(s, d, _, _)| key > (s, d)) {
            best = Some((key.0, key.1, v, sat));
        }
    }
    best.map(|(_, _, v, sat)| (v, sat))
}

fn dsatur_greedy(g: &Graph) -> Vec<Color> {
    let mut colors = vec![0; g.n()];
    while let Some((v, sat)) = pick(g, &colors) {
        colors[v] = (1..).find(|&c| sat & (1u128 << c) == 0).unwrap();
    }
    colors
}

fn extend(g: &Graph, k: Color, colors: &mut [Color], max_used: Color, meter: &mut Meter) -> Result<bool> {
    meter.tick()?;
    let Some((v, sat)) = pick(g, colors) else {
        return Ok(true);
    };
    for c in 1..=k.min(max_used + 1) {
        if sat & (1u128 << c) != 0 {
            continue;
        }
        colors[v] = c;
        if extend(g, k, colors, max_used.max(c), meter)? {
            return Ok(true);
        }
    }
    colors[v] = 0;
    Ok(false)
}
