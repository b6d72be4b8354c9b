use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ResampleConfig;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Exact search is attempted only up to this many constrained vertices.
const EXACT_LIMIT: usize = 30;
const EXACT_NODE_CAP: u64 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoring {
    pub coloring: Coloring,
    /// Local-search flips performed.
    pub flips: usize,
    /// Whether the exact search produced the answer.
    pub exact: bool,
}

/// Colors `part_b` with the two colors of `pair` so that every vertex of
/// `part_a` sees both. Every `a ∈ part_a` must have degree at least 4 and
/// all neighbors in `part_b`; `part_b` must be independent.
///
/// Local search from a seeded random assignment: pick a violated `a`
/// uniformly, flip the neighbor whose flip breaks the fewest satisfied
/// vertices (lowest id on ties). Once the round cap is hit the neighbors of
/// `part_a` are searched exhaustively if there are at most 30 of them.
pub fn lemma2_two_color_part_b(
    g: &Graph,
    part_a: &VertexSet,
    part_b: &VertexSet,
    pair: (Color, Color),
    base: &Coloring,
    cfg: &ResampleConfig,
) -> Result<TwoColoring> {
    base.check_len(g)?;
    part_a.validate(g.n())?;
    part_b.validate(g.n())?;
    if pair.0 == pair.1 || pair.0 == 0 || pair.1 == 0 {
        return Err(Error::input("two-coloring needs two distinct positive colors"));
    }
    if !g.is_independent(part_b) {
        return Err(Error::input("part B is not independent"));
    }
    for a in part_a.iter() {
        if g.degree(a) < 4 {
            return Err(Error::input(format!("part A vertex {a} has degree below 4")));
        }
        if let Some(&w) = g.neighbors(a).iter().find(|&&w| !part_b.contains(w)) {
            return Err(Error::input(format!(
                "part A vertex {a} has neighbor {w} outside part B"
            )));
        }
    }
    if let Some(v) = g
        .vertices()
        .find(|&v| !part_b.contains(v) && (base.color(v) == pair.0 || base.color(v) == pair.1))
    {
        return Err(Error::input(format!(
            "pair color {} already used outside part B at vertex {v}",
            base.color(v)
        )));
    }

    let n = g.n();
    let a_list = part_a.to_vec();
    let mut in_a = vec![false; n];
    for &a in &a_list {
        in_a[a] = true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut side = vec![false; n];
    for b in part_b.iter() {
        side[b] = rng.gen_bool(0.5);
    }
    let mut ones = vec![0usize; n];
    for &a in &a_list {
        ones[a] = g.neighbors(a).iter().filter(|&&w| side[w]).count();
    }
    let violated = |ones: &[usize], a: Vertex| ones[a] == 0 || ones[a] == g.degree(a);

    let max_rounds = cfg.rounds_for(n);
    let mut flips = 0;
    let mut solved = false;
    loop {
        let bad: Vec<Vertex> = a_list.iter().copied().filter(|&a| violated(&ones, a)).collect();
        if bad.is_empty() {
            solved = true;
            break;
        }
        if flips == max_rounds {
            break;
        }
        let a = bad[rng.gen_range(0..bad.len())];
        let mut best: Option<(usize, Vertex)> = None;
        for &b in g.neighbors(a) {
            let broken = g
                .neighbors(b)
                .iter()
                .filter(|&&x| in_a[x] && !violated(&ones, x))
                .filter(|&&x| {
                    let after = if side[b] { ones[x] - 1 } else { ones[x] + 1 };
                    after == 0 || after == g.degree(x)
                })
                .count();
            if best.is_none_or(|(k, _)| broken < k) {
                best = Some((broken, b));
            }
        }
        let (_, b) = best.expect("part A vertices have neighbors");
        for &x in g.neighbors(b) {
            if in_a[x] {
                if side[b] {
                    ones[x] -= 1;
                } else {
                    ones[x] += 1;
                }
            }
        }
        side[b] = !side[b];
        flips += 1;
    }

    let exact = !solved;
    if exact {
        exact_assignment(g, &a_list, &mut side)?;
    }
    let mut coloring = base.clone();
    for b in part_b.iter() {
        coloring.set(b, if side[b] { pair.1 } else { pair.0 });
    }
    Ok(TwoColoring {
        coloring,
        flips,
        exact,
    })
}

/// Backtracking over the neighbors of `part_a`; writes a satisfying
/// assignment into `side`.
fn exact_assignment(g: &Graph, a_list: &[Vertex], side: &mut [bool]) -> Result<()> {
    let relevant: VertexSet = a_list.iter().flat_map(|&a| g.neighbors(a).iter().copied()).collect();
    let order = relevant.to_vec();
    if order.len() > EXACT_LIMIT {
        return Err(Error::resource(format!(
            "two-coloring local search failed and {} constrained vertices exceed the exact limit {EXACT_LIMIT}",
            order.len()
        )));
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &b) in order.iter().enumerate() {
        pos[b] = i;
    }
    // constraints closing at each position
    let mut closing: Vec<Vec<Vertex>> = vec![Vec::new(); order.len()];
    for &a in a_list {
        let last = g.neighbors(a).iter().map(|&w| pos[w]).max().unwrap();
        closing[last].push(a);
    }
    let mut assign = vec![false; order.len()];
    let mut nodes = 0u64;
    // The two colors are interchangeable, so the first vertex is fixed.
    let found = search(g, &order, &pos, &closing, &mut assign, 0, &mut nodes)?;
    if !found {
        return Err(Error::Infeasible(
            "no two-coloring of part B lets every part A vertex see both colors".into(),
        ));
    }
    for (i, &b) in order.iter().enumerate() {
        side[b] = assign[i];
    }
    Ok(())
}

fn search(
    g: &Graph,
    order: &[Vertex],
    pos: &[usize],
    closing: &[Vec<Vertex>],
    assign: &mut [bool],
    idx: usize,
    nodes: &mut u64,
) -> Result<bool> {
    if idx == order.len() {
        return Ok(true);
    }
    let choices: &[bool] = if idx == 0 { &[false] } else { &[false, true] };
    for &val in choices {
        *nodes += 1;
        if *nodes > EXACT_NODE_CAP {
            return Err(Error::resource("two-coloring exact search node cap reached"));
        }
        assign[idx] = val;
        let ok = closing[idx].iter().all(|&a| {
            let ns = g.neighbors(a);
            let first = assign[pos[ns[0]]];
            ns.iter().any(|&w| assign[pos[w]] != first)
        });
        if ok && search(g, order, pos, closing, assign, idx + 1, nodes)? {
            return Ok(true);
        }
    }
    Ok(false)
}
