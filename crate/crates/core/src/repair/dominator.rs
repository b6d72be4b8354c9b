use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// An independent set `t2` dominating the input set `t1` while sharing few
/// vertices with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    pub t2: VertexSet,
    /// Selected dominators outside `t1`.
    pub t4: VertexSet,
    /// `t1 ∩ t2`: the part of `t1` nobody selected dominates.
    pub t3_residual: VertexSet,
    /// Total number of `t1` vertices dominated by `t4`.
    pub s: usize,
    /// `(vertex, count)` per iteration: the chosen dominator and how many
    /// still-undominated `t1` vertices it covered.
    pub trace: Vec<(Vertex, usize)>,
}

/// Counter-based selection of dominators. Every `u ∈ N(t1)` carries
/// `f(u) = |N(u) ∩ T₃|` where `T₃` starts as `t1`; the largest counter is
/// taken (lowest id on ties), its neighbors in `N(t1)` are retired, and the
/// counters of the remaining candidates drop by the `T₃` vertices just
/// covered. Retired counters stay at zero.
///
/// The result satisfies `2Δ·|t1 ∩ t2| <= (2Δ − δ)·|t1|`.
pub fn lemma4_independent_dominator(g: &Graph, t1: &VertexSet) -> Result<DominationResult> {
    t1.validate(g.n())?;
    if t1.is_empty() {
        return Err(Error::input("dominator input set is empty"));
    }
    if g.m() == 0 {
        return Err(Error::input("dominator needs a graph with at least one edge"));
    }
    if !g.is_independent(t1) {
        return Err(Error::input("dominator input set is not independent"));
    }
    if let Some(v) = t1.iter().find(|&v| g.degree(v) == 0) {
        return Err(Error::input(format!(
            "vertex {v} of the dominator input has degree 0"
        )));
    }

    let n = g.n();
    let mut in_t3 = vec![false; n];
    for v in t1 {
        in_t3[v] = true;
    }
    let candidates = g.neighborhood_of_set(t1)?;
    let mut is_candidate = vec![false; n];
    let mut f = vec![0usize; n];
    for u in candidates.iter() {
        is_candidate[u] = true;
        f[u] = g.neighbors(u).iter().filter(|&&w| in_t3[w]).count();
    }

    let mut t4 = VertexSet::new();
    let mut trace = Vec::new();
    let mut s = 0;
    loop {
        let mut best: Option<Vertex> = None;
        for u in candidates.iter() {
            if f[u] > 0 && best.is_none_or(|b| f[u] > f[b]) {
                best = Some(u);
            }
        }
        let Some(u) = best else { break };
        let t = f[u];
        t4.insert(u);
        trace.push((u, t));
        s += t;

        f[u] = 0;
        for &v in g.neighbors(u) {
            if is_candidate[v] {
                f[v] = 0;
            }
        }
        for &x in g.neighbors(u) {
            if !in_t3[x] {
                continue;
            }
            for &v in g.neighbors(x) {
                if v != u && is_candidate[v] && f[v] > 0 && !g.has_edge(u, v) {
                    f[v] -= 1;
                }
            }
        }
        for &x in g.neighbors(u) {
            in_t3[x] = false;
        }
    }

    let t3_residual: VertexSet = t1.iter().filter(|&v| in_t3[v]).collect();
    let t2 = t4.union(&t3_residual);
    let result = DominationResult {
        t2,
        t4,
        t3_residual,
        s,
        trace,
    };
    check_result(g, t1, &result)?;
    Ok(result)
}

fn check_result(g: &Graph, t1: &VertexSet, r: &DominationResult) -> Result<()> {
    let fail = |what: &str| Err(Error::Consistency(format!("dominator: {what}")));
    if !r.t4.is_disjoint(&r.t3_residual) || r.t2 != r.t4.union(&r.t3_residual) {
        return fail("t2 is not the disjoint union of t4 and the residual");
    }
    if !g.is_independent(&r.t2) {
        return fail("t2 is not independent");
    }
    let outside = t1.difference(&r.t2);
    if !g.dominates(&r.t4, &outside) {
        return fail("some input vertex is neither kept nor dominated");
    }
    if r.s != t1.len() - r.t3_residual.len() || r.s != r.trace.iter().map(|t| t.1).sum::<usize>()
    {
        return fail("dominated count does not balance");
    }
    let (min_d, max_d) = g.min_max_degree()?;
    if 2 * max_d * r.t3_residual.len() > (2 * max_d - min_d) * t1.len() {
        return fail("residual exceeds the (2Δ−δ)/(2Δ) fraction");
    }
    Ok(())
}
