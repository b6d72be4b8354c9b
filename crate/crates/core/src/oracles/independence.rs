//! Maximum independent set by branch and bound on adjacency bitmasks, with a
//! greedy clique cover as the upper bound.

use super::Meter;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::oracles::OracleBudget;

pub fn independence_number(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    Ok(maximum_independent_set(g, budget)?.len())
}

pub fn maximum_independent_set(g: &Graph, budget: &OracleBudget) -> Result<VertexSet> {
    budget.check_size(g, "independence number")?;
    let adj = g.masks().expect("size checked");
    let mut meter = Meter::new(budget, "independence number");
    let all = if g.n() == 128 { u128::MAX } else { (1u128 << g.n()) - 1 };
    let mut best = 0u128;
    search(&adj, all, 0, &mut best, &mut meter)?;
    Ok(bits(best))
}

/// ω(G) = α(Ḡ).
pub fn clique_number(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    Ok(maximum_clique(g, budget)?.len())
}

pub fn maximum_clique(g: &Graph, budget: &OracleBudget) -> Result<VertexSet> {
    maximum_independent_set(&g.complement(), budget)
}

fn bits(mut mask: u128) -> VertexSet {
    let mut out = VertexSet::new();
    while mask != 0 {
        out.insert(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn search(adj: &[u128], cand: u128, cur: u128, best: &mut u128, meter: &mut Meter) -> Result<()> {
    meter.tick()?;
    // Vertices isolated within the candidate set always belong to some
    // maximum independent set extending `cur`.
    let mut free = 0u128;
    let mut rest = cand;
    let mut pivot: Option<(u32, usize)> = None;
    let mut scan = cand;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let d = (adj[v] & cand).count_ones();
        if d == 0 {
            free |= 1 << v;
            rest &= !(1 << v);
        } else if pivot.is_none_or(|(pd, _)| d > pd) {
            pivot = Some((d, v));
        }
    }
    let cur = cur | free;
    let Some((_, v)) = pivot else {
        if cur.count_ones() > best.count_ones() {
            *best = cur;
        }
        return Ok(());
    };
    if cur.count_ones() + clique_cover(adj, rest) <= best.count_ones() {
        return Ok(());
    }
    let bit = 1u128 << v;
    search(adj, rest & !adj[v] & !bit, cur | bit, best, meter)?;
    search(adj, rest & !bit, cur, best, meter)
}

/// Size of a greedy partition of `set` into cliques; bounds the independence
/// number of `G[set]` from above.
fn clique_cover(adj: &[u128], mut set: u128) -> u32 {
    let mut cliques = 0;
    while set != 0 {
        let v = set.trailing_zeros() as usize;
        set &= !(1 << v);
        let mut common = adj[v] & set;
        while common != 0 {
            let u = common.trailing_zeros() as usize;
            set &= !(1 << u);
            common &= adj[u] & !(1 << u);
        }
        cliques += 1;
    }
    cliques
}
