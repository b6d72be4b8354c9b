//! Exact dynamic chromatic number by backtracking over a static vertex
//! order, checking each vertex's neighborhood as soon as it is fully
//! colored.

use super::{optimal_coloring, with_bounds, Meter, OracleBudget};
use crate::coloring::{Color, Coloring};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::repair::lemma6_fresh_color_repair;

pub fn dynamic_chromatic_number(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    Ok(optimal_dynamic_coloring(g, budget)?.count_colors())
}

/// A dynamic coloring with exactly χ₂(G) colors, using ids `1..=χ₂`.
///
/// Only vertices of degree at least 2 carry the neighborhood constraint.
pub fn optimal_dynamic_coloring(g: &Graph, budget: &OracleBudget) -> Result<Coloring> {
    budget.check_size(g, "dynamic chromatic number")?;
    if g.n() == 0 {
        return Coloring::new(Vec::new());
    }
    let base = optimal_coloring(g, budget)?;
    let chi = base.count_colors();
    // A vertex of degree >= 2 plus two distinct neighbor colors.
    let lower = if g.max_degree() >= 2 { chi.max(3) } else { chi };
    let witness = lemma6_fresh_color_repair(g, &base)?.compacted();
    let upper = witness.count_colors();

    let order = constraint_order(g);
    let mut meter = Meter::new(budget, "dynamic chromatic number");
    for k in lower..upper {
        let mut search = Search {
            g,
            order: &order,
            k: k as Color,
            colors: vec![0; g.n()],
            uncolored: g.vertices().map(|v| g.degree(v)).collect(),
        };
        let found = search
            .extend(0, 0, &mut meter)
            .map_err(|e| with_bounds(e, k, upper))?;
        if found {
            return Coloring::new(search.colors);
        }
    }
    Ok(witness)
}

/// Greedy static order that completes neighborhoods early: prefer vertices
/// that finish the most neighborhoods, then those with the most placed
/// neighbors, then high degree, then low id.
fn constraint_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut pending: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let closes = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| pending[w] == 1 && g.degree(w) >= 2)
                    .count();
                let near = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (closes, near, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[v] = true;
        for &w in g.neighbors(v) {
            pending[w] -= 1;
        }
        order.push(v);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    order: &'a [Vertex],
    k: Color,
    colors: Vec<Color>,
    /// Number of uncolored neighbors per vertex.
    uncolored: Vec<usize>,
}

impl Search<'_> {
    fn closed_monochromatic(&self, w: Vertex) -> bool {
        let ns = self.g.neighbors(w);
        ns.len() >= 2 && ns[1..].iter().all(|&u| self.colors[u] == self.colors[ns[0]])
    }

    fn extend(&mut self, depth: usize, max_used: Color, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        let Some(&v) = self.order.get(depth) else {
            return Ok(true);
        };
        let g = self.g;
        let mut forbidden = 0u128;
        for &u in g.neighbors(v) {
            if self.colors[u] != 0 {
                forbidden |= 1u128 << self.colors[u];
            }
        }
        for &w in g.neighbors(v) {
            self.uncolored[w] -= 1;
        }
        let mut found = false;
        for c in 1..=self.k.min(max_used + 1) {
            if forbidden & (1u128 << c) != 0 {
                continue;
            }
            self.colors[v] = c;
            let ok = g
                .neighbors(v)
                .iter()
                .all(|&w| self.uncolored[w] != 0 || !self.closed_monochromatic(w));
            if ok && self.extend(depth + 1, max_used.max(c), meter)? {
                found = true;
                break;
            }
        }
        if !found {
            self.colors[v] = 0;
            for &w in g.neighbors(v) {
                self.uncolored[w] += 1;
            }
        }
        Ok(found)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_dynamic;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// Smallest k admitting a dynamic k-coloring, by enumerating all maps.
    fn brute_chi2(g: &Graph) -> usize {
        let n = g.n() as u32;
        (1..=g.n())
            .find(|&k| {
                (0..(k as u64).pow(n)).any(|code| {
                    let mut x = code;
                    let cs: Vec<Color> = (0..n)
                        .map(|_| {
                            let c = (x % k as u64) as Color + 1;
                            x /= k as u64;
                            c
                        })
                        .collect();
                    is_dynamic(g, &Coloring::new(cs).unwrap())
                })
            })
            .unwrap()
    }

    #[test]
    fn cycle_values() {
        let b = OracleBudget::default();
        assert_eq!(dynamic_chromatic_number(&cycle(5), &b).unwrap(), 5);
        assert_eq!(dynamic_chromatic_number(&cycle(4), &b).unwrap(), 4);
        assert_eq!(dynamic_chromatic_number(&cycle(6), &b).unwrap(), 3);
    }

    #[test]
    fn complete_graphs() {
        let b = OracleBudget::default();
        for n in 1..=6 {
            assert_eq!(dynamic_chromatic_number(&complete(n), &b).unwrap(), n);
        }
    }

    #[test]
    fn matches_enumeration() {
        let b = OracleBudget::default();
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        for g in [cycle(7), star, p4.clone(), cycle(3).disjoint_union(&p4)] {
            let c = optimal_dynamic_coloring(&g, &b).unwrap();
            assert!(is_dynamic(&g, &c));
            assert_eq!(c.count_colors(), brute_chi2(&g), "{g:?}");
        }
    }
}
