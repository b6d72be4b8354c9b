use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order the exhaustive enumeration accepts.
const MAX_ENUMERATION_ORDER: usize = 8;

/// A canonical relabeling of `g` (n ≤ 11) and its adjacency code. Two
/// graphs are isomorphic iff their codes are equal.
///
/// Vertices are first split into cells by color refinement; the code is
/// the smallest upper-triangle adjacency word over all orderings that list
/// the cells in refinement order.
pub fn canonical_form(g: &Graph) -> (u64, Graph) {
    let n = g.n();
    assert!(n <= 11, "canonical form supports at most 11 vertices");
    let cells = refine(g);
    let mut search = Canon {
        g,
        cells: &cells,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        total_bits: n * n.saturating_sub(1) / 2,
        best: None,
    };
    search.run(0, 0, 0);
    let (code, perm) = search.best.unwrap_or((0, Vec::new()));
    let mut position = vec![0; n];
    for (p, &v) in perm.iter().enumerate() {
        position[v] = p;
    }
    let relabeled = Graph::from_edges(n, g.edges().map(|(u, v)| (position[u], position[v]))).unwrap();
    (code, relabeled)
}

/// Vertices grouped by stable color-refinement class, classes in a
/// label-independent order.
fn refine(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut color: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = g
            .vertices()
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
                ns.sort_unstable();
                (color[v], ns)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let classes_before = {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let stable = distinct.len() == classes_before;
        color = next;
        if stable {
            break;
        }
    }
    let k = color.iter().copied().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); k];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

struct Canon<'a> {
    g: &'a Graph,
    cells: &'a [Vec<Vertex>],
    order: Vec<Vertex>,
    used: Vec<bool>,
    total_bits: usize,
    best: Option<(u64, Vec<Vertex>)>,
}

impl Canon<'_> {
    fn run(&mut self, cell: usize, code: u64, bits: usize) {
        if let Some((best, _)) = &self.best {
            if code > best >> (self.total_bits - bits) {
                return;
            }
        }
        if self.order.len() == self.g.n() {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let mut cell = cell;
        while self.cells[cell].iter().all(|&v| self.used[v]) {
            cell += 1;
        }
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used[v] {
                continue;
            }
            let mut next = code;
            for &u in &self.order {
                next = (next << 1) | self.g.has_edge(u, v) as u64;
            }
            let added = self.order.len();
            self.used[v] = true;
            self.order.push(v);
            self.run(cell, next, bits + added);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Every graph on `n` vertices up to isomorphism, in canonical labeling,
/// sorted by canonical code. Supports `n <= 8`.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::input(format!(
            "enumeration supports at most {MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            let base: Vec<(Vertex, Vertex)> = g.edges().collect();
            for mask in 0u32..(1 << (k - 1)) {
                let new_edges = (0..k - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k - 1));
                let h = Graph::from_edges(k, base.iter().copied().chain(new_edges)).unwrap();
                let (code, canon) = canonical_form(&h);
                next.entry(code).or_insert(canon);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Every connected graph with `1..=max_n` vertices up to isomorphism,
/// ordered by vertex count, then canonical code.
pub fn all_connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(all_graphs(n)?.into_iter().filter(|g| g.is_connected()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[Vertex]) -> Graph {
        Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
    }

    #[test]
    fn known_counts() {
        // OEIS A000088 and A001349
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 1, 2, 6, 21, 112, 853];
        for n in 0..=7 {
            let gs = all_graphs(n).unwrap();
            assert_eq!(gs.len(), all[n], "n={n}");
            assert_eq!(gs.iter().filter(|g| g.is_connected()).count(), connected[n], "n={n}");
        }
        assert_eq!(all_connected_graphs(7).unwrap().len(), 996);
        assert!(all_graphs(9).is_err());
    }

    #[test]
    fn canonical_form_is_invariant() {
        let petersen = crate::constructions::petersen();
        let (code, canon) = canonical_form(&petersen);
        let perms: [[usize; 10]; 3] = [
            [9, 8, 7, 6, 5, 4, 3, 2, 1, 0],
            [1, 3, 5, 7, 9, 0, 2, 4, 6, 8],
            [4, 0, 8, 2, 6, 1, 9, 3, 7, 5],
        ];
        for p in perms {
            let (c2, canon2) = canonical_form(&relabel(&petersen, &p));
            assert_eq!(c2, code);
            assert_eq!(canon2, canon);
        }
        let (c5, _) = canonical_form(&crate::constructions::cycle(5).unwrap());
        let (p5, _) = canonical_form(&crate::constructions::path(5).unwrap());
        assert_ne!(c5, p5);
    }
}
