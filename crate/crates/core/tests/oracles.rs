//! Library oracles against exhaustive enumeration, written independently of
//! the search code they check.

use dynchrome::constructions::{
    all_graphs, complete, complete_bipartite, cube_q3, cycle, gab_graph, matching_lower_bound_graph, path, petersen,
    prop2_graph, two_subdivision,
};
use dynchrome::oracles::{
    chromatic_number, clique_number, dynamic_chromatic_number, independence_number, matching_number,
    optimal_dynamic_coloring, OracleBudget,
};
use dynchrome::coloring::is_dynamic;
use dynchrome::Graph;

fn budget() -> OracleBudget {
    OracleBudget::default()
}

/// Calls `f` on every assignment of `0..k` to `n` vertices until it returns true.
fn any_assignment(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut a = vec![0; n];
    loop {
        if f(&a) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

fn proper(g: &Graph, a: &[usize]) -> bool {
    g.edges().all(|(u, v)| a[u] != a[v])
}

fn dynamic(g: &Graph, a: &[usize]) -> bool {
    proper(g, a)
        && (0..g.n()).all(|v| {
            let ns = g.neighbors(v);
            ns.len() < 2 || ns.iter().any(|&u| a[u] != a[ns[0]])
        })
}

fn brute_chi(g: &Graph) -> usize {
    (1..).find(|&k| g.n() == 0 || any_assignment(g.n(), k, |a| proper(g, a))).unwrap()
}

fn brute_chi2(g: &Graph) -> usize {
    (1..).find(|&k| g.n() == 0 || any_assignment(g.n(), k, |a| dynamic(g, a))).unwrap()
}

fn brute_alpha(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn brute_omega(g: &Graph) -> usize {
    brute_alpha(&g.complement())
}

fn brute_matching(g: &Graph) -> usize {
    let edges: Vec<_> = g.edges().collect();
    (0u32..1 << edges.len())
        .filter(|&s| {
            let mut used = 0u32;
            (0..edges.len()).filter(|&i| s >> i & 1 == 1).all(|i| {
                let (u, v) = edges[i];
                let clash = used >> u & 1 == 1 || used >> v & 1 == 1;
                used |= 1 << u | 1 << v;
                !clash
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn every_graph_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_graphs(n).unwrap() {
            let b = budget();
            assert_eq!(chromatic_number(&g, &b).unwrap(), brute_chi(&g), "{g:?}");
            assert_eq!(dynamic_chromatic_number(&g, &b).unwrap(), brute_chi2(&g), "{g:?}");
            assert_eq!(independence_number(&g, &b).unwrap(), brute_alpha(&g), "{g:?}");
            assert_eq!(clique_number(&g, &b).unwrap(), brute_omega(&g), "{g:?}");
            if g.m() <= 15 {
                assert_eq!(matching_number(&g), brute_matching(&g), "{g:?}");
            }
            assert!(is_dynamic(&g, &optimal_dynamic_coloring(&g, &b).unwrap()));
        }
    }
}

#[test]
fn cycles_follow_the_residue_rule() {
    for n in 3..=16 {
        let expect = match n {
            5 => 5,
            _ if n % 3 == 0 => 3,
            _ => 4,
        };
        assert_eq!(dynamic_chromatic_number(&cycle(n).unwrap(), &budget()).unwrap(), expect, "C{n}");
    }
}

#[test]
fn named_graph_values() {
    let b = budget();
    let p = petersen();
    assert_eq!(chromatic_number(&p, &b).unwrap(), 3);
    assert_eq!(dynamic_chromatic_number(&p, &b).unwrap(), 4);
    assert_eq!(independence_number(&p, &b).unwrap(), 4);
    assert_eq!(matching_number(&p), 5);
    let q = cube_q3();
    assert_eq!(chromatic_number(&q, &b).unwrap(), 2);
    assert_eq!(dynamic_chromatic_number(&q, &b).unwrap(), 4);
    assert_eq!(dynamic_chromatic_number(&complete_bipartite(3, 3), &b).unwrap(), 4);
    assert_eq!(dynamic_chromatic_number(&complete_bipartite(1, 4), &b).unwrap(), 3);
    for n in 3..=7 {
        assert_eq!(dynamic_chromatic_number(&path(n).unwrap(), &b).unwrap(), 3);
        assert_eq!(dynamic_chromatic_number(&complete(n), &b).unwrap(), n);
    }
}

#[test]
fn small_family_members_against_enumeration() {
    let small = [
        gab_graph(2, 2).unwrap(),
        gab_graph(3, 2).unwrap(),
        prop2_graph(3, 3).unwrap(),
        two_subdivision(&complete(3)),
        matching_lower_bound_graph(3).unwrap(),
    ];
    for g in small.iter().filter(|g| g.n() <= 8) {
        let b = budget();
        assert_eq!(chromatic_number(g, &b).unwrap(), brute_chi(g), "{g:?}");
        assert_eq!(dynamic_chromatic_number(g, &b).unwrap(), brute_chi2(g), "{g:?}");
        assert_eq!(independence_number(g, &b).unwrap(), brute_alpha(g), "{g:?}");
    }
}

#[test]
fn degree_ratio_family_structure() {
    for (a, b) in [(2, 2), (3, 2), (5, 2), (4, 3), (6, 3), (7, 4)] {
        let g = gab_graph(a, b).unwrap();
        assert_eq!(g.min_degree(), b, "a={a} b={b}");
        assert_eq!(g.max_degree(), a + 1, "a={a} b={b}");
        let x = chromatic_number(&g, &budget()).unwrap();
        let y = dynamic_chromatic_number(&g, &budget()).unwrap();
        assert_eq!(y - x, (a + 1).div_ceil(b), "a={a} b={b}");
    }
}

#[test]
fn matching_replaced_family_structure() {
    for (a, b) in [(3, 3), (5, 3), (5, 4), (5, 5)] {
        let g = prop2_graph(a, b).unwrap();
        let x = chromatic_number(&g, &budget()).unwrap();
        let alpha = independence_number(&g, &budget()).unwrap();
        let y = dynamic_chromatic_number(&g, &budget()).unwrap();
        assert_eq!((x, alpha), (a, b), "a={a} b={b}");
        assert_eq!(y - x, alpha - 1, "a={a} b={b}");
    }
    assert!(prop2_graph(3, 2).is_err());
}
