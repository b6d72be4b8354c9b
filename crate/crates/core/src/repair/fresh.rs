use crate::coloring::{bad_vertices, is_bad_vertex, is_proper, Coloring, FreshColors};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Makes a proper coloring dynamic by giving, for each bad vertex in
/// ascending order, its lowest-id neighbor a brand-new color. Vertices
/// already fixed by an earlier recoloring are skipped.
pub fn lemma6_fresh_color_repair(g: &Graph, c: &Coloring) -> Result<Coloring> {
    let mut fresh = FreshColors::after(c);
    Ok(lemma6_repair_with(g, c, &mut fresh)?.0)
}

/// As [`lemma6_fresh_color_repair`], drawing from `fresh`. Returns the
/// repaired coloring and the number of fresh colors consumed.
pub fn lemma6_repair_with(
    g: &Graph,
    c: &Coloring,
    fresh: &mut FreshColors,
) -> Result<(Coloring, usize)> {
    c.check_len(g)?;
    if !is_proper(g, c) {
        return Err(Error::input("fresh-color repair needs a proper coloring"));
    }
    if fresh.peek() <= c.max_color() {
        return Err(Error::input(format!(
            "fresh colors start at {} but the coloring already uses {}",
            fresh.peek(),
            c.max_color()
        )));
    }
    let mut out = c.clone();
    let mut used = 0;
    for v in bad_vertices(g, c).iter() {
        if !is_bad_vertex(g, &out, v) {
            continue;
        }
        out.set(g.neighbors(v)[0], fresh.next_color());
        used += 1;
    }
    Ok((out, used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_dynamic;

    fn col(cs: &[u32]) -> Coloring {
        Coloring::new(cs.to_vec()).unwrap()
    }

    #[test]
    fn path_end_recolored() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(lemma6_fresh_color_repair(&p3, &col(&[1, 2, 1])).unwrap(), col(&[3, 2, 1]));
    }

    #[test]
    fn four_cycle_within_bound() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let out = lemma6_fresh_color_repair(&c4, &col(&[1, 2, 1, 2])).unwrap();
        assert!(is_dynamic(&c4, &out));
        assert!(out.count_colors() <= 6);
    }

    #[test]
    fn dynamic_input_unchanged() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = col(&[1, 2, 3]);
        assert_eq!(lemma6_fresh_color_repair(&k3, &c).unwrap(), c);
    }

    #[test]
    fn rejects_improper_and_stale_fresh() {
        let p2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(lemma6_fresh_color_repair(&p2, &col(&[1, 1])).is_err());
        let mut stale = FreshColors::starting_at(2);
        assert!(lemma6_repair_with(&p2, &col(&[1, 2]), &mut stale).is_err());
    }
}
