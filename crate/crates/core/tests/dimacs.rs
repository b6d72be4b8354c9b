use dynchrome::constructions::{
    complete, complete_bipartite, cube_q3, cycle, gab_graph, matching_lower_bound_graph, path, petersen, prop2_graph,
    random_regular, two_subdivision,
};
use dynchrome::dimacs::{emit_dimacs, parse_dimacs};
use dynchrome::{Error, Graph};

fn corpus() -> Vec<Graph> {
    vec![
        cycle(9).unwrap(),
        path(6).unwrap(),
        complete(7),
        complete_bipartite(2, 5),
        petersen(),
        cube_q3(),
        gab_graph(7, 3).unwrap(),
        prop2_graph(5, 4).unwrap(),
        two_subdivision(&complete(6)),
        matching_lower_bound_graph(4).unwrap(),
        random_regular(30, 5, 11).unwrap(),
        Graph::empty(3),
    ]
}

#[test]
fn generator_corpus_round_trips() {
    for g in corpus() {
        let text = emit_dimacs(&g);
        assert_eq!(parse_dimacs(&text).unwrap(), g);
        assert_eq!(emit_dimacs(&parse_dimacs(&text).unwrap()), text);
    }
}

#[test]
fn accepts_comments_col_header_and_duplicate_edges() {
    let text = "c a triangle\np col 3 4\ne 1 2\ne 2 3\nc mid-file comment\ne 3 1\ne 2 1\n";
    let g = parse_dimacs(text).unwrap();
    assert_eq!(g, complete(3));
}

#[test]
fn reports_the_offending_line() {
    let cases = [
        ("p edge 3 1\ne 1 4\n", 2),
        ("p edge 3 1\ne 2 2\n", 2),
        ("p edge 2 1\ne 1 x\n", 2),
        ("c only\np edge two 1\n", 2),
    ];
    for (text, line) in cases {
        match parse_dimacs(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: expected a parse error, got {other:?}"),
        }
    }
    assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { .. })));
    assert!(matches!(parse_dimacs(""), Err(Error::Parse { line: 0, .. })));
}
