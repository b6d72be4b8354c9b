//! DIMACS `.col` graph files: `c` comments, one `p edge n m` header and
//! `e u v` lines with 1-based vertex ids.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err("second problem line".into()));
                }
                if fields.len() != 4 || !matches!(fields[1], "edge" | "col") {
                    return Err(err(format!("expected `p edge N M`, got `{}`", raw.trim())));
                }
                let n = parse_count(fields[2]).map_err(&err)?;
                let m = parse_count(fields[3]).map_err(&err)?;
                header = Some((n, m, line_no));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(err("edge line before the problem line".into()));
                };
                if fields.len() != 3 {
                    return Err(err(format!("expected `e U V`, got `{}`", raw.trim())));
                }
                let u = parse_count(fields[1]).map_err(&err)?;
                let v = parse_count(fields[2]).map_err(&err)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m, line)) = header else {
        return Err(Error::Parse {
            line: 0,
            message: "missing `p edge N M` line".into(),
        });
    };
    let g = Graph::from_edges(n, edges)?;
    if g.m() != m {
        log::warn!(
            "problem line {line} declares {m} edges but {} distinct edges were read",
            g.m()
        );
    }
    Ok(g)
}

fn parse_count(s: &str) -> std::result::Result<usize, String> {
    s.parse().map_err(|_| format!("`{s}` is not a non-negative integer"))
}

/// Header plus one `e` line per edge in ascending order.
pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
