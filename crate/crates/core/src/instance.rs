//! Line-oriented instance files.
//!
//! Format: line 1 `n m`; line 2: `n` space-separated integer weights;
//! then `m` lines `u v` with `u < v`, 0-based ids. Lines starting with
//! `#` are comments. UTF-8, LF endings.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn load_instance(text: &str) -> Result<Graph> {
    // (1-based line number, content) with comments and blanks skipped
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty instance"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(hline, "header must be 'n m'"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(hline, "header must be 'n m'"))?;
    if it.next().is_some() {
        return Err(parse_err(hline, "trailing tokens in header"));
    }
    if n == 0 {
        return Err(parse_err(hline, "n must be >= 1"));
    }

    let (wline, wtext) = lines
        .next()
        .ok_or_else(|| parse_err(hline, "missing weights line"))?;
    let weights: Vec<u64> = wtext
        .split_whitespace()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| parse_err(wline, format!("bad weight '{t}'")))
        })
        .collect::<Result<_>>()?;
    if weights.len() != n {
        return Err(parse_err(
            wline,
            format!("expected {} weights, got {}", n, weights.len()),
        ));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..m {
        let (eline, etext) = lines
            .next()
            .ok_or_else(|| parse_err(wline, format!("expected {m} edge lines")))?;
        let mut it = etext.split_whitespace();
        let parse = |t: Option<&str>| -> Result<u32> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(eline, "edge line must be 'u v'"))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(parse_err(eline, "trailing tokens on edge line"));
        }
        if u >= v {
            return Err(parse_err(eline, format!("edge ({u},{v}) must have u < v")));
        }
        if v as usize >= n {
            return Err(parse_err(eline, format!("endpoint {v} out of range 0..{n}")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(eline, format!("duplicate edge ({u},{v})")));
        }
        edges.push((u, v));
    }
    if let Some((eline, _)) = lines.next() {
        return Err(parse_err(eline, "unexpected extra line"));
    }
    Graph::new(n, weights, edges)
}

pub fn save_instance(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    let ws: Vec<String> = g.weights().iter().map(|w| w.to_string()).collect();
    out.push_str(&ws.join(" "));
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::rational::Rational;

    #[test]
    fn loads_k3() {
        let g = load_instance("3 3\n1 1 1\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.weights(), &[1, 1, 1]);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let g = load_instance("# a triangle\n3 3\n\n1 2 3\n0 1\n# middle\n0 2\n1 2\n").unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.weight(2), 3);
    }

    #[test]
    fn duplicate_edge_names_line() {
        let err = load_instance("3 3\n1 1 1\n0 1\n0 1\n1 2\n").unwrap_err();
        match err {
            crate::error::Error::Parse { line, msg } => {
                assert_eq!(line, 4);
                assert!(msg.contains("duplicate"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(load_instance("").is_err());
        assert!(load_instance("3\n1 1 1\n").is_err());
        assert!(load_instance("2 1\n1 1\n1 0\n").is_err()); // u >= v
        assert!(load_instance("2 1\n1 1\n0 5\n").is_err()); // out of range
        assert!(load_instance("2 0\n1\n").is_err()); // wrong weight count
    }

    #[test]
    fn round_trip_random_graph() {
        let g = gen::gnp(20, Rational::new(3, 10).unwrap(), 7).unwrap();
        let g = gen::random_weights(&g, 1, 9, 8).unwrap();
        assert_eq!(load_instance(&save_instance(&g)).unwrap(), g);
    }
}
