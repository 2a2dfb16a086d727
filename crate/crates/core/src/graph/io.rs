//! Edge-list text format.
//!
//! ```text
//! # comment
//! n m
//! u v [w]
//! ```
//!
//! Vertices are 0-based, `#` starts a comment anywhere on a line, and the
//! optional weight is an integer, a fraction `p/q` or a decimal. Either every
//! edge carries a weight or none does.

use std::fmt::Write as _;
use std::path::Path;

use super::{Graph, Rational};
use crate::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            msg: format!("expected `n m`, got {header:?}"),
        });
    }
    let n = parse_usize(head[0], hline)?;
    let m = parse_usize(head[1], hline)?;

    let mut edges = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    let mut weighted: Option<bool> = None;
    for (line, text) in lines {
        let cols: Vec<&str> = text.split_whitespace().collect();
        if cols.len() != 2 && cols.len() != 3 {
            return Err(Error::Parse {
                line,
                msg: format!("expected `u v [w]`, got {text:?}"),
            });
        }
        let has_w = cols.len() == 3;
        if *weighted.get_or_insert(has_w) != has_w {
            return Err(Error::Parse {
                line,
                msg: "weights must be given on every edge or on none".into(),
            });
        }
        edges.push((parse_usize(cols[0], line)?, parse_usize(cols[1], line)?));
        if has_w {
            let w = parse_rational(cols[2]).map_err(|msg| Error::Parse { line, msg })?;
            weights.push(w);
        }
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    if weighted == Some(true) {
        Graph::with_weights(n, edges, weights)
    } else {
        Graph::new(n, edges)
    }
}

fn parse_usize(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a nonnegative integer, got {s:?}"),
    })
}

/// Parses `7`, `3/2` or `1.25` exactly.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("invalid weight {s:?}");
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let denom = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        let mag = int
            .abs()
            .checked_mul(denom)
            .and_then(|x| x.checked_add(frac))
            .ok_or_else(bad)?;
        let numer = if negative { -mag } else { mag };
        return Ok(Rational::new(numer, denom));
    }
    s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad())
}

pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.n(), graph.m());
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        match graph.weights() {
            Some(ws) => writeln!(out, "{u} {v} {}", ws[e]).unwrap(),
            None => writeln!(out, "{u} {v}").unwrap(),
        }
    }
    out
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn write_edge_list(graph: &Graph, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_edge_list(graph))?;
    Ok(())
}
