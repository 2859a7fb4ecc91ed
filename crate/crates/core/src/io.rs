//! Text formats: DIMACS graphs, plain edge lists and DIMACS CNF.

use std::fmt::Write as _;

use crate::cnf::CnfFormula;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('c') || line.starts_with('#')
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("{what} `{tok}` is not a valid number")))
}

/// Parses either a DIMACS graph (`p edge n m`, 1-indexed `e u v` lines) or a
/// plain edge list (first line `n m`, then 0-indexed `u v` lines). The format
/// is chosen by the first non-comment line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .enumerate()
        .find(|(_, l)| !is_comment(l));
    match first {
        None => Err(Error::parse(1, "no header found")),
        Some((_, l)) if l.starts_with('p') => parse_dimacs_graph(text),
        Some((i, l)) if l.starts_with('e') => Err(Error::parse(
            i + 1,
            "edge line before the `p edge <n> <m>` header",
        )),
        Some(_) => parse_edge_list(text),
    }
}

fn parse_dimacs_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(Error::parse(line_no, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            line_no,
                            format!("expected `p edge`, found `p {}`", other.unwrap_or("")),
                        ))
                    }
                }
                n = Some(parse_num(toks.next(), line_no, "vertex count")?);
                let _m: usize = parse_num(toks.next(), line_no, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| Error::parse(line_no, "edge line before header"))?;
                let u: usize = parse_num(toks.next(), line_no, "endpoint")?;
                let v: usize = parse_num(toks.next(), line_no, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::parse(
                        line_no,
                        format!("vertex id out of range 1..={n} in edge ({u}, {v})"),
                    ));
                }
                if u == v {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(tok) => {
                return Err(Error::parse(line_no, format!("unexpected line type `{tok}`")))
            }
            None => {}
        }
    }
    let n = n.ok_or_else(|| Error::parse(1, "missing `p edge <n> <m>` header"))?;
    Graph::new(n, &edges)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        let mut toks = line.split_whitespace();
        let a: usize = parse_num(toks.next(), line_no, "integer")?;
        let b: usize = parse_num(toks.next(), line_no, "integer")?;
        if toks.next().is_some() {
            return Err(Error::parse(line_no, "expected exactly two integers"));
        }
        match n {
            None => n = Some(a),
            Some(n) => {
                if a >= n || b >= n {
                    return Err(Error::parse(
                        line_no,
                        format!("vertex id out of range 0..{n} in edge ({a}, {b})"),
                    ));
                }
                if a == b {
                    return Err(Error::parse(line_no, format!("self-loop at vertex {a}")));
                }
                edges.push((a, b));
            }
        }
    }
    Graph::new(n.unwrap_or(0), &edges)
}

/// Parses DIMACS CNF. Every clause must have exactly three literals.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('%') {
            break;
        }
        if is_comment(line) {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate problem line"));
            }
            let mut toks = line.split_whitespace().skip(1);
            if toks.next() != Some("cnf") {
                return Err(Error::parse(line_no, "expected `p cnf <vars> <clauses>`"));
            }
            let nv = parse_num(toks.next(), line_no, "variable count")?;
            let nc = parse_num(toks.next(), line_no, "clause count")?;
            header = Some((nv, nc));
            continue;
        }
        let (nv, _) = header.ok_or_else(|| Error::parse(line_no, "clause before header"))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("`{tok}` is not a literal")))?;
            if x == 0 {
                rows.push(std::mem::take(&mut current));
            } else {
                if x.unsigned_abs() as usize > nv {
                    return Err(Error::parse(
                        line_no,
                        format!("literal {x} outside variables 1..={nv}"),
                    ));
                }
                current.push(x);
            }
        }
    }
    if !current.is_empty() {
        rows.push(current);
    }
    let (nv, _) = header.ok_or_else(|| Error::parse(1, "missing `p cnf` header"))?;
    CnfFormula::from_signed(nv, &rows)
}

/// DIMACS graph text, 1-indexed.
pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn write_cnf(f: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for c in f.clauses() {
        let _ = writeln!(
            s,
            "{} {} {} 0",
            c[0].to_signed(),
            c[1].to_signed(),
            c[2].to_signed()
        );
    }
    s
}
