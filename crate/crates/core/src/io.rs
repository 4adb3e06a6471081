//! DIMACS edge files and edge-coloring files.
//!
//! Both formats are 1-based on disk. See FORMATS.md for the grammar.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};

/// A parsed DIMACS file: the graph plus `key=value` pairs found in `c` lines.
#[derive(Clone, Debug)]
pub struct DimacsFile {
    pub graph: Graph,
    pub meta: BTreeMap<String, String>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn collect_meta(rest: &str, meta: &mut BTreeMap<String, String>) {
    for tok in rest.split_whitespace() {
        if let Some((k, v)) = tok.split_once('=') {
            meta.insert(k.to_string(), v.to_string());
        }
    }
}

fn parse_vertex(tok: Option<&str>, line: usize, n: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing vertex id"))?;
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("bad vertex id {tok:?}")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_dimacs(text: &str) -> Result<DimacsFile> {
    let mut meta = BTreeMap::new();
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        let mut toks = s.split_whitespace();
        match toks.next() {
            Some("c") => collect_meta(&s[1..], &mut meta),
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                let kind = toks.next();
                if kind != Some("edge") && kind != Some("col") {
                    return Err(parse_err(line, "expected `p edge <nv> <ne>`"));
                }
                let nv = toks.next().and_then(|t| t.parse().ok());
                let ne = toks.next().and_then(|t| t.parse().ok());
                match (nv, ne) {
                    (Some(nv), Some(ne)) => header = Some((nv, ne)),
                    _ => return Err(parse_err(line, "expected `p edge <nv> <ne>`")),
                }
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = parse_vertex(toks.next(), line, n)?;
                let v = parse_vertex(toks.next(), line, n)?;
                edges.push((u, v));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type {other:?}"))),
            None => {}
        }
    }
    let (n, ne) = header.ok_or_else(|| parse_err(0, "missing problem line"))?;
    if edges.len() != ne {
        return Err(parse_err(
            0,
            format!("header declares {ne} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, edges)?;
    Ok(DimacsFile { graph, meta })
}

/// Writes `g` in DIMACS edge format. `meta` goes into one leading `c` line.
pub fn write_dimacs(g: &Graph, meta: &[(&str, String)]) -> String {
    let mut out = String::new();
    if !meta.is_empty() {
        out.push('c');
        for (k, v) in meta {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses a coloring file. The `c k=<count>` comment is mandatory.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let mut meta = BTreeMap::new();
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        if let Some(rest) = s.strip_prefix('c') {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                collect_meta(rest, &mut meta);
                continue;
            }
        }
        let nums: Vec<u64> = s
            .split_whitespace()
            .map(|t| t.parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(line, "expected `<u> <v> <color>`"))?;
        if nums.len() != 3 {
            return Err(parse_err(line, "expected `<u> <v> <color>`"));
        }
        if nums[0] == 0 || nums[1] == 0 || nums[2] == 0 {
            return Err(parse_err(line, "vertex ids and colors are 1-based"));
        }
        if nums[0] == nums[1] {
            return Err(parse_err(line, "self-loop"));
        }
        rows.push((line, nums[0] as usize - 1, nums[1] as usize - 1, nums[2] as u32));
    }
    let k: u32 = meta
        .get("k")
        .ok_or_else(|| parse_err(0, "missing `c k=<declared_color_count>` comment"))?
        .parse()
        .map_err(|_| parse_err(0, "k is not an integer"))?;
    let mut c = EdgeColoring::new(k);
    for (line, u, v, col) in rows {
        if c.get(u, v).is_some() {
            return Err(parse_err(line, "edge colored twice"));
        }
        c.set(u, v, col);
    }
    Ok(c)
}

/// Writes a coloring in `u v color` form, edges in sorted order.
pub fn write_coloring(c: &EdgeColoring, meta: &[(&str, String)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "c k={}", c.declared_color_count());
    if !meta.is_empty() {
        out.push('c');
        for (k, v) in meta {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
    }
    for ((u, v), col) in c.iter() {
        let _ = writeln!(out, "{} {} {col}", u + 1, v + 1);
    }
    out
}

/// Parses whitespace separated 1-based vertex ids, one sequence per line.
/// Blank lines and `c`/`#` comment lines are skipped.
pub fn parse_vertex_lists(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') || s == "c" || s.starts_with("c ") {
            continue;
        }
        let s = s.split_once(':').map_or(s, |(_, rest)| rest);
        let mut seq = Vec::new();
        for tok in s.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(i + 1, format!("bad vertex id {tok:?}")))?;
            if v == 0 {
                return Err(parse_err(i + 1, "vertex ids are 1-based"));
            }
            seq.push(v - 1);
        }
        out.push(seq);
    }
    Ok(out)
}

pub fn write_vertex_list(seq: &[usize]) -> String {
    let parts: Vec<String> = seq.iter().map(|v| (v + 1).to_string()).collect();
    parts.join(" ")
}
